#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace borbit {

// Dense boolean relation over 0..n-1, bit-packed rows.
struct Relation {
  int n = 0;
  int words = 0;
  std::vector<uint64_t> bits;

  Relation() = default;
  explicit Relation(int n_) : n(n_), words((n_ + 63) / 64), bits((size_t)n_ * ((n_ + 63) / 64), 0) {}

  bool get(int i, int j) const { return (bits[(size_t)i * words + j / 64] >> (j % 64)) & 1; }
  void set(int i, int j) { bits[(size_t)i * words + j / 64] |= uint64_t(1) << (j % 64); }
  uint64_t* row(int i) { return bits.data() + (size_t)i * words; }
  const uint64_t* row(int i) const { return bits.data() + (size_t)i * words; }
  void set_diagonal() {
    for (int i = 0; i < n; ++i) set(i, i);
  }
  std::vector<int> row_list(int i) const;

  bool operator==(const Relation&) const = default;
};

// Warshall closure over bit rows. The parallel kernel distributes the row
// updates for each pivot; the serial version is the reference.
void transitive_close_serial(Relation& r);
void transitive_close_parallel(Relation& r);
inline void transitive_close(Relation& r, bool parallel = true) {
  parallel ? transitive_close_parallel(r) : transitive_close_serial(r);
}

bool is_reflexive(const Relation& r);
bool is_antisymmetric(const Relation& r);
bool is_transitive(const Relation& r);
inline bool is_partial_order(const Relation& r) {
  return is_reflexive(r) && is_antisymmetric(r) && is_transitive(r);
}

// Covering edges (i, j) with i < j in the order. Throws std::invalid_argument
// when r is not a partial order.
std::vector<std::pair<int, int>> hasse_edges(const Relation& r);

// Component id per node for the undirected graph on the given edges,
// normalized so ids appear in increasing node order.
std::vector<int> weak_components(int n, const std::vector<std::pair<int, int>>& edges);

}  // namespace borbit
