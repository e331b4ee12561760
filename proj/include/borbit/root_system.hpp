#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace borbit {

// Coordinates in the simple-root basis. All arithmetic in this library is
// exact integer arithmetic over these vectors.
using Coeffs = std::vector<int>;

enum class RootLength { Long, Short };

struct Root {
  Coeffs coeffs;
  RootLength length_class = RootLength::Long;
};

struct VectorHash {
  size_t operator()(const std::vector<int>& v) const {
    size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<size_t>(static_cast<unsigned>(x)) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Irreducible root system of type A,B,C,D,E6,E7 with exact integer tables.
// Roots are indexed 0..2P-1, positive roots first in (height, lex) order,
// the negative of root i is negate(i).
struct RootSystem {
  char type = 'A';
  int rank = 0;
  std::vector<Root> roots;
  int n_positive = 0;
  std::vector<std::vector<int>> cartan;    // cartan[i][j] = 2(a_i,a_j)/(a_j,a_j)
  std::vector<std::vector<int>> bilinear;  // (a_i,a_j); short roots have squared length 2
  int highest = -1;                        // index of the highest root
  std::unordered_map<Coeffs, int, VectorHash> root_index;

  int simple(int i) const { return simple_index_[i]; }
  int index_of(const Coeffs& c) const;
  bool is_root(const Coeffs& c) const { return index_of(c) >= 0; }
  int negate(int r) const { return r < n_positive ? r + n_positive : r - n_positive; }
  bool positive(int r) const { return r < n_positive; }
  int height(int r) const;
  long long inner(int a, int b) const;  // bilinear form on root indices
  int pairing(int r, int i) const;      // <r, alpha_i^vee>
  std::string label() const;            // "B3", "E6", ...

  std::vector<int> simple_index_;
};

// Builds the root table by closing the simple roots under root addition.
// Supported: A (rank >= 2), B (rank >= 3), C (rank >= 2), D (rank >= 4),
// E (rank 6 or 7). Throws std::invalid_argument otherwise.
RootSystem build_system(char type, int rank);

// Simple roots appearing with coefficient 1 in the highest root (0-based).
std::vector<int> cominuscule_nodes(const RootSystem& sys);

struct ParabolicData {
  const RootSystem* sys = nullptr;
  int node = -1;                     // 0-based index of alpha_P in Delta
  std::vector<int> psi;              // root indices, canonical (height, lex) order
  std::vector<int> delta_p;          // simple-root indices other than node
  std::vector<int> phi_p_plus;       // positive roots of the Levi subsystem
  std::vector<int> psi_pos_of_root;  // root index -> position in psi, -1 outside

  int psi_pos(int root) const { return psi_pos_of_root[root]; }
  std::string id() const;  // "<type><rank>:<node>" with 1-based node
};

// Throws std::invalid_argument when node is not cominuscule.
ParabolicData parabolic(const RootSystem& sys, int node);

// b - a is a nonnegative integer combination of simple roots.
bool root_leq(const RootSystem& sys, int a, int b);

bool is_orthogonal_set(const RootSystem& sys, const std::vector<int>& roots);

// Pairwise orthogonal and no sum/difference of two members is a root.
bool strongly_orthogonal_set(const RootSystem& sys, const std::vector<int>& roots);

// All maximal orthogonal subsets of Psi, as sorted psi-position lists.
std::vector<std::vector<int>> maximal_orthogonal_subsets(const ParabolicData& par);

// True when the maximal orthogonal subsets of Psi whose elements are pairwise
// incomparable under root_leq form a single set. Evaluated literally over the
// enumerated family, so an empty family is vacuously true.
bool property_unic(const ParabolicData& par);

// Coordinates of a root in the classical e_i chart (types A..D only).
std::vector<int> to_euclid(const RootSystem& sys, int root);

}  // namespace borbit
