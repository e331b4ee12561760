#include "borbit/order.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>

namespace borbit {

std::vector<int> Relation::row_list(int i) const {
  std::vector<int> out;
  const uint64_t* r = row(i);
  for (int w = 0; w < words; ++w) {
    uint64_t x = r[w];
    while (x) {
      out.push_back(w * 64 + std::countr_zero(x));
      x &= x - 1;
    }
  }
  return out;
}

void transitive_close_serial(Relation& r) {
  for (int k = 0; k < r.n; ++k) {
    const uint64_t* rk = r.row(k);
    for (int i = 0; i < r.n; ++i) {
      if (i == k || !r.get(i, k)) continue;
      uint64_t* ri = r.row(i);
      for (int w = 0; w < r.words; ++w) ri[w] |= rk[w];
    }
  }
}

void transitive_close_parallel(Relation& r) {
  // row k is read-only within one pivot step: merging it into itself is a
  // no-op, so i == k is skipped and each thread owns its row i
  for (int k = 0; k < r.n; ++k) {
    const uint64_t* rk = r.row(k);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < r.n; ++i) {
      if (i == k || !r.get(i, k)) continue;
      uint64_t* ri = r.row(i);
      for (int w = 0; w < r.words; ++w) ri[w] |= rk[w];
    }
  }
}

bool is_reflexive(const Relation& r) {
  for (int i = 0; i < r.n; ++i)
    if (!r.get(i, i)) return false;
  return true;
}

bool is_antisymmetric(const Relation& r) {
  for (int i = 0; i < r.n; ++i)
    for (int j = i + 1; j < r.n; ++j)
      if (r.get(i, j) && r.get(j, i)) return false;
  return true;
}

bool is_transitive(const Relation& r) {
  Relation c = r;
  transitive_close_serial(c);
  return c == r;
}

std::vector<std::pair<int, int>> hasse_edges(const Relation& r) {
  if (!is_partial_order(r)) throw std::invalid_argument("relation is not a partial order");
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < r.n; ++i)
    for (int j = 0; j < r.n; ++j) {
      if (i == j || !r.get(i, j)) continue;
      bool covering = true;
      for (int k = 0; k < r.n && covering; ++k)
        if (k != i && k != j && r.get(i, k) && r.get(k, j)) covering = false;
      if (covering) out.emplace_back(i, j);
    }
  return out;
}

std::vector<int> weak_components(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : edges) parent[find(a)] = find(b);
  std::vector<int> id(n, -1);
  int next = 0;
  for (int i = 0; i < n; ++i) {
    int root = find(i);
    if (id[root] < 0) id[root] = next++;
    id[i] = id[root];
  }
  return id;
}

}  // namespace borbit
