#include "borbit/smith.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace borbit {

std::vector<long long> smith_normal_form(IntMat a) {
  size_t m = a.size();
  size_t n = m ? a[0].size() : 0;
  size_t t = 0;
  auto nonzero_below = [&](size_t s) {
    for (size_t i = s; i < m; ++i)
      for (size_t j = s; j < n; ++j)
        if (a[i][j] != 0) return std::make_pair(i, j);
    return std::make_pair(m, n);
  };
  while (t < m && t < n) {
    // move the smallest nonzero entry of the trailing block to the pivot
    auto [pi, pj] = nonzero_below(t);
    if (pi == m) break;
    for (size_t i = t; i < m; ++i)
      for (size_t j = t; j < n; ++j)
        if (a[i][j] != 0 && std::llabs(a[i][j]) < std::llabs(a[pi][pj])) {
          pi = i;
          pj = j;
        }
    std::swap(a[t], a[pi]);
    for (size_t i = 0; i < m; ++i) std::swap(a[i][t], a[i][pj]);

    bool clean = true;
    for (size_t i = t + 1; i < m; ++i) {
      long long q = a[i][t] / a[t][t];
      if (q)
        for (size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
      if (a[i][t] != 0) clean = false;
    }
    for (size_t j = t + 1; j < n; ++j) {
      long long q = a[t][j] / a[t][t];
      if (q)
        for (size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
      if (a[t][j] != 0) clean = false;
    }
    if (!clean) continue;  // remainders left, pick a smaller pivot again
    ++t;
  }

  std::vector<long long> d;
  for (size_t i = 0; i < std::min(m, n); ++i) d.push_back(std::llabs(a[i][i]));
  // enforce the divisibility chain: diag(a, b) ~ diag(gcd, lcm)
  bool fixed = true;
  while (fixed) {
    fixed = false;
    for (size_t i = 0; i + 1 < d.size(); ++i) {
      if (d[i + 1] == 0 || d[i] == 0) {
        if (d[i] == 0 && d[i + 1] != 0) {
          std::swap(d[i], d[i + 1]);
          fixed = true;
        }
        continue;
      }
      if (d[i + 1] % d[i] != 0) {
        long long g = std::gcd(d[i], d[i + 1]);
        long long l = d[i] / g * d[i + 1];
        d[i] = g;
        d[i + 1] = l;
        fixed = true;
      }
    }
  }
  return d;
}

long long lattice_torsion_order(const IntMat& rows) {
  if (rows.empty()) return 1;
  std::vector<long long> d = smith_normal_form(rows);
  long long order = 1;
  for (size_t i = 0; i < rows.size(); ++i) {
    if (i >= d.size() || d[i] == 0)
      throw std::invalid_argument("rows are not linearly independent");
    order *= d[i];
  }
  return order;
}

}  // namespace borbit
