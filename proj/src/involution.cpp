#include "borbit/involution.hpp"

#include <algorithm>
#include <stdexcept>

namespace borbit {

bool is_involution(const WeylElement& w) {
  return weyl_is_identity(weyl_multiply(w, w));
}

static void require_involution(const WeylElement& w) {
  if (!is_involution(w)) throw std::invalid_argument("element is not an involution");
}

WeylElement circ(const RootSystem& sys, int i, const WeylElement& sigma) {
  require_involution(sigma);
  WeylElement s = simple_reflection(sys, i);
  WeylElement left = weyl_multiply(s, sigma);
  if (left == weyl_multiply(sigma, s)) return left;
  return weyl_multiply(left, s);
}

int eigenspace_minus_one_dim(const WeylElement& w) {
  // lambda = rank - rank(M + I), fraction-free elimination over long long
  int n = w.rank;
  std::vector<std::vector<long long>> a(n, std::vector<long long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = w.at(i, j) + (i == j);
  int r = 0;
  for (int col = 0; col < n && r < n; ++col) {
    int piv = -1;
    for (int i = r; i < n; ++i)
      if (a[i][col] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(a[r], a[piv]);
    for (int i = r + 1; i < n; ++i) {
      if (a[i][col] == 0) continue;
      long long p = a[r][col], q = a[i][col];
      for (int j = 0; j < n; ++j) a[i][j] = a[i][j] * p - a[r][j] * q;
    }
    ++r;
  }
  return n - r;
}

int involution_length(const RootSystem& sys, const WeylElement& sigma) {
  require_involution(sigma);
  int l = weyl_length(sys, sigma);
  int lam = eigenspace_minus_one_dim(sigma);
  if ((l + lam) % 2 != 0) throw std::logic_error("l + lambda is odd");
  return (l + lam) / 2;
}

WeylElement sigma_of_set(const RootSystem& sys, const std::vector<int>& roots) {
  if (!is_orthogonal_set(sys, roots)) throw std::invalid_argument("set is not orthogonal");
  WeylElement w = weyl_identity(sys.rank);
  for (int r : roots) w = weyl_multiply(w, root_reflection(sys, r));
  return w;
}

std::vector<int> real_descent_set(const RootSystem& sys, const WeylElement& sigma) {
  std::vector<int> out;
  for (int r = 0; r < (int)sys.roots.size(); ++r)
    if (weyl_apply_root(sys, sigma, r) == sys.negate(r)) out.push_back(r);
  return out;
}

std::vector<int> circ_reduced_word(const RootSystem& sys, const WeylElement& sigma) {
  require_involution(sigma);
  std::vector<int> word;
  WeylElement cur = sigma;
  while (!weyl_is_identity(cur)) {
    int desc = -1;
    for (int i = 0; i < sys.rank; ++i) {
      // s_i is a circ descent of an involution exactly when sigma(a_i) < 0
      if (column_sign(cur, i) < 0) { desc = i; break; }
    }
    if (desc < 0) throw std::logic_error("non-identity involution without a descent");
    word.push_back(desc);
    cur = circ(sys, desc, cur);
  }
  std::reverse(word.begin(), word.end());
  if ((int)word.size() != involution_length(sys, sigma))
    throw std::logic_error("greedy circ word has the wrong length");
  return word;
}

}  // namespace borbit
