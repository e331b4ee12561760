#include "borbit/weyl.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>

namespace borbit {

WeylElement weyl_identity(int rank) {
  WeylElement w;
  w.rank = rank;
  w.m.assign(rank * rank, 0);
  for (int i = 0; i < rank; ++i) w.at(i, i) = 1;
  return w;
}

bool weyl_is_identity(const WeylElement& w) {
  for (int i = 0; i < w.rank; ++i)
    for (int j = 0; j < w.rank; ++j)
      if (w.at(i, j) != (i == j)) return false;
  return true;
}

Coeffs weyl_apply(const WeylElement& w, const Coeffs& c) {
  Coeffs out(w.rank, 0);
  for (int i = 0; i < w.rank; ++i) {
    long long s = 0;
    for (int j = 0; j < w.rank; ++j) s += (long long)w.at(i, j) * c[j];
    out[i] = (int)s;
  }
  return out;
}

int weyl_apply_root(const RootSystem& sys, const WeylElement& w, int root) {
  int idx = sys.index_of(weyl_apply(w, sys.roots[root].coeffs));
  if (idx < 0) throw std::logic_error("matrix does not permute the root table");
  return idx;
}

WeylElement weyl_multiply(const WeylElement& a, const WeylElement& b) {
  if (a.rank != b.rank) throw std::invalid_argument("rank mismatch");
  WeylElement c;
  c.rank = a.rank;
  c.m.assign(a.rank * a.rank, 0);
  for (int i = 0; i < a.rank; ++i)
    for (int k = 0; k < a.rank; ++k) {
      int aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < a.rank; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

WeylElement weyl_inverse(const RootSystem& sys, const WeylElement& w) {
  // w permutes the root table; read the inverse off the simple-root fibers.
  WeylElement inv;
  inv.rank = w.rank;
  inv.m.assign(w.rank * w.rank, 0);
  for (int r = 0; r < (int)sys.roots.size(); ++r) {
    int img = weyl_apply_root(sys, w, r);
    for (int j = 0; j < w.rank; ++j) {
      if (img == sys.simple(j)) {
        const Coeffs& c = sys.roots[r].coeffs;
        for (int i = 0; i < w.rank; ++i) inv.at(i, j) = c[i];
      }
    }
  }
  return inv;
}

int weyl_length(const RootSystem& sys, const WeylElement& w) {
  int count = 0;
  for (int r = 0; r < sys.n_positive; ++r)
    if (!sys.positive(weyl_apply_root(sys, w, r))) ++count;
  return count;
}

int column_sign(const WeylElement& w, int i) {
  for (int k = 0; k < w.rank; ++k) {
    if (w.at(k, i) > 0) return 1;
    if (w.at(k, i) < 0) return -1;
  }
  throw std::logic_error("zero column in a Weyl matrix");
}

WeylElement simple_reflection(const RootSystem& sys, int i) {
  WeylElement s = weyl_identity(sys.rank);
  // s_i(a_j) = a_j - <a_j, a_i^vee> a_i
  for (int j = 0; j < sys.rank; ++j) s.at(i, j) -= sys.cartan[j][i];
  return s;
}

WeylElement root_reflection(const RootSystem& sys, int root) {
  const Coeffs& b = sys.roots[root].coeffs;
  long long bb = sys.inner(root, root);
  WeylElement s = weyl_identity(sys.rank);
  for (int j = 0; j < sys.rank; ++j) {
    // <a_j, beta^vee> = 2 (a_j, beta) / (beta, beta)
    long long num = 0;
    for (int k = 0; k < sys.rank; ++k) num += (long long)sys.bilinear[j][k] * b[k];
    num *= 2;
    if (num % bb != 0) throw std::logic_error("non-integral reflection pairing");
    long long coef = num / bb;
    for (int i = 0; i < sys.rank; ++i) s.at(i, j) -= (int)(coef * b[i]);
  }
  return s;
}

std::vector<WeylElement> enumerate_weyl_group(const RootSystem& sys) {
  std::vector<WeylElement> out;
  std::unordered_map<std::vector<int>, char, VectorHash> seen;
  std::deque<WeylElement> queue;
  queue.push_back(weyl_identity(sys.rank));
  seen.emplace(queue.front().m, 1);
  while (!queue.empty()) {
    WeylElement w = queue.front();
    queue.pop_front();
    out.push_back(w);
    for (int i = 0; i < sys.rank; ++i) {
      WeylElement next = weyl_multiply(simple_reflection(sys, i), w);
      if (seen.emplace(next.m, 1).second) queue.push_back(next);
    }
  }
  return out;
}

WeylContext::WeylContext(const RootSystem& sys) : sys_(&sys) {
  for (int i = 0; i < sys.rank; ++i) simples_.push_back(simple_reflection(sys, i));
}

size_t WeylContext::cache_size() const {
  std::lock_guard<std::mutex> lock(memo_mutex_);
  return memo_.size();
}

bool WeylContext::bruhat_leq(const WeylElement& u, const WeylElement& w) {
  if (u == w) return true;
  std::vector<int> key = u.m;
  key.insert(key.end(), w.m.begin(), w.m.end());
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }

  bool result;
  int lw = weyl_length(*sys_, w);
  if (lw == 0) {
    result = false;
  } else {
    int lu = weyl_length(*sys_, u);
    if (lu >= lw) {
      result = false;
    } else {
      // Right descent recursion: pick i with w(a_i) < 0, then
      // u <= w iff (u s_i <= w s_i when u s_i < u, else u <= w s_i).
      int i = 0;
      while (column_sign(w, i) > 0) ++i;
      WeylElement ws = weyl_multiply(w, simples_[i]);
      if (column_sign(u, i) < 0)
        result = bruhat_leq(weyl_multiply(u, simples_[i]), ws);
      else
        result = bruhat_leq(u, ws);
    }
  }
  std::lock_guard<std::mutex> lock(memo_mutex_);
  memo_.emplace(std::move(key), result);
  return result;
}

std::vector<int> mask_to_list(PsiMask m) {
  std::vector<int> out;
  while (m) {
    int b = std::countr_zero(m);
    out.push_back(b);
    m &= m - 1;
  }
  return out;
}

PsiMask inversion_mask(const ParabolicData& par, const WeylElement& w) {
  const RootSystem& sys = *par.sys;
  PsiMask mask = 0;
  for (int r = 0; r < sys.n_positive; ++r) {
    if (sys.positive(weyl_apply_root(sys, w, r))) continue;
    int pos = par.psi_pos(r);
    if (pos < 0) throw std::logic_error("inversion set leaves Psi");
    mask |= PsiMask(1) << pos;
  }
  return mask;
}

std::vector<PsiMask> psi_down_masks(const ParabolicData& par) {
  const RootSystem& sys = *par.sys;
  int n = (int)par.psi.size();
  std::vector<PsiMask> down(n, 0);
  for (int b = 0; b < n; ++b)
    for (int c = 0; c < n; ++c)
      if (root_leq(sys, par.psi[c], par.psi[b])) down[b] |= PsiMask(1) << c;
  return down;
}

bool mask_saturated(const std::vector<PsiMask>& down, PsiMask m) {
  for (int b : mask_to_list(m))
    if (!mask_subset(down[b], m)) return false;
  return true;
}

std::vector<WPElement> wp_elements(const ParabolicData& par) {
  const RootSystem& sys = *par.sys;
  int n = (int)par.psi.size();
  std::vector<PsiMask> down = psi_down_masks(par);

  std::unordered_map<PsiMask, WeylElement> built;
  std::deque<PsiMask> queue;
  built.emplace(0, weyl_identity(sys.rank));
  queue.push_back(0);
  while (!queue.empty()) {
    PsiMask mask = queue.front();
    queue.pop_front();
    const WeylElement v = built.at(mask);
    for (int b = 0; b < n; ++b) {
      if (mask & (PsiMask(1) << b)) continue;
      // minimal in Psi minus the current saturated set
      if (!mask_subset(down[b] & ~(PsiMask(1) << b), mask)) continue;
      PsiMask next = mask | (PsiMask(1) << b);
      if (built.count(next)) continue;
      int alpha = weyl_apply_root(sys, v, par.psi[b]);
      if (!sys.positive(alpha)) throw std::logic_error("minimal new root already inverted");
      int ai = -1;
      for (int i = 0; i < sys.rank; ++i)
        if (alpha == sys.simple(i)) ai = i;
      if (ai < 0) throw std::logic_error("image of a minimal new root is not simple");
      WeylElement next_w = weyl_multiply(simple_reflection(sys, ai), v);
      if (inversion_mask(par, next_w) != next)
        throw std::logic_error("inversion set mismatch while extending W^P");
      built.emplace(next, std::move(next_w));
      queue.push_back(next);
    }
  }

  std::vector<WPElement> out;
  out.reserve(built.size());
  for (auto& [mask, w] : built) out.push_back({mask, w});
  std::sort(out.begin(), out.end(), [](const WPElement& a, const WPElement& b) {
    int pa = std::popcount(a.inversion), pb = std::popcount(b.inversion);
    if (pa != pb) return pa < pb;
    return mask_to_list(a.inversion) < mask_to_list(b.inversion);
  });
  return out;
}

WPElement min_coset_rep(const ParabolicData& par, const WeylElement& w) {
  const RootSystem& sys = *par.sys;
  WeylElement v = w;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i : par.delta_p) {
      if (column_sign(v, i) < 0) {
        v = weyl_multiply(v, simple_reflection(sys, i));
        moved = true;
      }
    }
  }
  return {inversion_mask(par, v), v};
}

const WPElement& longest_wp(const std::vector<WPElement>& wp) {
  const WPElement* best = &wp.front();
  for (const WPElement& e : wp)
    if (std::popcount(e.inversion) > std::popcount(best->inversion)) best = &e;
  return *best;
}

}  // namespace borbit
