#pragma once

#include <cstdint>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "borbit/root_system.hpp"

namespace borbit {

// Weyl group element as an exact integer matrix acting on simple-root
// coordinates. Column i holds the coordinates of w(alpha_i).
struct WeylElement {
  int rank = 0;
  std::vector<int> m;  // row-major rank x rank

  int at(int i, int j) const { return m[i * rank + j]; }
  int& at(int i, int j) { return m[i * rank + j]; }
  bool operator==(const WeylElement&) const = default;
};

WeylElement weyl_identity(int rank);
bool weyl_is_identity(const WeylElement& w);
Coeffs weyl_apply(const WeylElement& w, const Coeffs& c);
int weyl_apply_root(const RootSystem& sys, const WeylElement& w, int root);
WeylElement weyl_multiply(const WeylElement& a, const WeylElement& b);  // a after b
WeylElement weyl_inverse(const RootSystem& sys, const WeylElement& w);
int weyl_length(const RootSystem& sys, const WeylElement& w);

// Sign of w(alpha_i): +1 when positive, -1 when negative.
int column_sign(const WeylElement& w, int i);

WeylElement simple_reflection(const RootSystem& sys, int i);
WeylElement root_reflection(const RootSystem& sys, int root);

// Full group enumeration by closing {s_i} under multiplication, BFS by
// length. Intended for oracle tests and involution scans at small rank.
std::vector<WeylElement> enumerate_weyl_group(const RootSystem& sys);

// Shared root system plus a memoized Bruhat order. The cache is
// lock-protected and behaves as pure recomputation, so concurrent queries
// are safe; contexts still precompute the comparisons they need before
// entering parallel regions to keep the hot loops lock-free.
class WeylContext {
 public:
  explicit WeylContext(const RootSystem& sys);
  const RootSystem& sys() const { return *sys_; }
  const WeylElement& simple(int i) const { return simples_[i]; }
  bool bruhat_leq(const WeylElement& u, const WeylElement& w);
  size_t cache_size() const;

 private:
  const RootSystem* sys_;
  std::vector<WeylElement> simples_;
  std::unordered_map<std::vector<int>, bool, VectorHash> memo_;
  mutable std::mutex memo_mutex_;
};

// ---- W^P machinery --------------------------------------------------------

using PsiMask = uint64_t;  // subset of Psi by position, |Psi| <= 27 at rank 7

struct WPElement {
  PsiMask inversion = 0;  // Phi^+(v) as psi positions
  WeylElement w;
};

std::vector<int> mask_to_list(PsiMask m);
inline bool mask_subset(PsiMask a, PsiMask b) { return (a & ~b) == 0; }

// Inversion set of w as psi positions. Throws std::logic_error if w inverts
// a positive root outside Psi.
PsiMask inversion_mask(const ParabolicData& par, const WeylElement& w);

// Downward closure masks: down[b] = positions of psi roots <= psi[b].
std::vector<PsiMask> psi_down_masks(const ParabolicData& par);
bool mask_saturated(const std::vector<PsiMask>& down, PsiMask m);

// One element per saturated subset of Psi, built inductively from the
// identity by multiplying with the simple reflection at a minimal new root.
// Sorted by (popcount, lexicographic position list).
std::vector<WPElement> wp_elements(const ParabolicData& par);

inline bool wp_leq(const WPElement& a, const WPElement& b) {
  return mask_subset(a.inversion, b.inversion);
}

// Minimal length representative of w W_P.
WPElement min_coset_rep(const ParabolicData& par, const WeylElement& w);

const WPElement& longest_wp(const std::vector<WPElement>& wp);

}  // namespace borbit
