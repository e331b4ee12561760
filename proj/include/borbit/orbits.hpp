#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "borbit/involution.hpp"
#include "borbit/order.hpp"
#include "borbit/weyl.hpp"

namespace borbit {

// (v, S) with v indexed into the W^P table and S a sorted list of psi
// positions, pairwise orthogonal and contained in the inversion set of v.
struct AdmissiblePair {
  int v = 0;
  std::vector<int> s;
  bool operator==(const AdmissiblePair&) const = default;
};

enum class CaseLabel {
  CompactImaginary,
  NoncompactImaginaryD1,
  C1,
  ComplexAscentV,
  ComplexAscentS,
  RealDescent,
  ComplexDescentV,
  ComplexDescentS,
};

inline bool is_ascent(CaseLabel l) {
  return l == CaseLabel::NoncompactImaginaryD1 || l == CaseLabel::C1 ||
         l == CaseLabel::ComplexAscentV || l == CaseLabel::ComplexAscentS;
}

const char* case_name(CaseLabel l);

struct AscentDescentCase {
  CaseLabel label = CaseLabel::CompactImaginary;
  int beta = -1;                  // root index of v^{-1}(alpha)
  std::optional<int> witness;     // psi position of the c1 root gamma in S
};

// All admissible pairs of one cominuscule parabolic together with the minimal
// parabolic action, the closed-form order and the fixpoint oracle.
class PairContext {
 public:
  PairContext(const RootSystem& sys, int node);

  const RootSystem& sys() const { return *sys_; }
  const ParabolicData& par() const { return par_; }
  const std::vector<WPElement>& wp() const { return wp_; }
  const std::vector<AdmissiblePair>& pairs() const { return pairs_; }
  WeylContext& weyl() const { return *wctx_; }

  int wp_index(PsiMask inversion) const;
  int pair_index(int v, const std::vector<int>& s) const;  // -1 when absent
  const WeylElement& sigma(int pair) const { return sigma_[pair]; }
  PsiMask phi_v(int pair) const { return wp_[pairs_[pair].v].inversion; }

  const AscentDescentCase& classify(int alpha, int pair) const;
  int m_alpha(int alpha, int pair) const;
  std::vector<int> e_alpha(int alpha, int pair) const;

  // Closed-form comparison of two pairs; p <= q.
  bool bruhat_leq_pairs(int p, int q) const;
  Relation closed_relation(bool parallel = true) const;
  Relation closed_relation_serial() const;

  // Smallest order with p <= m_a(p) that is monotone under every m_a,
  // computed as a fixpoint with transitive closure per sweep.
  Relation standard_order_oracle(bool parallel = true) const;
  Relation standard_order_oracle_serial() const;

  std::vector<int> max_rank_pairs() const;
  bool is_max_rank(int pair) const;
  // Unique minimum of the max-rank pairs under the closed order. Throws
  // std::runtime_error when no minimum exists.
  int minimal_max_rank() const;
  // Maximum of {max-rank q : q <= p}, type B closed form. Throws outside B.
  std::optional<int> max_H(int pair) const;

  // Count of encounters of v^{-1}(alpha) positive, supported on Delta_P but
  // not simple; tracked empirically, see the classifier notes.
  int nonsimple_levi_betas() const { return nonsimple_levi_betas_; }

 private:
  void build_pairs();
  void build_action();
  void ensure_order_tables() const;
  AscentDescentCase classify_impl(int alpha, int pair) const;
  int apply_move(int pair, const AscentDescentCase& c) const;

  const RootSystem* sys_;
  ParabolicData par_;
  std::unique_ptr<WeylContext> wctx_;
  std::vector<PsiMask> down_;
  std::vector<PsiMask> orth_;  // positions orthogonal to each psi position
  std::vector<WPElement> wp_;
  std::map<PsiMask, int> wp_by_mask_;
  std::vector<WeylElement> wp_inv_;  // inverses of the W^P matrices
  std::vector<AdmissiblePair> pairs_;
  std::map<std::pair<int, std::vector<int>>, int> pair_by_key_;
  std::vector<WeylElement> sigma_;
  std::vector<AscentDescentCase> cls_;  // [pair * rank + alpha]
  std::vector<int> m_;                  // [pair * rank + alpha]
  int nonsimple_levi_betas_ = 0;
  mutable int max_rank_size_ = -1;

  // order tables, built on first use
  mutable bool order_ready_ = false;
  mutable std::vector<int> sigma_id_;
  mutable std::vector<PsiMask> pmin_;      // inversion mask of [v sigma_S]^P
  mutable Relation sigma_leq_;             // over distinct sigma ids
};

}  // namespace borbit
