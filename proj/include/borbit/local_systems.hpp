#pragma once

#include <utility>
#include <vector>

#include "borbit/orbits.hpp"

namespace borbit {

// Orbit plus a rank-1 equivariant local system, simply connected convention.
// Types A/B/D/E carry a triviality bit; type C carries one sign per long
// root of S, keyed by psi position in canonical order.
struct DElement {
  int pair = 0;
  bool nontrivial = false;
  std::vector<std::pair<int, int>> signs;
  bool operator==(const DElement&) const = default;
};

// Closed-form count: type C 2^(#long roots of S); type B 2 iff #S = 2;
// simply laced 2 iff Psi is unambiguous and S has maximum rank.
long long count_local_systems_closed(const PairContext& pc, int pair);

// Torsion of weight lattice / <S>, via integer Smith normal form.
long long count_local_systems_lattice(const PairContext& pc, int pair);

class DContext {
 public:
  explicit DContext(const PairContext& pc);

  const PairContext& pairs() const { return *pc_; }
  const std::vector<DElement>& elements() const { return elems_; }
  int index_of(const DElement& d) const;
  bool trivial(int d) const;
  bool unic() const { return unic_; }

  // Extensions of d along the minimal parabolic at alpha; empty unless alpha
  // is an ascent for the underlying pair.
  const std::vector<int>& alpha_circ(int alpha, int d) const;

  // Smallest order with d < d' for d' in alpha_circ(d), closed under taking
  // extensions of strictly related elements.
  Relation gorder_fixpoint(bool parallel = true) const;
  Relation gorder_fixpoint_serial() const;

  bool gorder_closed_ADE(int d, int e) const;
  bool gorder_closed_B(int d, int e) const;
  // Dispatches by type; throws std::domain_error for type C.
  Relation gorder_closed_relation(bool parallel = true) const;

  // Type C sign sequence over the long roots of S, canonical psi order.
  std::vector<int> sign_sequence(int d) const;
  // Class id per element keyed by the reduced form (type C only).
  std::vector<int> reduce_classes() const;

 private:
  void build();
  int find_element(int pair, bool nontrivial, const std::vector<std::pair<int, int>>& signs) const;

  const PairContext* pc_;
  bool unic_ = false;
  std::vector<DElement> elems_;
  std::vector<std::vector<int>> elems_of_pair_;
  std::vector<std::vector<int>> circ_;  // [d * rank + alpha]
};

}  // namespace borbit
