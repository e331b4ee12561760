#include "borbit/local_systems.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "borbit/sequences.hpp"
#include "borbit/smith.hpp"

namespace borbit {

long long count_local_systems_closed(const PairContext& pc, int pair) {
  const RootSystem& sys = pc.sys();
  const AdmissiblePair& p = pc.pairs()[pair];
  if (sys.type == 'C') {
    int k = 0;
    for (int pos : p.s)
      if (sys.roots[pc.par().psi[pos]].length_class == RootLength::Long) ++k;
    return 1ll << k;
  }
  if (sys.type == 'B') return p.s.size() == 2 ? 2 : 1;
  return property_unic(pc.par()) && pc.is_max_rank(pair) ? 2 : 1;
}

long long count_local_systems_lattice(const PairContext& pc, int pair) {
  const RootSystem& sys = pc.sys();
  const AdmissiblePair& p = pc.pairs()[pair];
  // rows of S in fundamental-weight coordinates: w_i = <root, alpha_i^vee>
  IntMat rows;
  for (int pos : p.s) {
    std::vector<long long> row(sys.rank);
    for (int i = 0; i < sys.rank; ++i) row[i] = sys.pairing(pc.par().psi[pos], i);
    rows.push_back(std::move(row));
  }
  return lattice_torsion_order(rows);
}

DContext::DContext(const PairContext& pc) : pc_(&pc) { build(); }

void DContext::build() {
  const RootSystem& sys = pc_->sys();
  unic_ = property_unic(pc_->par());
  elems_of_pair_.resize(pc_->pairs().size());
  for (int p = 0; p < (int)pc_->pairs().size(); ++p) {
    if (sys.type == 'C') {
      std::vector<int> longs;
      for (int pos : pc_->pairs()[p].s)
        if (sys.roots[pc_->par().psi[pos]].length_class == RootLength::Long)
          longs.push_back(pos);
      int k = (int)longs.size();
      for (long long counter = 0; counter < (1ll << k); ++counter) {
        DElement d;
        d.pair = p;
        for (int i = 0; i < k; ++i)
          d.signs.push_back({longs[i], (counter >> (k - 1 - i)) & 1 ? -1 : 1});
        elems_of_pair_[p].push_back((int)elems_.size());
        elems_.push_back(std::move(d));
      }
    } else {
      long long count = count_local_systems_closed(*pc_, p);
      elems_of_pair_[p].push_back((int)elems_.size());
      elems_.push_back({p, false, {}});
      if (count == 2) {
        elems_of_pair_[p].push_back((int)elems_.size());
        elems_.push_back({p, true, {}});
      }
    }
  }

  int rank = sys.rank;
  circ_.resize(elems_.size() * rank);
  for (int d = 0; d < (int)elems_.size(); ++d) {
    const DElement& el = elems_[d];
    for (int a = 0; a < rank; ++a) {
      const AscentDescentCase& c = pc_->classify(a, el.pair);
      if (!is_ascent(c.label)) continue;
      int q = pc_->m_alpha(a, el.pair);
      std::vector<int>& out = circ_[d * rank + a];
      switch (c.label) {
        case CaseLabel::ComplexAscentV:
          out.push_back(find_element(q, el.nontrivial, el.signs));
          break;
        case CaseLabel::ComplexAscentS: {
          std::vector<std::pair<int, int>> signs = el.signs;
          if (sys.type == 'C') {
            WeylElement sb = root_reflection(sys, c.beta);
            for (auto& [pos, sg] : signs) {
              pos = pc_->par().psi_pos(weyl_apply_root(sys, sb, pc_->par().psi[pos]));
              if (pos < 0) throw std::logic_error("sign transport left Psi");
            }
            std::sort(signs.begin(), signs.end());
          }
          out.push_back(find_element(q, el.nontrivial, signs));
          break;
        }
        case CaseLabel::NoncompactImaginaryD1: {
          if (el.nontrivial)
            throw std::logic_error("nontrivial character on a pair admitting a d1 ascent");
          std::vector<std::pair<int, int>> signs = el.signs;
          if (sys.type == 'C') {
            int b = sys.positive(c.beta) ? c.beta : sys.negate(c.beta);
            if (sys.roots[b].length_class == RootLength::Long) {
              int pos = pc_->par().psi_pos(b);
              signs.insert(std::lower_bound(signs.begin(), signs.end(),
                                            std::make_pair(pos, 2)),
                           {pos, 1});
            }
          }
          out.push_back(find_element(q, false, signs));
          break;
        }
        case CaseLabel::C1: {
          if (sys.type == 'B') {
            if (el.nontrivial) throw std::logic_error("nontrivial character below a c1 ascent");
            out.push_back(find_element(q, false, {}));
            out.push_back(find_element(q, true, {}));
          } else if (sys.type == 'C') {
            int gamma = pc_->par().psi[*c.witness];
            const Coeffs& g = sys.roots[gamma].coeffs;
            const Coeffs& b = sys.roots[c.beta].coeffs;
            Coeffs sum(sys.rank), diff(sys.rank);
            for (int i = 0; i < sys.rank; ++i) {
              sum[i] = g[i] + b[i];
              diff[i] = g[i] - b[i];
            }
            int ppos = pc_->par().psi_pos(sys.index_of(sum));
            int mpos = pc_->par().psi_pos(sys.index_of(diff));
            for (int sg : {1, -1}) {
              std::vector<std::pair<int, int>> signs = el.signs;
              signs.insert(std::lower_bound(signs.begin(), signs.end(),
                                            std::make_pair(ppos, 2)),
                           {ppos, sg});
              signs.insert(std::lower_bound(signs.begin(), signs.end(),
                                            std::make_pair(mpos, 2)),
                           {mpos, sg});
              out.push_back(find_element(q, false, signs));
            }
          } else {
            throw std::logic_error("c1 ascent in a simply laced system");
          }
          break;
        }
        default:
          break;
      }
      for (int t : out)
        if (t < 0) throw std::logic_error("extension produced an illegal character shape");
    }
  }
}

int DContext::find_element(int pair, bool nontrivial,
                           const std::vector<std::pair<int, int>>& signs) const {
  for (int d : elems_of_pair_[pair])
    if (elems_[d].nontrivial == nontrivial && elems_[d].signs == signs) return d;
  return -1;
}

int DContext::index_of(const DElement& d) const {
  return find_element(d.pair, d.nontrivial, d.signs);
}

bool DContext::trivial(int d) const {
  const DElement& el = elems_[d];
  if (pc_->sys().type == 'C') {
    for (auto& [pos, sg] : el.signs)
      if (sg != 1) return false;
    return true;
  }
  return !el.nontrivial;
}

const std::vector<int>& DContext::alpha_circ(int alpha, int d) const {
  return circ_[d * pc_->sys().rank + alpha];
}

Relation DContext::gorder_fixpoint(bool parallel) const {
  int n = (int)elems_.size();
  int rank = pc_->sys().rank;
  Relation rel(n);
  rel.set_diagonal();
  for (int d = 0; d < n; ++d)
    for (int a = 0; a < rank; ++a)
      for (int t : circ_[d * rank + a]) rel.set(d, t);
  transitive_close(rel, parallel);

  std::vector<std::vector<std::pair<int, int>>> owners(n);
  for (int d = 0; d < n; ++d)
    for (int a = 0; a < rank; ++a)
      for (int t : circ_[d * rank + a]) owners[t].push_back({d, a});

  while (true) {
    Relation add(n);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int r = 0; r < n; ++r) {
      for (auto [d, a] : owners[r])
        for (int e : rel.row_list(d)) {
          if (e == d) continue;  // the closure rule wants strictly related pairs
          for (int t : circ_[e * rank + a]) add.set(r, t);
        }
    }
    Relation next = rel;
    for (size_t w = 0; w < next.bits.size(); ++w) next.bits[w] |= add.bits[w];
    transitive_close(next, parallel);
    if (next == rel) break;
    rel = std::move(next);
  }
  if (!is_antisymmetric(rel))
    throw std::runtime_error("Bruhat G-order fixpoint produced a cycle");
  return rel;
}

Relation DContext::gorder_fixpoint_serial() const {
  int n = (int)elems_.size();
  int rank = pc_->sys().rank;
  std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
  for (int d = 0; d < n; ++d) {
    rel[d][d] = 1;
    for (int a = 0; a < rank; ++a)
      for (int t : circ_[d * rank + a]) rel[d][t] = 1;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    bool closing = true;
    while (closing) {
      closing = false;
      for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
          if (!rel[i][k]) continue;
          for (int j = 0; j < n; ++j)
            if (rel[k][j] && !rel[i][j]) {
              rel[i][j] = 1;
              closing = true;
            }
        }
    }
    for (int d = 0; d < n; ++d)
      for (int e = 0; e < n; ++e) {
        if (d == e || !rel[d][e]) continue;
        for (int a = 0; a < rank; ++a)
          for (int t : circ_[d * rank + a])
            for (int u : circ_[e * rank + a])
              if (!rel[t][u]) {
                rel[t][u] = 1;
                changed = true;
              }
      }
  }
  Relation out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rel[i][j]) out.set(i, j);
  if (!is_antisymmetric(out))
    throw std::runtime_error("Bruhat G-order fixpoint produced a cycle");
  return out;
}

bool DContext::gorder_closed_ADE(int d, int e) const {
  char type = pc_->sys().type;
  if (type == 'B' || type == 'C') throw std::invalid_argument("closed ADE form needs a simply laced system");
  if (!pc_->bruhat_leq_pairs(elems_[d].pair, elems_[e].pair)) return false;
  if (!unic_) return true;  // every character is trivial
  return trivial(d) == trivial(e);
}

bool DContext::gorder_closed_B(int d, int e) const {
  if (pc_->sys().type != 'B') throw std::invalid_argument("closed B form needs type B");
  int pd = elems_[d].pair, pe = elems_[e].pair;
  if (!pc_->bruhat_leq_pairs(pd, pe)) return false;
  bool td = trivial(d), te = trivial(e);
  if (td && te) return true;
  if (!td && !te) return true;
  PsiMask vd = pc_->phi_v(pd), ve = pc_->phi_v(pe);
  if (td) {
    if (pc_->pairs()[pd].s.size() != 2) return true;
    return mask_subset(vd, ve) && vd != ve;
  }
  // nontrivial below trivial: route through the top max-rank pair under e
  std::optional<int> h = pc_->max_H(pe);
  if (!h) return false;
  PsiMask vh = pc_->phi_v(*h);
  return pc_->bruhat_leq_pairs(pd, *h) && mask_subset(vd, vh) && vd != vh;
}

Relation DContext::gorder_closed_relation(bool parallel) const {
  char type = pc_->sys().type;
  if (type == 'C')
    throw std::domain_error("no closed form for the type C G-order; use the fixpoint oracle");
  int n = (int)elems_.size();
  (void)pc_->bruhat_leq_pairs(0, 0);  // build the lazy order tables before forking
  Relation r(n);
  if (type == 'B') {
#pragma omp parallel for schedule(static) if (parallel)
    for (int d = 0; d < n; ++d)
      for (int e = 0; e < n; ++e)
        if (gorder_closed_B(d, e)) r.set(d, e);
  } else {
#pragma omp parallel for schedule(static) if (parallel)
    for (int d = 0; d < n; ++d)
      for (int e = 0; e < n; ++e)
        if (gorder_closed_ADE(d, e)) r.set(d, e);
  }
  return r;
}

std::vector<int> DContext::sign_sequence(int d) const {
  std::vector<int> out;
  for (auto& [pos, sg] : elems_[d].signs) out.push_back(sg);
  return out;
}

std::vector<int> DContext::reduce_classes() const {
  if (pc_->sys().type != 'C') throw std::invalid_argument("reduce classes are a type C notion");
  std::map<std::vector<int>, int> ids;
  std::vector<int> out;
  for (int d = 0; d < (int)elems_.size(); ++d) {
    std::vector<int> r = reduce_sequence(sign_sequence(d));
    auto [it, inserted] = ids.emplace(std::move(r), (int)ids.size());
    out.push_back(it->second);
  }
  return out;
}

}  // namespace borbit
