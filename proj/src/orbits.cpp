#include "borbit/orbits.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace borbit {

const char* case_name(CaseLabel l) {
  switch (l) {
    case CaseLabel::CompactImaginary: return "compact_imaginary";
    case CaseLabel::NoncompactImaginaryD1: return "noncompact_imaginary_d1";
    case CaseLabel::C1: return "c1";
    case CaseLabel::ComplexAscentV: return "complex_ascent_v";
    case CaseLabel::ComplexAscentS: return "complex_ascent_S";
    case CaseLabel::RealDescent: return "real_descent";
    case CaseLabel::ComplexDescentV: return "complex_descent_v";
    case CaseLabel::ComplexDescentS: return "complex_descent_S";
  }
  return "?";
}

PairContext::PairContext(const RootSystem& sys, int node)
    : sys_(&sys), par_(parabolic(sys, node)), wctx_(std::make_unique<WeylContext>(sys)) {
  build_pairs();
  build_action();
}

int PairContext::wp_index(PsiMask inversion) const {
  auto it = wp_by_mask_.find(inversion);
  return it == wp_by_mask_.end() ? -1 : it->second;
}

int PairContext::pair_index(int v, const std::vector<int>& s) const {
  auto it = pair_by_key_.find({v, s});
  return it == pair_by_key_.end() ? -1 : it->second;
}

void PairContext::build_pairs() {
  down_ = psi_down_masks(par_);
  int n = (int)par_.psi.size();
  orth_.assign(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && sys_->inner(par_.psi[a], par_.psi[b]) == 0) orth_[a] |= PsiMask(1) << b;

  wp_ = wp_elements(par_);
  for (int i = 0; i < (int)wp_.size(); ++i) wp_by_mask_.emplace(wp_[i].inversion, i);
  for (const WPElement& v : wp_) wp_inv_.push_back(weyl_inverse(*sys_, v.w));

  // Every v^{-1}(alpha) must land in Delta_P, Psi or -Psi per the stronger
  // trichotomy; count the exceptions inside the Levi instead of assuming it.
  for (int vi = 0; vi < (int)wp_.size(); ++vi)
    for (int a = 0; a < sys_->rank; ++a) {
      int beta = weyl_apply_root(*sys_, wp_inv_[vi], sys_->simple(a));
      if (sys_->positive(beta) && sys_->roots[beta].coeffs[par_.node] == 0) {
        bool simple = false;
        for (int i = 0; i < sys_->rank; ++i) simple |= beta == sys_->simple(i);
        if (!simple) ++nonsimple_levi_betas_;
      }
    }

  for (int vi = 0; vi < (int)wp_.size(); ++vi) {
    std::vector<int> avail = mask_to_list(wp_[vi].inversion);
    std::vector<std::vector<int>> subs;
    std::vector<int> cur;
    PsiMask cur_orth = ~PsiMask(0);
    auto rec = [&](auto&& self, size_t k) -> void {
      subs.push_back(cur);
      for (size_t t = k; t < avail.size(); ++t) {
        int c = avail[t];
        if (!((cur_orth >> c) & 1)) continue;
        PsiMask saved = cur_orth;
        cur.push_back(c);
        cur_orth &= orth_[c];
        self(self, t + 1);
        cur.pop_back();
        cur_orth = saved;
      }
    };
    rec(rec, 0);
    std::sort(subs.begin(), subs.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    });
    for (auto& s : subs) {
      pair_by_key_.emplace(std::make_pair(vi, s), (int)pairs_.size());
      pairs_.push_back({vi, std::move(s)});
    }
  }
}

AscentDescentCase PairContext::classify_impl(int alpha, int pair) const {
  const AdmissiblePair& p = pairs_[pair];
  int alpha_root = sys_->simple(alpha);
  int beta = weyl_apply_root(*sys_, wp_inv_[p.v], alpha_root);
  int sa = weyl_apply_root(*sys_, sigma_[pair], alpha_root);
  int nodec = sys_->roots[beta].coeffs[par_.node];

  AscentDescentCase out;
  out.beta = beta;
  if (!sys_->positive(sa)) {
    int nb_pos = nodec == -1 ? par_.psi_pos(sys_->negate(beta)) : -1;
    if (nb_pos >= 0 && std::binary_search(p.s.begin(), p.s.end(), nb_pos))
      out.label = CaseLabel::RealDescent;
    else if (nodec == -1)
      out.label = CaseLabel::ComplexDescentV;
    else
      out.label = CaseLabel::ComplexDescentS;
    return out;
  }
  if (sa == alpha_root) {
    // imaginary: a new orthogonal root joins S unless beta stays in the Levi
    if (nodec != 0) {
      out.label = CaseLabel::NoncompactImaginaryD1;
      return out;
    }
    if (!sys_->positive(beta)) throw std::logic_error("negative Levi beta under W^P");
    for (int pos : p.s) {
      const Coeffs& g = sys_->roots[par_.psi[pos]].coeffs;
      const Coeffs& b = sys_->roots[beta].coeffs;
      Coeffs sum(sys_->rank), diff(sys_->rank);
      for (int i = 0; i < sys_->rank; ++i) {
        sum[i] = g[i] + b[i];
        diff[i] = g[i] - b[i];
      }
      if (sys_->is_root(sum) && sys_->is_root(diff)) {
        out.label = CaseLabel::C1;
        out.witness = pos;
        return out;
      }
    }
    out.label = CaseLabel::CompactImaginary;
    return out;
  }
  // complex ascent for sigma
  if (nodec == 1) {
    out.label = CaseLabel::ComplexAscentV;
  } else if (nodec == 0) {
    if (!sys_->positive(beta)) throw std::logic_error("negative Levi beta under W^P");
    out.label = CaseLabel::ComplexAscentS;
  } else {
    // ruled out: a complex sigma ascent with -beta maximal in Phi^+(v) would
    // put a larger root of Phi^+(v) above it
    throw std::logic_error("complex sigma ascent with v^{-1}(alpha) in -Psi");
  }
  return out;
}

int PairContext::apply_move(int pair, const AscentDescentCase& c) const {
  const AdmissiblePair& p = pairs_[pair];
  if (!is_ascent(c.label)) return pair;

  int v2 = p.v;
  std::vector<int> s2 = p.s;
  switch (c.label) {
    case CaseLabel::ComplexAscentV: {
      int pos = par_.psi_pos(c.beta);
      v2 = wp_index(wp_[p.v].inversion | (PsiMask(1) << pos));
      break;
    }
    case CaseLabel::ComplexAscentS: {
      WeylElement sb = root_reflection(*sys_, c.beta);
      for (int& pos : s2) {
        int moved = weyl_apply_root(*sys_, sb, par_.psi[pos]);
        pos = par_.psi_pos(moved);
        if (pos < 0) throw std::logic_error("S left Psi under an ascent on S");
      }
      std::sort(s2.begin(), s2.end());
      break;
    }
    case CaseLabel::NoncompactImaginaryD1: {
      int b = sys_->positive(c.beta) ? c.beta : sys_->negate(c.beta);
      int pos = par_.psi_pos(b);
      if (sys_->positive(c.beta))
        v2 = wp_index(wp_[p.v].inversion | (PsiMask(1) << pos));
      s2.insert(std::lower_bound(s2.begin(), s2.end(), pos), pos);
      break;
    }
    case CaseLabel::C1: {
      int gamma = par_.psi[*c.witness];
      const Coeffs& g = sys_->roots[gamma].coeffs;
      const Coeffs& b = sys_->roots[c.beta].coeffs;
      Coeffs sum(sys_->rank), diff(sys_->rank);
      for (int i = 0; i < sys_->rank; ++i) {
        sum[i] = g[i] + b[i];
        diff[i] = g[i] - b[i];
      }
      int ppos = par_.psi_pos(sys_->index_of(sum));
      int mpos = par_.psi_pos(sys_->index_of(diff));
      if (ppos < 0 || mpos < 0) throw std::logic_error("c1 move left Psi");
      s2.erase(std::find(s2.begin(), s2.end(), *c.witness));
      s2.insert(std::lower_bound(s2.begin(), s2.end(), ppos), ppos);
      s2.insert(std::lower_bound(s2.begin(), s2.end(), mpos), mpos);
      break;
    }
    default:
      break;
  }
  if (v2 < 0) throw std::logic_error(std::string("ascent left W^P in case ") + case_name(c.label));
  int idx = pair_index(v2, s2);
  if (idx < 0)
    throw std::logic_error(std::string("non-admissible pair out of case ") + case_name(c.label));
  return idx;
}

void PairContext::build_action() {
  int rank = sys_->rank;
  sigma_.reserve(pairs_.size());
  for (const AdmissiblePair& p : pairs_) {
    std::vector<int> image;
    for (int pos : p.s) image.push_back(weyl_apply_root(*sys_, wp_[p.v].w, par_.psi[pos]));
    sigma_.push_back(sigma_of_set(*sys_, image));
  }
  cls_.resize(pairs_.size() * rank);
  m_.resize(pairs_.size() * rank);
  for (int p = 0; p < (int)pairs_.size(); ++p)
    for (int a = 0; a < rank; ++a) {
      AscentDescentCase c = classify_impl(a, p);
      m_[p * rank + a] = apply_move(p, c);
      cls_[p * rank + a] = c;
    }
}

const AscentDescentCase& PairContext::classify(int alpha, int pair) const {
  return cls_[pair * sys_->rank + alpha];
}

int PairContext::m_alpha(int alpha, int pair) const { return m_[pair * sys_->rank + alpha]; }

std::vector<int> PairContext::e_alpha(int alpha, int pair) const {
  std::vector<int> out;
  for (int q = 0; q < (int)pairs_.size(); ++q)
    if (q != pair && m_alpha(alpha, q) == pair) out.push_back(q);
  return out;
}

void PairContext::ensure_order_tables() const {
  if (order_ready_) return;
  std::map<std::vector<int>, int> ids;
  sigma_id_.resize(pairs_.size());
  std::vector<const WeylElement*> distinct;
  for (int p = 0; p < (int)pairs_.size(); ++p) {
    auto [it, inserted] = ids.emplace(sigma_[p].m, (int)distinct.size());
    if (inserted) distinct.push_back(&sigma_[p]);
    sigma_id_[p] = it->second;
  }
  pmin_.resize(pairs_.size());
  for (int p = 0; p < (int)pairs_.size(); ++p) {
    std::vector<int> roots;
    for (int pos : pairs_[p].s) roots.push_back(par_.psi[pos]);
    WeylElement vs = weyl_multiply(wp_[pairs_[p].v].w, sigma_of_set(*sys_, roots));
    pmin_[p] = min_coset_rep(par_, vs).inversion;
  }
  int m = (int)distinct.size();
  sigma_leq_ = Relation(m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (wctx_->bruhat_leq(*distinct[a], *distinct[b])) sigma_leq_.set(a, b);
  order_ready_ = true;
}

bool PairContext::bruhat_leq_pairs(int p, int q) const {
  ensure_order_tables();
  return mask_subset(pmin_[q], pmin_[p]) && mask_subset(pmin_[p], phi_v(p)) &&
         mask_subset(phi_v(p), phi_v(q)) && sigma_leq_.get(sigma_id_[p], sigma_id_[q]);
}

Relation PairContext::closed_relation_serial() const {
  ensure_order_tables();
  int n = (int)pairs_.size();
  Relation r(n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (bruhat_leq_pairs(p, q)) r.set(p, q);
  return r;
}

Relation PairContext::closed_relation(bool parallel) const {
  if (!parallel) return closed_relation_serial();
  ensure_order_tables();
  int n = (int)pairs_.size();
  Relation r(n);
#pragma omp parallel for schedule(static)
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (bruhat_leq_pairs(p, q)) r.set(p, q);
  return r;
}

Relation PairContext::standard_order_oracle(bool parallel) const {
  int n = (int)pairs_.size();
  int rank = sys_->rank;
  Relation rel(n);
  rel.set_diagonal();
  for (int p = 0; p < n; ++p)
    for (int a = 0; a < rank; ++a) rel.set(p, m_alpha(a, p));
  transitive_close(rel, parallel);

  // owner lists make the sweep single-writer per row
  std::vector<std::vector<std::pair<int, int>>> owners(n);
  for (int p = 0; p < n; ++p)
    for (int a = 0; a < rank; ++a) owners[m_alpha(a, p)].push_back({p, a});

  while (true) {
    Relation add(n);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int r = 0; r < n; ++r) {
      for (auto [p, a] : owners[r])
        for (int e : rel.row_list(p)) add.set(r, m_alpha(a, e));
    }
    Relation next = rel;
    for (size_t w = 0; w < next.bits.size(); ++w) next.bits[w] |= add.bits[w];
    transitive_close(next, parallel);
    if (next == rel) break;
    rel = std::move(next);
  }
  if (!is_antisymmetric(rel)) throw std::runtime_error("standard order fixpoint has a cycle");
  return rel;
}

Relation PairContext::standard_order_oracle_serial() const {
  // naive reference: booleans, repeated closure and monotonicity passes
  int n = (int)pairs_.size();
  int rank = sys_->rank;
  std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
  for (int p = 0; p < n; ++p) {
    rel[p][p] = 1;
    for (int a = 0; a < rank; ++a) rel[p][m_alpha(a, p)] = 1;
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
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        if (!rel[p][q]) continue;
        for (int a = 0; a < rank; ++a) {
          int mp = m_alpha(a, p), mq = m_alpha(a, q);
          if (!rel[mp][mq]) {
            rel[mp][mq] = 1;
            changed = true;
          }
        }
      }
  }
  Relation out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rel[i][j]) out.set(i, j);
  if (!is_antisymmetric(out)) throw std::runtime_error("standard order fixpoint has a cycle");
  return out;
}

bool PairContext::is_max_rank(int pair) const {
  // maximum rank = maximum cardinality among the orthogonal subsets of Psi;
  // in type B this is the rank-2 family even though singletons like {e_1}
  // are already inclusion-maximal
  if (max_rank_size_ < 0) {
    size_t m = 0;
    for (const AdmissiblePair& q : pairs_) m = std::max(m, q.s.size());
    max_rank_size_ = (int)m;
  }
  return (int)pairs_[pair].s.size() == max_rank_size_;
}

std::vector<int> PairContext::max_rank_pairs() const {
  std::vector<int> out;
  for (int p = 0; p < (int)pairs_.size(); ++p)
    if (is_max_rank(p)) out.push_back(p);
  return out;
}

int PairContext::minimal_max_rank() const {
  std::vector<int> rm = max_rank_pairs();
  for (int cand : rm) {
    bool minimum = true;
    for (int q : rm)
      if (!bruhat_leq_pairs(cand, q)) {
        minimum = false;
        break;
      }
    if (minimum) return cand;
  }
  throw std::runtime_error("no minimum among the max-rank pairs");
}

std::optional<int> PairContext::max_H(int pair) const {
  if (sys_->type != 'B') throw std::invalid_argument("max_H is a type B computation");
  const AdmissiblePair& p = pairs_[pair];
  if (p.s.size() == 2) return pair;
  if (p.s.empty()) return std::nullopt;

  // chain positions in Psi: e_1-e_h at h-2, e_1 at n-1, e_1+e_j at 2n-j
  int n = sys_->rank;
  int gpos = p.s[0];
  PsiMask inv = phi_v(pair);
  int bpos = std::bit_width(inv) - 1;  // maximum of Phi^+(v)
  if (bpos < n) return std::nullopt;           // beta below e_1+e_n
  if (gpos >= n - 2) return std::nullopt;      // gamma at least e_1-e_n
  int h = gpos + 2;
  int j = 2 * n - bpos;
  int idx;
  if (h < j) {
    idx = pair_index(p.v, {j - 2, 2 * n - j});
  } else {
    int vpos = 2 * n - (h + 1);
    int vi = wp_index((PsiMask(1) << (vpos + 1)) - 1);
    if (vi < 0) throw std::logic_error("prefix element missing from W^P");
    idx = pair_index(vi, {h - 1, vpos});
  }
  if (idx < 0) throw std::logic_error("max_H target is not an admissible pair");
  return idx;
}

}  // namespace borbit
