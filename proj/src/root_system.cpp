#include "borbit/root_system.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace borbit {

int RootSystem::index_of(const Coeffs& c) const {
  auto it = root_index.find(c);
  return it == root_index.end() ? -1 : it->second;
}

int RootSystem::height(int r) const {
  const Coeffs& c = roots[r].coeffs;
  return std::accumulate(c.begin(), c.end(), 0);
}

long long RootSystem::inner(int a, int b) const {
  const Coeffs& x = roots[a].coeffs;
  const Coeffs& y = roots[b].coeffs;
  long long s = 0;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) s += (long long)x[i] * bilinear[i][j] * y[j];
  return s;
}

int RootSystem::pairing(int r, int i) const {
  const Coeffs& c = roots[r].coeffs;
  long long s = 0;
  for (int j = 0; j < rank; ++j) s += (long long)c[j] * cartan[j][i];
  return (int)s;
}

std::string RootSystem::label() const { return std::string(1, type) + std::to_string(rank); }

namespace {

// d_i = (a_i,a_i)/2, so short roots get squared length 2.
std::vector<int> half_lengths(char type, int rank) {
  std::vector<int> d(rank, 1);
  if (type == 'B') {
    for (int i = 0; i + 1 < rank; ++i) d[i] = 2;  // e_i - e_{i+1} long, e_n short
  } else if (type == 'C') {
    d[rank - 1] = 2;  // 2e_n long
  }
  return d;
}

std::vector<std::vector<int>> cartan_matrix(char type, int rank) {
  std::vector<std::vector<int>> c(rank, std::vector<int>(rank, 0));
  auto link = [&](int i, int j) { c[i][j] = c[j][i] = -1; };
  for (int i = 0; i < rank; ++i) c[i][i] = 2;
  switch (type) {
    case 'A':
      for (int i = 0; i + 1 < rank; ++i) link(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 2 < rank; ++i) link(i, i + 1);
      // <a_{n-1}, a_n^vee> = -2, <a_n, a_{n-1}^vee> = -1
      c[rank - 2][rank - 1] = -2;
      c[rank - 1][rank - 2] = -1;
      break;
    case 'C':
      for (int i = 0; i + 2 < rank; ++i) link(i, i + 1);
      c[rank - 2][rank - 1] = -1;
      c[rank - 1][rank - 2] = -2;
      break;
    case 'D':
      for (int i = 0; i + 2 < rank; ++i) link(i, i + 1);
      link(rank - 3, rank - 1);
      break;
    case 'E':
      // Bourbaki numbering, alpha_2 is the branch node attached to alpha_4.
      link(0, 2);
      link(2, 3);
      link(1, 3);
      link(3, 4);
      link(4, 5);
      if (rank == 7) link(5, 6);
      break;
    default:
      throw std::invalid_argument("unsupported type");
  }
  return c;
}

size_t expected_positive_count(char type, int rank) {
  switch (type) {
    case 'A': return (size_t)rank * (rank + 1) / 2;
    case 'B':
    case 'C': return (size_t)rank * rank;
    case 'D': return (size_t)rank * (rank - 1);
    case 'E': return rank == 6 ? 36 : 63;
  }
  return 0;
}

}  // namespace

RootSystem build_system(char type, int rank) {
  bool ok = (type == 'A' && rank >= 2) || (type == 'B' && rank >= 3) ||
            (type == 'C' && rank >= 2) || (type == 'D' && rank >= 4) ||
            (type == 'E' && (rank == 6 || rank == 7));
  if (!ok) throw std::invalid_argument("unsupported type/rank combination");

  RootSystem sys;
  sys.type = type;
  sys.rank = rank;
  sys.cartan = cartan_matrix(type, rank);
  std::vector<int> d = half_lengths(type, rank);
  sys.bilinear.assign(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) sys.bilinear[i][j] = sys.cartan[i][j] * d[j];
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      if (sys.bilinear[i][j] != sys.bilinear[j][i])
        throw std::logic_error("bilinear form not symmetric");

  // Close the simple roots under root addition, level by level. r + a_i is a
  // root iff the a_i-string through r extends forward, i.e.
  // q - <r, a_i^vee> >= 1 with q the depth of the backward string.
  std::map<Coeffs, int> seen;  // coeffs -> provisional height
  std::vector<Coeffs> pos;
  for (int i = 0; i < rank; ++i) {
    Coeffs c(rank, 0);
    c[i] = 1;
    pos.push_back(c);
    seen.emplace(c, 1);
  }
  auto pair_with = [&](const Coeffs& c, int i) {
    long long s = 0;
    for (int j = 0; j < rank; ++j) s += (long long)c[j] * sys.cartan[j][i];
    return (int)s;
  };
  for (size_t k = 0; k < pos.size(); ++k) {
    Coeffs r = pos[k];
    for (int i = 0; i < rank; ++i) {
      int q = 0;
      Coeffs t = r;
      t[i] -= 1;
      while (seen.count(t)) {
        ++q;
        t[i] -= 1;
      }
      if (q - pair_with(r, i) >= 1) {
        Coeffs u = r;
        u[i] += 1;
        if (!seen.count(u)) {
          seen.emplace(u, 0);
          pos.push_back(u);
        }
      }
    }
  }
  if (pos.size() != expected_positive_count(type, rank))
    throw std::logic_error("root closure produced an unexpected count");

  std::sort(pos.begin(), pos.end(), [&](const Coeffs& a, const Coeffs& b) {
    int ha = std::accumulate(a.begin(), a.end(), 0);
    int hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb) return ha < hb;
    return a < b;
  });

  auto squared = [&](const Coeffs& c) {
    long long s = 0;
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) s += (long long)c[i] * sys.bilinear[i][j] * c[j];
    return s;
  };
  long long maxsq = 0;
  for (const Coeffs& c : pos) maxsq = std::max(maxsq, squared(c));

  sys.n_positive = (int)pos.size();
  sys.roots.reserve(2 * pos.size());
  for (const Coeffs& c : pos)
    sys.roots.push_back({c, squared(c) == maxsq ? RootLength::Long : RootLength::Short});
  for (const Coeffs& c : pos) {
    Coeffs n(rank);
    for (int i = 0; i < rank; ++i) n[i] = -c[i];
    sys.roots.push_back({n, squared(c) == maxsq ? RootLength::Long : RootLength::Short});
  }
  for (int i = 0; i < (int)sys.roots.size(); ++i) sys.root_index.emplace(sys.roots[i].coeffs, i);

  sys.simple_index_.resize(rank);
  for (int i = 0; i < rank; ++i) {
    Coeffs c(rank, 0);
    c[i] = 1;
    sys.simple_index_[i] = sys.index_of(c);
  }

  // The highest root is the unique positive root of maximal height.
  sys.highest = sys.n_positive - 1;
  for (int i = 0; i < rank; ++i) {
    Coeffs u = sys.roots[sys.highest].coeffs;
    u[i] += 1;
    if (sys.is_root(u)) throw std::logic_error("highest root is not maximal");
  }
  return sys;
}

std::vector<int> cominuscule_nodes(const RootSystem& sys) {
  std::vector<int> out;
  const Coeffs& theta = sys.roots[sys.highest].coeffs;
  for (int i = 0; i < sys.rank; ++i)
    if (theta[i] == 1) out.push_back(i);
  return out;
}

std::string ParabolicData::id() const {
  return sys->label() + ":" + std::to_string(node + 1);
}

ParabolicData parabolic(const RootSystem& sys, int node) {
  std::vector<int> nodes = cominuscule_nodes(sys);
  if (std::find(nodes.begin(), nodes.end(), node) == nodes.end())
    throw std::invalid_argument("node is not cominuscule");
  ParabolicData par;
  par.sys = &sys;
  par.node = node;
  par.psi_pos_of_root.assign(sys.roots.size(), -1);
  for (int r = 0; r < sys.n_positive; ++r) {
    int c = sys.roots[r].coeffs[node];
    if (c == 0) {
      par.phi_p_plus.push_back(r);
    } else if (c == 1) {
      par.psi_pos_of_root[r] = (int)par.psi.size();
      par.psi.push_back(r);
    } else {
      throw std::logic_error("cominuscule node with coefficient above 1");
    }
  }
  for (int i = 0; i < sys.rank; ++i)
    if (i != node) par.delta_p.push_back(i);
  return par;
}

bool root_leq(const RootSystem& sys, int a, int b) {
  const Coeffs& x = sys.roots[a].coeffs;
  const Coeffs& y = sys.roots[b].coeffs;
  for (int i = 0; i < sys.rank; ++i)
    if (y[i] < x[i]) return false;
  return true;
}

bool is_orthogonal_set(const RootSystem& sys, const std::vector<int>& roots) {
  for (size_t i = 0; i < roots.size(); ++i)
    for (size_t j = i + 1; j < roots.size(); ++j)
      if (sys.inner(roots[i], roots[j]) != 0) return false;
  return true;
}

bool strongly_orthogonal_set(const RootSystem& sys, const std::vector<int>& roots) {
  if (!is_orthogonal_set(sys, roots)) return false;
  for (size_t i = 0; i < roots.size(); ++i)
    for (size_t j = i + 1; j < roots.size(); ++j) {
      Coeffs sum(sys.rank), diff(sys.rank);
      const Coeffs& x = sys.roots[roots[i]].coeffs;
      const Coeffs& y = sys.roots[roots[j]].coeffs;
      for (int k = 0; k < sys.rank; ++k) {
        sum[k] = x[k] + y[k];
        diff[k] = x[k] - y[k];
      }
      if (sys.is_root(sum) || sys.is_root(diff)) return false;
    }
  return true;
}

std::vector<std::vector<int>> maximal_orthogonal_subsets(const ParabolicData& par) {
  const RootSystem& sys = *par.sys;
  int n = (int)par.psi.size();
  std::vector<std::vector<char>> orth(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      orth[i][j] = i != j && sys.inner(par.psi[i], par.psi[j]) == 0;

  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto maximal = [&]() {
    for (int c = 0; c < n; ++c) {
      bool ext = true;
      for (int m : cur)
        if (!orth[c][m]) { ext = false; break; }
      if (ext && std::find(cur.begin(), cur.end(), c) == cur.end()) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, int start) -> void {
    if (maximal()) out.push_back(cur);
    for (int c = start; c < n; ++c) {
      bool ok = true;
      for (int m : cur)
        if (!orth[c][m]) { ok = false; break; }
      if (!ok) continue;
      cur.push_back(c);
      self(self, c + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool property_unic(const ParabolicData& par) {
  const RootSystem& sys = *par.sys;
  std::vector<std::vector<int>> incomparable;
  for (const auto& s : maximal_orthogonal_subsets(par)) {
    bool inc = true;
    for (size_t i = 0; i < s.size() && inc; ++i)
      for (size_t j = i + 1; j < s.size() && inc; ++j)
        if (root_leq(sys, par.psi[s[i]], par.psi[s[j]]) ||
            root_leq(sys, par.psi[s[j]], par.psi[s[i]]))
          inc = false;
    if (inc) incomparable.push_back(s);
  }
  for (size_t i = 1; i < incomparable.size(); ++i)
    if (incomparable[i] != incomparable[0]) return false;
  return true;
}

std::vector<int> to_euclid(const RootSystem& sys, int root) {
  int n = sys.rank;
  int dim = sys.type == 'A' ? n + 1 : n;
  std::vector<std::vector<int>> simple(n, std::vector<int>(dim, 0));
  for (int i = 0; i + 1 < n; ++i) {
    simple[i][i] = 1;
    simple[i][i + 1] = -1;
  }
  switch (sys.type) {
    case 'A':
      simple[n - 1][n - 1] = 1;
      simple[n - 1][n] = -1;
      break;
    case 'B':
      simple[n - 1][n - 1] = 1;
      break;
    case 'C':
      simple[n - 1][n - 1] = 2;
      break;
    case 'D':
      simple[n - 1][n - 2] = 1;
      simple[n - 1][n - 1] = 1;
      break;
    default:
      throw std::invalid_argument("no classical chart for this type");
  }
  std::vector<int> out(dim, 0);
  const Coeffs& c = sys.roots[root].coeffs;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < dim; ++k) out[k] += c[i] * simple[i][k];
  return out;
}

}  // namespace borbit
