#include "borbit/json_io.hpp"

#include <sstream>

namespace borbit {

Json root_to_json(const RootSystem& sys, int root) {
  return Json(sys.roots[root].coeffs);
}

Json pair_to_json(const PairContext& pc, int pair) {
  const AdmissiblePair& p = pc.pairs()[pair];
  Json j;
  j["v"] = mask_to_list(pc.wp()[p.v].inversion);
  j["s"] = p.s;
  return j;
}

Json delement_to_json(const DContext& dc, int d) {
  const DElement& el = dc.elements()[d];
  Json j = pair_to_json(dc.pairs(), el.pair);
  if (dc.pairs().sys().type == 'C') {
    Json signs = Json::array();
    for (auto& [pos, sg] : el.signs) signs.push_back({pos, sg});
    j["signs"] = signs;
  } else {
    j["char"] = el.nontrivial ? "nontrivial" : "trivial";
  }
  return j;
}

Json relation_to_json(const Json& elements, const Relation& rel) {
  Json j;
  j["elements"] = elements;
  Json edges = Json::array();
  for (auto [a, b] : hasse_edges(rel)) edges.push_back({a, b});
  j["hasse_edges"] = edges;
  return j;
}

std::string relation_to_dot(const std::vector<std::string>& labels, const Relation& rel,
                            const std::vector<int>* components) {
  static const char* palette[] = {"red",    "blue",   "green", "orange",
                                  "purple", "brown",  "cyan",  "magenta"};
  std::ostringstream out;
  out << "digraph G {\n";
  for (int i = 0; i < rel.n; ++i) {
    out << "  n" << i << " [label=\"" << labels[i] << "\"";
    if (components) out << ", color=\"" << palette[(*components)[i] % 8] << "\"";
    out << "];\n";
  }
  for (auto [a, b] : hasse_edges(rel)) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

static std::string index_list(const std::vector<int>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

std::string pair_label(const PairContext& pc, int pair) {
  const AdmissiblePair& p = pc.pairs()[pair];
  return "v=" + index_list(mask_to_list(pc.wp()[p.v].inversion)) + "|S=" + index_list(p.s);
}

std::string delement_label(const DContext& dc, int d) {
  const DElement& el = dc.elements()[d];
  std::string out = pair_label(dc.pairs(), el.pair);
  if (dc.pairs().sys().type == 'C') {
    out += "|X=";
    const std::vector<int> seq = dc.sign_sequence(d);
    for (size_t i = 0; i < seq.size(); ++i) {
      if (i) out += ",";
      out += seq[i] > 0 ? "+" : "-";
    }
  } else {
    out += el.nontrivial ? "|nontrivial" : "|trivial";
  }
  return out;
}

}  // namespace borbit
