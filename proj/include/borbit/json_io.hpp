#pragma once

#include <string>
#include <utility>
#include <vector>

#include "borbit/local_systems.hpp"
#include "borbit/orbits.hpp"

#include "json.hpp"

namespace borbit {

using Json = nlohmann::ordered_json;

Json root_to_json(const RootSystem& sys, int root);
Json pair_to_json(const PairContext& pc, int pair);
Json delement_to_json(const DContext& dc, int d);

// {"elements": [...], "hasse_edges": [[i,j],...]} with covering edges only.
Json relation_to_json(const Json& elements, const Relation& rel);

// DOT digraph of the Hasse edges, plain node ids, label attributes; nodes get
// a color attribute when component ids are supplied.
std::string relation_to_dot(const std::vector<std::string>& labels, const Relation& rel,
                            const std::vector<int>* components = nullptr);

std::string pair_label(const PairContext& pc, int pair);
std::string delement_label(const DContext& dc, int d);

}  // namespace borbit
