// Command line frontend: enumeration, order computation, Hasse/DOT export,
// local-system counts, cache management and the self-check suites.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "borbit/json_io.hpp"
#include "borbit/local_systems.hpp"
#include "borbit/orbits.hpp"
#include "borbit/selftest.hpp"

namespace fs = std::filesystem;
using namespace borbit;

namespace {

constexpr int kOracleGuard = 1000;
constexpr const char* kSchemaVersion = "v1";

struct JobSpec {
  std::string type = "A";
  int rank = 0;
  int node = 0;  // 1-based on the command line
  std::string order = "bruhat";
  std::string method = "closed";
  std::string format = "json";
  std::string out;
};

fs::path cache_root() {
  if (const char* env = std::getenv("BORBIT_CACHE_DIR")) return fs::path(env);
  return fs::path(".borbit-cache");
}

void write_output(const std::string& out, const std::string& text) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + out);
  f << text;
}

const PairContext& context_for(const JobSpec& spec) {
  static std::optional<RootSystem> sys;
  static std::optional<PairContext> pc;
  if (!pc) {
    sys.emplace(build_system(spec.type.at(0), spec.rank));
    pc.emplace(*sys, spec.node - 1);
  }
  return *pc;
}

Json pair_elements(const PairContext& pc) {
  Json elements = Json::array();
  for (int p = 0; p < (int)pc.pairs().size(); ++p) elements.push_back(pair_to_json(pc, p));
  return elements;
}

Json delement_elements(const DContext& dc) {
  Json elements = Json::array();
  for (int d = 0; d < (int)dc.elements().size(); ++d) elements.push_back(delement_to_json(dc, d));
  return elements;
}

// The relation payload is what gets cached; JSON and DOT renderings both
// derive from it, so cached and fresh runs emit identical bytes.
Json relation_payload(const JobSpec& spec) {
  const PairContext& pc = context_for(spec);
  Json payload;
  payload["system"] = pc.par().id();
  payload["schema"] = 1;
  payload["order"] = spec.order;
  payload["method"] = spec.method;

  Relation closed, oracle;
  bool have_closed = false, have_oracle = false;
  if (spec.order == "bruhat") {
    payload["elements"] = pair_elements(pc);
    if (spec.method != "oracle") {
      closed = pc.closed_relation();
      have_closed = true;
    }
    if (spec.method != "closed") {
      if ((int)pc.pairs().size() > kOracleGuard)
        throw std::runtime_error("guard exceeded: oracle limited to 1000 elements");
      oracle = pc.standard_order_oracle();
      have_oracle = true;
    }
  } else {
    DContext dc(pc);
    payload["elements"] = delement_elements(dc);
    if (spec.method != "oracle") {
      closed = dc.gorder_closed_relation();  // throws for type C
      have_closed = true;
    }
    if (spec.method != "closed") {
      if ((int)dc.elements().size() > kOracleGuard)
        throw std::runtime_error("guard exceeded: oracle limited to 1000 elements");
      oracle = dc.gorder_fixpoint();
      have_oracle = true;
    }
  }

  const Relation& rel = have_oracle ? oracle : closed;
  Json edges = Json::array();
  for (auto [a, b] : hasse_edges(rel)) edges.push_back({a, b});
  payload["hasse_edges"] = edges;
  if (have_closed && have_oracle) {
    Json diffs = Json::array();
    for (int i = 0; i < rel.n; ++i)
      for (int j = 0; j < rel.n; ++j) {
        if (closed.get(i, j) == oracle.get(i, j)) continue;
        diffs.push_back({i, j, closed.get(i, j) ? "closed" : "oracle"});
      }
    payload["agree"] = diffs.empty();
    payload["diffs"] = diffs;
  }
  return payload;
}

std::string cached_payload_text(const JobSpec& spec) {
  const std::string id = std::string(1, spec.type.at(0)) + std::to_string(spec.rank) + ":" +
                         std::to_string(spec.node);
  std::string key = id + ":" + spec.order + ":" + spec.method + ":" + kSchemaVersion;
  for (char& c : key)
    if (c == ':') c = '_';
  fs::path file = cache_root() / (key + ".json");
  if (fs::exists(file)) {
    std::ifstream f(file, std::ios::binary);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
  }
  std::string text = relation_payload(spec).dump(2) + "\n";
  fs::create_directories(cache_root());
  std::ofstream f(file, std::ios::binary);
  f << text;
  return text;
}

std::string label_from_json(const Json& el) {
  auto list = [](const Json& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) out += ",";
      out += v[i].dump();
    }
    return out;
  };
  std::string out = "v=" + list(el["v"]) + "|S=" + list(el["s"]);
  if (el.contains("char")) out += "|" + el["char"].get<std::string>();
  if (el.contains("signs")) {
    out += "|X=";
    const Json& signs = el["signs"];
    for (size_t i = 0; i < signs.size(); ++i) {
      if (i) out += ",";
      out += signs[i][1].get<int>() > 0 ? "+" : "-";
    }
  }
  return out;
}

std::string render(const JobSpec& spec, const std::string& payload_text) {
  if (spec.format == "json") return payload_text;
  Json payload = Json::parse(payload_text);
  int n = (int)payload["elements"].size();
  Relation rel(n);
  rel.set_diagonal();
  for (const Json& e : payload["hasse_edges"]) rel.set(e[0].get<int>(), e[1].get<int>());
  transitive_close_serial(rel);
  std::vector<std::string> labels;
  for (const Json& el : payload["elements"]) labels.push_back(label_from_json(el));
  if (spec.order == "gorder") {
    std::vector<std::pair<int, int>> edges;
    for (const Json& e : payload["hasse_edges"]) edges.push_back({e[0], e[1]});
    std::vector<int> comp = weak_components(n, edges);
    return relation_to_dot(labels, rel, &comp);
  }
  return relation_to_dot(labels, rel);
}

int cmd_enumerate(const JobSpec& spec) {
  const PairContext& pc = context_for(spec);
  Json j;
  j["system"] = pc.par().id();
  j["schema"] = 1;
  Json psi = Json::array();
  for (int r : pc.par().psi) psi.push_back(root_to_json(pc.sys(), r));
  j["psi"] = psi;
  j["pairs"] = pair_elements(pc);
  if (spec.order == "gorder") {
    DContext dc(pc);
    j["d_elements"] = delement_elements(dc);
  }
  write_output(spec.out, j.dump(2) + "\n");
  return 0;
}

int cmd_order(const JobSpec& spec) {
  try {
    write_output(spec.out, render(spec, cached_payload_text(spec)));
  } catch (const std::domain_error& e) {
    // no closed form in type C; offer the component decomposition instead
    std::cerr << "error: " << e.what() << " (--method oracle)\n";
    if (!spec.out.empty()) {
      const PairContext& pc = context_for(spec);
      DContext dc(pc);
      Json j;
      j["system"] = pc.par().id();
      j["schema"] = 1;
      j["elements"] = delement_elements(dc);
      j["reduce_classes"] = dc.reduce_classes();
      write_output(spec.out, j.dump(2) + "\n");
      std::cerr << "wrote the reduce-class components to " << spec.out << "\n";
    }
    return 2;
  }
  return 0;
}

int cmd_locsys_count(const JobSpec& spec) {
  const PairContext& pc = context_for(spec);
  Json j;
  j["system"] = pc.par().id();
  j["schema"] = 1;
  j["pairs"] = pair_elements(pc);
  Json closed = Json::array(), lattice = Json::array();
  bool agree = true;
  for (int p = 0; p < (int)pc.pairs().size(); ++p) {
    long long c = count_local_systems_closed(pc, p);
    long long l = count_local_systems_lattice(pc, p);
    closed.push_back(c);
    lattice.push_back(l);
    agree = agree && c == l;
  }
  j["closed"] = closed;
  j["lattice"] = lattice;
  j["agree"] = agree;
  write_output(spec.out, j.dump(2) + "\n");
  return agree ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"B-orbit posets and equivariant local systems on Hermitian symmetric varieties"};
  app.require_subcommand(1);

  JobSpec spec;
  std::string suite = "all";

  auto add_system_flags = [&](CLI::App* cmd, bool with_order) {
    cmd->add_option("--type", spec.type, "root system type: A, B, C, D or E")->required();
    cmd->add_option("--rank", spec.rank, "rank")->required();
    cmd->add_option("--node", spec.node, "cominuscule node, 1-based")->required();
    cmd->add_option("--out", spec.out, "output file (stdout when omitted)");
    if (with_order)
      cmd->add_option("--order", spec.order, "bruhat or gorder")
          ->check(CLI::IsMember({"bruhat", "gorder"}));
  };

  CLI::App* enumerate = app.add_subcommand("enumerate", "admissible pairs (and D for gorder)");
  add_system_flags(enumerate, true);

  CLI::App* order = app.add_subcommand("order", "order relation as elements plus Hasse edges");
  add_system_flags(order, true);
  order->add_option("--method", spec.method, "closed, oracle or both")
      ->check(CLI::IsMember({"closed", "oracle", "both"}));
  order->add_option("--format", spec.format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}));

  CLI::App* hasse = app.add_subcommand("hasse", "Hasse diagram of the order");
  add_system_flags(hasse, true);
  hasse->add_option("--method", spec.method, "closed, oracle or both")
      ->check(CLI::IsMember({"closed", "oracle", "both"}));
  hasse->add_option("--format", spec.format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}));

  CLI::App* locsys = app.add_subcommand("locsys-count", "local-system counts per orbit");
  add_system_flags(locsys, false);

  CLI::App* check = app.add_subcommand("check", "run a self-check suite");
  check->add_option("suite", suite, "all, orders, locsys or sequences");

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) {
      if (!known_suite(suite)) {
        std::cerr << "error: unknown suite '" << suite
                  << "' (expected all, orders, locsys or sequences)\n";
        return 2;
      }
      CheckResult res = run_check_suite(suite, std::cout);
      std::cout << res.passed << " passed, " << res.failed << " failed\n";
      return res.failed == 0 ? 0 : 1;
    }
    if (enumerate->parsed()) return cmd_enumerate(spec);
    if (order->parsed() || hasse->parsed()) return cmd_order(spec);
    if (locsys->parsed()) return cmd_locsys_count(spec);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
