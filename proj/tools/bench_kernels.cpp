// Times the OpenMP relation kernels against their serial references and
// verifies that both produce identical relations.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "borbit/local_systems.hpp"
#include "borbit/orbits.hpp"

using namespace borbit;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

template <typename F>
double time_best(F&& f, int iters) {
  double best = 1e300;
  for (int i = 0; i < iters; ++i) {
    auto t0 = Clock::now();
    f();
    best = std::min(best, ms_since(t0));
  }
  return best;
}

void bench_system(char type, int rank, int node, int iters) {
  RootSystem sys = build_system(type, rank);
  PairContext pc(sys, node);
  DContext dc(pc);
  std::printf("%s: %zu pairs, %zu local-system elements\n", pc.par().id().c_str(),
              pc.pairs().size(), dc.elements().size());

  Relation a, b;
  double ts, tp;

  (void)pc.closed_relation_serial();  // build the lazy order tables up front

  ts = time_best([&] { a = pc.closed_relation_serial(); }, iters);
  tp = time_best([&] { b = pc.closed_relation(); }, iters);
  std::printf("  closed relation      serial %8.2f ms   parallel %8.2f ms   %s\n", ts, tp,
              a == b ? "match" : "MISMATCH");

  Relation big = a;
  ts = time_best(
      [&] {
        Relation r = big;
        transitive_close_serial(r);
      },
      iters);
  tp = time_best(
      [&] {
        Relation r = big;
        transitive_close_parallel(r);
      },
      iters);
  std::printf("  transitive closure   serial %8.2f ms   parallel %8.2f ms\n", ts, tp);

  ts = time_best([&] { a = pc.standard_order_oracle_serial(); }, iters);
  tp = time_best([&] { b = pc.standard_order_oracle(); }, iters);
  std::printf("  orbit order fixpoint serial %8.2f ms   parallel %8.2f ms   %s\n", ts, tp,
              a == b ? "match" : "MISMATCH");

  ts = time_best([&] { a = dc.gorder_fixpoint_serial(); }, iters);
  tp = time_best([&] { b = dc.gorder_fixpoint(); }, iters);
  std::printf("  G-order fixpoint     serial %8.2f ms   parallel %8.2f ms   %s\n", ts, tp,
              a == b ? "match" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max %d threads\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled, parallel kernels run serially\n");
#endif
  int iters = 3;
  std::vector<std::string> systems = {"A6:3", "C4:4"};
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--iters" && i + 1 < argc)
      iters = std::atoi(argv[++i]);
    else if (arg == "--system" && i + 1 < argc) {
      if (systems.size() == 2 && systems[0] == "A6:3") systems.clear();
      systems.push_back(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--iters N] [--system <type><rank>:<node> ...]\n", argv[0]);
      return 2;
    }
  }
  for (const std::string& s : systems) {
    char type = s[0];
    size_t colon = s.find(':');
    int rank = std::stoi(s.substr(1, colon - 1));
    int node = std::stoi(s.substr(colon + 1));
    bench_system(type, rank, node - 1, iters);
  }
  return 0;
}
