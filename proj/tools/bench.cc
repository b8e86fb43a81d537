// Serial vs parallel kernels, and high- vs low-level presets, on one graph.
#include <CLI11.hpp>
#include <cstdio>
#include <functional>
#include <optional>

#include "gpm/apps/presets.h"
#include "gpm/generators.h"

using namespace gpm;

namespace {

void row(const char* name, const char* variant, const MiningResult& r) {
  std::printf("%-14s %-10s workers=%-3d wall_ms=%10.2f enumerated=%14llu total_support=%llu\n", name, variant,
              r.workers, r.wall_ms, static_cast<unsigned long long>(r.enumerated),
              static_cast<unsigned long long>(r.supports.total()));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gpm benchmark"};
  std::string path;
  vid_t n = 5000;
  std::uint64_t seed = 1;
  int threads = 0;
  app.add_option("graph", path, "edge-list file (default: generated clustered graph)");
  app.add_option("-n", n, "vertices of the generated graph");
  app.add_option("--seed", seed, "generator seed");
  app.add_option("--threads", threads, "parallel worker count");
  CLI11_PARSE(app, argc, argv);

  const Graph g = path.empty() ? gen::clustered(n, 20, 0.5, 4.0, seed) : load_edge_list(path);
  std::printf("graph: %u vertices, %llu edges\n", g.num_vertices(), static_cast<unsigned long long>(g.num_edges()));

  EngineOptions serial;
  serial.workers = 1;
  EngineOptions parallel;
  parallel.workers = resolve_workers(threads);

  struct Kernel {
    const char* name;
    std::function<MiningResult(const EngineOptions&)> run;
  };
  const std::vector<Kernel> kernels = {
      {"tc", [&](const EngineOptions& o) { return apps::triangle_count(g, o); }},
      {"4-clique", [&](const EngineOptions& o) { return apps::clique_count(g, 4, apps::Level::hi, o); }},
      {"3-motif", [&](const EngineOptions& o) { return apps::motif_count(g, 3, apps::Level::hi, o); }},
      {"diamond-sl", [&](const EngineOptions& o) { return apps::subgraph_listing(g, Pattern::diamond(), o); }},
  };
  for (const auto& k : kernels) {
    const auto a = k.run(serial);
    const auto b = k.run(parallel);
    row(k.name, "serial", a);
    row(k.name, "parallel", b);
    if (!(a.supports == b.supports)) std::printf("%-14s MISMATCH between serial and parallel\n", k.name);
  }
  for (int k : {5, 6}) {
    const auto hi = apps::clique_count(g, k, apps::Level::hi, parallel);
    const auto lo = apps::clique_count(g, k, apps::Level::lo, parallel);
    const std::string name = std::to_string(k) + "-clique";
    row(name.c_str(), "hi", hi);
    row(name.c_str(), "lo", lo);
  }
  const auto hi = apps::motif_count(g, 4, apps::Level::hi, parallel);
  const auto lo = apps::motif_count(g, 4, apps::Level::lo, parallel);
  row("4-motif", "hi", hi);
  row("4-motif", "lo", lo);
  return 0;
}
