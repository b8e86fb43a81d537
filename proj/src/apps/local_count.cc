#include "gpm/apps/local_count.h"

#include <chrono>
#include <stdexcept>

#include "gpm/apps/presets.h"

namespace gpm::apps {

std::int64_t edge_wedges(std::int64_t deg_u, std::int64_t deg_v, std::int64_t tri) {
  return (deg_u - tri - 1) + (deg_v - tri - 1);
}

MiningResult mc3_local_counts(const Graph& g, const EngineOptions& opts) {
  ProblemSpec spec = motif_spec(1);
  spec.local_patterns = {"wedge-raw"};
  spec.local_reduce = [&g](const Embedding& emb, std::vector<std::int64_t>& local) {
    const std::int64_t d = g.degree(emb.vertex(0));
    local[0] += d * (d - 1) / 2;
  };
  const MiningResult per_vertex = mine(g, spec, opts);
  const MiningResult tri = triangle_count(g, opts);
  const Support triangles = tri.supports.at(canonical_code(Pattern::triangle()));

  MiningResult out;
  out.supports.add(canonical_code(Pattern::wedge()), per_vertex.supports.at("wedge-raw") - 3 * triangles);
  out.supports.add(canonical_code(Pattern::triangle()), triangles);
  out.enumerated = per_vertex.enumerated + tri.enumerated;
  out.wall_ms = per_vertex.wall_ms + tri.wall_ms;
  out.workers = tri.workers;
  return out;
}

Mc4RawSums mc4_raw_sums(const Graph& g, const EngineOptions& opts, std::uint64_t* enumerated) {
  ProblemSpec spec = motif_spec(2);
  spec.local_patterns = {"diamond-raw", "tailed-triangle-raw", "path-raw", "star-raw"};
  spec.local_reduce = [&g](const Embedding& emb, std::vector<std::int64_t>& local) {
    if (emb.size() != 2) return;
    const vid_t u = emb.vertex(0), v = emb.vertex(1);
    const std::int64_t t = static_cast<std::int64_t>(intersection_size(g.neighbors(u), g.neighbors(v)));
    const std::int64_t su = static_cast<std::int64_t>(g.degree(u)) - t - 1;
    const std::int64_t sv = static_cast<std::int64_t>(g.degree(v)) - t - 1;
    local[0] += t * (t - 1);
    local[1] += t * edge_wedges(g.degree(u), g.degree(v), t);
    local[2] += su * sv;
    local[3] += su * (su - 1) + sv * (sv - 1);
  };
  const MiningResult edges = mine(g, spec, opts);
  const MiningResult cliques = mine(g, kcl_spec(4), opts);
  ProblemSpec cycle;
  cycle.k = 4;
  cycle.patterns = {Pattern::cycle(4)};
  const MiningResult cycles = mine(g, cycle, opts);

  Mc4RawSums raw;
  raw.diamond = static_cast<std::int64_t>(edges.supports.at("diamond-raw"));
  raw.tailed_triangle = static_cast<std::int64_t>(edges.supports.at("tailed-triangle-raw"));
  raw.path = static_cast<std::int64_t>(edges.supports.at("path-raw"));
  raw.star = static_cast<std::int64_t>(edges.supports.at("star-raw"));
  raw.clique = static_cast<std::int64_t>(cliques.supports.at(canonical_code(Pattern::clique(4))));
  raw.cycle = static_cast<std::int64_t>(cycles.supports.at(canonical_code(Pattern::cycle(4))));
  if (enumerated) *enumerated = edges.enumerated + cliques.enumerated + cycles.enumerated;
  return raw;
}

Mc4Counts mc4_correct(const Mc4RawSums& raw) {
  const auto f = raw.features();
  std::array<std::int64_t, 6> c{};
  for (std::size_t m = 0; m < c.size(); ++m) {
    std::int64_t num = 0;
    for (std::size_t j = 0; j < f.size(); ++j) num += kMc4Correction[m][j] * f[j];
    if (num % kMc4Denominator != 0) throw std::logic_error("4-motif correction produced a fraction");
    c[m] = num / kMc4Denominator;
  }
  return {c[0], c[1], c[2], c[3], c[4], c[5]};
}

MiningResult mc4_local_counts(const Graph& g, const EngineOptions& opts) {
  MiningResult out;
  const auto t0 = std::chrono::steady_clock::now();
  const Mc4Counts c = mc4_correct(mc4_raw_sums(g, opts, &out.enumerated));
  out.supports.add(canonical_code(Pattern::path(4)), c.path);
  out.supports.add(canonical_code(Pattern::star(3)), c.star);
  out.supports.add(canonical_code(Pattern::cycle(4)), c.cycle);
  out.supports.add(canonical_code(Pattern::tailed_triangle()), c.tailed_triangle);
  out.supports.add(canonical_code(Pattern::diamond()), c.diamond);
  out.supports.add(canonical_code(Pattern::clique(4)), c.clique);
  out.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  out.workers = resolve_workers(opts.workers);
  return out;
}

}  // namespace gpm::apps
