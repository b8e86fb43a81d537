#include "gpm/apps/presets.h"

#include <stdexcept>

#include "gpm/apps/local_count.h"

namespace gpm::apps {

ProblemSpec tc_spec() { return kcl_spec(3); }

ProblemSpec kcl_spec(int k) {
  if (k < 2 || k > kMaxEmbeddingSize) throw std::invalid_argument("clique size out of range");
  ProblemSpec s;
  s.k = k;
  s.patterns = {Pattern::clique(k)};
  return s;
}

namespace {

void require_orientation(const SearchGraph& sg) {
  if (!sg.oriented()) throw std::invalid_argument("local-graph clique listing needs an orientation");
}

}  // namespace

ProblemSpec kcl_lg_spec(int k) {
  if (k < 3) throw std::invalid_argument("local-graph clique listing needs k >= 3");
  ProblemSpec s = kcl_spec(k);
  s.init_lg_vertex = [](const SearchGraph& sg, vid_t v, LocalGraph& lg) {
    require_orientation(sg);
    lg.build(sg, sg.neighbors(v));
  };
  return s;
}

ProblemSpec kcl_lg_edge_spec(int k) {
  if (k < 3) throw std::invalid_argument("local-graph clique listing needs k >= 3");
  ProblemSpec s = kcl_spec(k);
  s.init_lg_edge = [](const SearchGraph& sg, Edge e, LocalGraph& lg) {
    require_orientation(sg);
    std::vector<vid_t> common;
    intersect(sg.neighbors(e.src), sg.neighbors(e.dst), common);
    lg.build(sg, common);
  };
  return s;
}

ProblemSpec sl_spec(const Pattern& p) {
  ProblemSpec s;
  s.vertex_induced = false;
  s.k = p.size();
  s.patterns = {p};
  return s;
}

ProblemSpec motif_spec(int k) {
  ProblemSpec s;
  s.explicit_patterns = false;
  s.k = k;
  return s;
}

Graph unlabeled(const Graph& g) {
  return Graph::from_csr(std::vector<eid_t>(g.row_offsets().begin(), g.row_offsets().end()),
                         std::vector<vid_t>(g.column_indices().begin(), g.column_indices().end()));
}

MiningResult triangle_count(const Graph& g, const EngineOptions& opts) { return mine(g, tc_spec(), opts); }

MiningResult clique_count(const Graph& g, int k, Level level, const EngineOptions& opts) {
  if (level == Level::hi) return mine(g, kcl_spec(k), opts);
  if (opts.orientation == OrientationChoice::none)
    throw std::invalid_argument("local-graph clique listing needs an orientation");
  const auto dag = orient(g, opts.orientation == OrientationChoice::core ? Orientation::core : Orientation::degree);
  return mine(g, dag, kcl_lg_spec(k), opts);
}

MiningResult subgraph_listing(const Graph& g, const Pattern& p, const EngineOptions& opts,
                              std::function<void(const Embedding&)> sink) {
  ProblemSpec s = sl_spec(p);
  if (sink) {
    s.listing = true;
    s.process = std::move(sink);
  }
  return mine(g, s, opts);
}

MiningResult motif_count(const Graph& g, int k, Level level, const EngineOptions& opts) {
  if (k < 3 || k > 5) throw std::invalid_argument("motif size must be 3, 4 or 5");
  std::optional<Graph> plain;
  if (g.labeled()) plain = unlabeled(g);
  const Graph& h = plain ? *plain : g;
  if (level == Level::lo) {
    if (k == 3) return mc3_local_counts(h, opts);
    if (k == 4) return mc4_local_counts(h, opts);
    throw std::invalid_argument("local counting is available for 3- and 4-motifs only");
  }
  MiningResult r = mine(h, motif_spec(k), opts);
  for (const auto& p : all_patterns(k)) r.supports.touch(canonical_code(p));
  return r;
}

}  // namespace gpm::apps
