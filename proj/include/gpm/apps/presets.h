#pragma once

#include <functional>

#include "gpm/engine.h"

namespace gpm::apps {

enum class Level { hi, lo };

ProblemSpec tc_spec();
ProblemSpec kcl_spec(int k);
/// k-CL whose candidates come from a local graph on each vertex's
/// out-neighborhood (run it over an orientation).
ProblemSpec kcl_lg_spec(int k);
/// As kcl_lg_spec, rooted at each arc with the common out-neighbors.
ProblemSpec kcl_lg_edge_spec(int k);
/// Edge-induced subgraph listing of one pattern.
ProblemSpec sl_spec(const Pattern& p);
/// Vertex-induced k-motif counting (implicit patterns).
ProblemSpec motif_spec(int k);

/// Copy of `g` without vertex labels (shares nothing with `g`).
Graph unlabeled(const Graph& g);

MiningResult triangle_count(const Graph& g, const EngineOptions& opts = {});
MiningResult clique_count(const Graph& g, int k, Level level, const EngineOptions& opts = {});
MiningResult subgraph_listing(const Graph& g, const Pattern& p, const EngineOptions& opts = {},
                              std::function<void(const Embedding&)> sink = {});
/// Every k-motif key is present in the result, zero counts included. Labels
/// are ignored. `lo` is available for k = 3 and 4.
MiningResult motif_count(const Graph& g, int k, Level level, const EngineOptions& opts = {});

}  // namespace gpm::apps
