#pragma once

#include <cstdint>

#include "gpm/engine.h"
#include "gpm/graph.h"
#include "gpm/pattern.h"

// Brute-force references. Deliberately naive and single-threaded; they share
// only Graph and canonical_code with the engine.
namespace gpm::oracle {

constexpr vid_t kMaxVertices = 200;
constexpr int kMaxSubsetSize = 5;
constexpr int kMaxPatternEdges = 6;

/// Connected induced k-vertex subgraphs by canonical code (labels ignored).
/// For k in 3..5 every motif key is present, zero-count ones included.
PatternMap count_vertex_induced(const Graph& g, int k);

/// Distinct edge subsets of `g` whose edge-induced subgraph is isomorphic
/// to `p` (labels ignored).
std::uint64_t count_edge_induced(const Graph& g, const Pattern& p);

/// Minimum image-based support of labeled `p` over all its edge-preserving,
/// label-preserving injective maps into `g`; 0 without any.
Support mni_oracle(const Graph& g, const Pattern& p);

}  // namespace gpm::oracle
