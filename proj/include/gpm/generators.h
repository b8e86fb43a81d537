#pragma once

#include <cstdint>

#include "gpm/graph.h"

namespace gpm::gen {

/// G(n, p); each pair is drawn independently.
Graph erdos_renyi(vid_t n, double p, std::uint64_t seed);
/// Vertices split into consecutive groups of `group` vertices; pairs inside a
/// group are joined with probability `p_in`, and every vertex gets on average
/// `inter_degree` extra edges to uniformly chosen vertices.
Graph clustered(vid_t n, vid_t group, double p_in, double inter_degree, std::uint64_t seed);
/// Copy of `g` with labels drawn uniformly from {0, ..., num_labels - 1}.
Graph with_random_labels(const Graph& g, label_t num_labels, std::uint64_t seed);
/// Complete graph K_n.
Graph complete(vid_t n);

}  // namespace gpm::gen
