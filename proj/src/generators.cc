#include "gpm/generators.h"

#include <random>

namespace gpm::gen {

Graph erdos_renyi(vid_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (vid_t u = 0; u < n; ++u)
    for (vid_t v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

Graph clustered(vid_t n, vid_t group, double p_in, double inter_degree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p_in);
  std::vector<Edge> edges;
  for (vid_t base = 0; base < n; base += group) {
    const vid_t end = std::min<vid_t>(n, base + group);
    for (vid_t u = base; u < end; ++u)
      for (vid_t v = u + 1; v < end; ++v)
        if (coin(rng)) edges.push_back({u, v});
  }
  if (n > 1) {
    std::uniform_int_distribution<vid_t> pick(0, n - 1);
    const auto extra = static_cast<std::uint64_t>(inter_degree * n / 2);
    for (std::uint64_t i = 0; i < extra; ++i) {
      const vid_t u = pick(rng), v = pick(rng);
      if (u != v) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(n, edges);
}

Graph with_random_labels(const Graph& g, label_t num_labels, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<label_t> pick(0, num_labels - 1);
  std::vector<label_t> labels(g.num_vertices());
  for (auto& l : labels) l = pick(rng);
  std::vector<std::string> names;
  for (label_t l = 0; l < num_labels; ++l) names.push_back(std::string(1, static_cast<char>('A' + l % 26)));
  return Graph::from_csr(std::vector<eid_t>(g.row_offsets().begin(), g.row_offsets().end()),
                         std::vector<vid_t>(g.column_indices().begin(), g.column_indices().end()),
                         std::move(labels), std::move(names));
}

Graph complete(vid_t n) {
  std::vector<Edge> edges;
  for (vid_t u = 0; u < n; ++u)
    for (vid_t v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

}  // namespace gpm::gen
