#include "gpm/graph.h"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gpm {

ParseError::ParseError(const std::string& file, std::size_t line, const std::string& what)
    : std::runtime_error(file + (line ? ":" + std::to_string(line) : std::string()) + ": " + what),
      line_(line) {}

Graph Graph::from_edges(vid_t n, std::span<const Edge> edges, std::vector<label_t> labels,
                        std::vector<std::string> label_names) {
  std::vector<eid_t> degree(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& e : edges) {
    if (e.src >= n || e.dst >= n)
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(e.src) + " " +
                                  std::to_string(e.dst));
    if (e.src == e.dst) continue;
    ++degree[e.src + 1];
    ++degree[e.dst + 1];
  }
  std::partial_sum(degree.begin(), degree.end(), degree.begin());
  std::vector<vid_t> adj(degree[n]);
  std::vector<eid_t> fill(degree.begin(), degree.end() - 1);
  for (const auto& e : edges) {
    if (e.src == e.dst) continue;
    adj[fill[e.src]++] = e.dst;
    adj[fill[e.dst]++] = e.src;
  }
  // sort + dedup each list, then compact
  std::vector<eid_t> offsets(static_cast<std::size_t>(n) + 1, 0);
  eid_t out = 0;
  for (vid_t v = 0; v < n; ++v) {
    auto first = adj.begin() + static_cast<std::ptrdiff_t>(degree[v]);
    auto last = adj.begin() + static_cast<std::ptrdiff_t>(degree[v + 1]);
    std::sort(first, last);
    last = std::unique(first, last);
    offsets[v] = out;
    for (auto it = first; it != last; ++it) adj[out++] = *it;
  }
  offsets[n] = out;
  adj.resize(out);
  adj.shrink_to_fit();
  return from_csr(std::move(offsets), std::move(adj), std::move(labels), std::move(label_names));
}

Graph Graph::from_csr(std::vector<eid_t> offsets, std::vector<vid_t> neighbors,
                      std::vector<label_t> labels, std::vector<std::string> label_names) {
  Graph g;
  if (offsets.empty()) offsets.push_back(0);
  g.offsets_ = std::move(offsets);
  g.neighbors_ = std::move(neighbors);
  g.labels_ = std::move(labels);
  g.label_names_ = std::move(label_names);
  g.validate();
  for (vid_t v = 0; v < g.num_vertices(); ++v) g.max_degree_ = std::max(g.max_degree_, g.degree(v));
  return g;
}

double Graph::average_degree() const {
  return num_vertices() == 0 ? 0.0 : static_cast<double>(neighbors_.size()) / num_vertices();
}

bool Graph::has_edge(vid_t u, vid_t v) const {
  auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::size_t Graph::num_labels() const {
  if (labels_.empty()) return 0;
  return static_cast<std::size_t>(*std::max_element(labels_.begin(), labels_.end())) + 1;
}

std::string Graph::label_name(label_t l) const {
  return l < label_names_.size() ? label_names_[l] : std::to_string(l);
}

std::vector<Edge> Graph::edge_list() const {
  std::vector<Edge> edges;
  edges.reserve(num_edges());
  for (vid_t u = 0; u < num_vertices(); ++u)
    for (vid_t v : neighbors(u))
      if (u < v) edges.push_back({u, v});
  return edges;
}

void Graph::validate() const {
  const vid_t n = num_vertices();
  if (offsets_.front() != 0 || offsets_.back() != neighbors_.size())
    throw std::invalid_argument("row offsets do not span the neighbor array");
  if (!labels_.empty() && labels_.size() != n)
    throw std::invalid_argument("label array length differs from vertex count");
  for (vid_t v = 0; v < n; ++v) {
    if (offsets_[v] > offsets_[v + 1]) throw std::invalid_argument("row offsets not monotone");
    auto nbrs = neighbors(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      const vid_t u = nbrs[i];
      if (u >= n) throw std::invalid_argument("neighbor id out of range at vertex " + std::to_string(v));
      if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(v));
      if (i > 0 && nbrs[i - 1] >= u)
        throw std::invalid_argument("neighbor list of " + std::to_string(v) + " unsorted or duplicated");
    }
  }
  for (vid_t v = 0; v < n; ++v)
    for (vid_t u : neighbors(v))
      if (!has_edge(u, v))
        throw std::invalid_argument("asymmetric edge " + std::to_string(v) + "->" + std::to_string(u));
}

OrientedGraph::OrientedGraph(std::vector<eid_t> offsets, std::vector<vid_t> neighbors,
                             std::vector<vid_t> rank)
    : offsets_(std::move(offsets)), neighbors_(std::move(neighbors)), rank_(std::move(rank)) {
  for (vid_t v = 0; v < num_vertices(); ++v)
    max_out_degree_ = std::max(max_out_degree_, out_degree(v));
}

bool OrientedGraph::has_arc(vid_t u, vid_t v) const {
  auto nbrs = out_neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

void OrientedGraph::validate() const {
  for (vid_t v = 0; v < num_vertices(); ++v) {
    auto nbrs = out_neighbors(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (rank_[nbrs[i]] <= rank_[v])
        throw std::invalid_argument("arc " + std::to_string(v) + "->" + std::to_string(nbrs[i]) +
                                    " against the orientation order");
      if (i > 0 && nbrs[i - 1] >= nbrs[i])
        throw std::invalid_argument("out-neighbor list unsorted at " + std::to_string(v));
    }
  }
}

std::vector<vid_t> core_numbers(const Graph& g) {
  // Batagelj-Zaversnik bucket peeling
  const vid_t n = g.num_vertices();
  std::vector<vid_t> deg(n), pos(n), vert(n), core(n);
  vid_t md = 0;
  for (vid_t v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    md = std::max(md, deg[v]);
  }
  std::vector<vid_t> bin(static_cast<std::size_t>(md) + 1, 0);
  for (vid_t v = 0; v < n; ++v) ++bin[deg[v]];
  vid_t start = 0;
  for (auto& b : bin) {
    vid_t count = b;
    b = start;
    start += count;
  }
  for (vid_t v = 0; v < n; ++v) {
    pos[v] = bin[deg[v]]++;
    vert[pos[v]] = v;
  }
  for (vid_t d = md; d > 0; --d) bin[d] = bin[d - 1];
  if (!bin.empty()) bin[0] = 0;
  for (vid_t i = 0; i < n; ++i) {
    const vid_t v = vert[i];
    core[v] = deg[v];
    for (vid_t u : g.neighbors(v)) {
      if (deg[u] > deg[v]) {
        const vid_t du = deg[u];
        const vid_t pu = pos[u];
        const vid_t pw = bin[du];
        const vid_t w = vert[pw];
        if (u != w) {
          pos[u] = pw;
          vert[pu] = w;
          pos[w] = pu;
          vert[pw] = u;
        }
        ++bin[du];
        --deg[u];
      }
    }
  }
  return core;
}

OrientedGraph orient(const Graph& g, Orientation strategy) {
  const vid_t n = g.num_vertices();
  std::vector<vid_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  if (strategy == Orientation::degree) {
    std::sort(order.begin(), order.end(), [&](vid_t a, vid_t b) {
      return std::pair(g.degree(a), a) < std::pair(g.degree(b), b);
    });
  } else {
    const auto core = core_numbers(g);
    std::sort(order.begin(), order.end(), [&](vid_t a, vid_t b) {
      return std::tuple(core[a], g.degree(a), a) < std::tuple(core[b], g.degree(b), b);
    });
  }
  std::vector<vid_t> rank(n);
  for (vid_t i = 0; i < n; ++i) rank[order[i]] = i;

  std::vector<eid_t> offsets(static_cast<std::size_t>(n) + 1, 0);
  for (vid_t v = 0; v < n; ++v)
    for (vid_t u : g.neighbors(v))
      if (rank[u] > rank[v]) ++offsets[v + 1];
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  std::vector<vid_t> adj(offsets[n]);
  for (vid_t v = 0; v < n; ++v) {
    eid_t k = offsets[v];
    // neighbors(v) is sorted, so the filtered copy stays sorted
    for (vid_t u : g.neighbors(v))
      if (rank[u] > rank[v]) adj[k++] = u;
  }
  return OrientedGraph(std::move(offsets), std::move(adj), std::move(rank));
}

}  // namespace gpm
