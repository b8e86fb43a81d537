#include "gpm/oracle.h"

#include <set>
#include <stdexcept>
#include <unordered_map>

namespace gpm::oracle {

namespace {

struct Dense {
  explicit Dense(const Graph& g) : n(g.num_vertices()), bits(static_cast<std::size_t>(n) * n, 0) {
    for (const auto& e : g.edge_list()) {
      bits[static_cast<std::size_t>(e.src) * n + e.dst] = 1;
      bits[static_cast<std::size_t>(e.dst) * n + e.src] = 1;
    }
  }
  bool adj(vid_t a, vid_t b) const { return bits[static_cast<std::size_t>(a) * n + b] != 0; }
  vid_t n;
  std::vector<std::uint8_t> bits;
};

bool connected_mask(int k, const std::uint32_t* rows) {
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (int i = 0; i < k; ++i)
      if ((frontier >> i) & 1u) next |= rows[i];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (1u << k) - 1;
}

}  // namespace

PatternMap count_vertex_induced(const Graph& g, int k) {
  if (g.num_vertices() > kMaxVertices) throw std::invalid_argument("oracle: graph too large");
  if (k < 1 || k > kMaxSubsetSize) throw std::invalid_argument("oracle: k out of range");
  PatternMap out;
  if (k >= 3) {
    for (const auto& p : all_patterns(k)) out.touch(canonical_code(p));
  }
  const Dense d(g);
  const vid_t n = g.num_vertices();
  if (static_cast<vid_t>(k) > n) return out;
  std::unordered_map<std::uint32_t, PatternKey> keys;
  std::unordered_map<PatternKey, Support> counts;
  std::vector<vid_t> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    std::uint32_t rows[kMaxSubsetSize] = {};
    std::uint32_t mask = 0;
    int bit = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j, ++bit)
        if (d.adj(pick[i], pick[j])) {
          rows[i] |= 1u << j;
          rows[j] |= 1u << i;
          mask |= 1u << bit;
        }
    if (connected_mask(k, rows)) {
      auto it = keys.find(mask);
      if (it == keys.end()) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < k; ++i)
          for (int j = i + 1; j < k; ++j)
            if ((rows[i] >> j) & 1u) edges.emplace_back(i, j);
        it = keys.emplace(mask, canonical_code(Pattern(k, edges))).first;
      }
      ++counts[it->second];
    }
    // next combination in lexicographic order
    int i = k - 1;
    while (i >= 0 && pick[i] == n - static_cast<vid_t>(k - i)) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  for (const auto& [key, c] : counts) out.add(key, c);
  return out;
}

namespace {

// Backtracking over injective maps of pattern vertices (in index order) that
// preserve pattern edges; calls `emit` with each complete map.
template <typename Emit>
void injective_maps(const Graph& g, const Dense& d, const Pattern& p, bool use_labels, Emit&& emit) {
  const int k = p.size();
  std::vector<vid_t> map(k);
  std::vector<std::uint8_t> used(g.num_vertices(), 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == k) {
      emit(map);
      return;
    }
    for (vid_t v = 0; v < g.num_vertices(); ++v) {
      if (used[v]) continue;
      if (use_labels && g.label(v) != p.label(i)) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        if (p.has_edge(i, j) && !d.adj(map[j], v)) ok = false;
      if (!ok) continue;
      used[v] = 1;
      map[i] = v;
      self(self, i + 1);
      used[v] = 0;
    }
  };
  rec(rec, 0);
}

}  // namespace

std::uint64_t count_edge_induced(const Graph& g, const Pattern& p) {
  if (g.num_vertices() > kMaxVertices) throw std::invalid_argument("oracle: graph too large");
  if (p.num_edges() > kMaxPatternEdges) throw std::invalid_argument("oracle: pattern too large");
  const Dense d(g);
  std::set<std::vector<std::pair<vid_t, vid_t>>> images;
  const auto pedges = p.edges();
  injective_maps(g, d, p, false, [&](const std::vector<vid_t>& map) {
    std::vector<std::pair<vid_t, vid_t>> img;
    for (const auto& [a, b] : pedges) img.emplace_back(std::min(map[a], map[b]), std::max(map[a], map[b]));
    std::sort(img.begin(), img.end());
    images.insert(std::move(img));
  });
  return images.size();
}

Support mni_oracle(const Graph& g, const Pattern& p) {
  if (g.num_vertices() > kMaxVertices) throw std::invalid_argument("oracle: graph too large");
  if (p.labeled() != g.labeled()) throw std::invalid_argument("oracle: label mismatch");
  const Dense d(g);
  std::vector<std::set<vid_t>> domains(p.size());
  injective_maps(g, d, p, p.labeled(), [&](const std::vector<vid_t>& map) {
    for (int i = 0; i < p.size(); ++i) domains[i].insert(map[i]);
  });
  std::size_t m = domains.empty() ? 0 : domains[0].size();
  for (const auto& s : domains) m = std::min(m, s.size());
  return m;
}

}  // namespace gpm::oracle
