#pragma once

#include <array>
#include <cassert>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gpm/graph.h"
#include "gpm/pattern.h"

namespace gpm {

constexpr int kMaxEmbeddingSize = 16;

/// DFS stack of matched vertices. Level l carries its connectivity code: bit
/// i is set iff the level-l vertex is adjacent to the vertex at level i < l.
/// Edge-induced embeddings additionally carry their edge set.
class Embedding {
 public:
  int size() const { return size_; }
  bool empty() const { return size_ == 0; }
  vid_t vertex(int pos) const { return vertices_[pos]; }
  vid_t last() const { return vertices_[size_ - 1]; }
  std::span<const vid_t> vertices() const { return {vertices_.data(), static_cast<std::size_t>(size_)}; }
  std::uint32_t code(int level) const { return codes_[level]; }
  bool connected(int i, int j) const {
    return i < j ? (codes_[j] >> i) & 1u : (codes_[i] >> j) & 1u;
  }
  bool contains(vid_t v) const {
    for (int i = 0; i < size_; ++i)
      if (vertices_[i] == v) return true;
    return false;
  }
  std::span<const Edge> edges() const { return edges_; }

  void push(vid_t v, std::uint32_t code) {
    assert(size_ < kMaxEmbeddingSize);
    vertices_[size_] = v;
    codes_[size_] = code;
    ++size_;
  }
  void pop() { --size_; }
  void clear() {
    size_ = 0;
    edges_.clear();
  }

  void set_edges(std::vector<Edge> edges) { edges_ = std::move(edges); }

 private:
  std::array<vid_t, kMaxEmbeddingSize> vertices_{};
  std::array<std::uint32_t, kMaxEmbeddingSize> codes_{};
  int size_ = 0;
  std::vector<Edge> edges_;
};

/// Concatenated per-level codes as a '0'/'1' string, levels 1..size-1, each
/// listing positions 0..l-1 in order ("111101" for the four-vertex example
/// where v4 touches v1 and v3).
std::string embedding_code(const Embedding& emb);
/// Inverse of embedding_code: the induced pattern on positions 0..k-1.
Pattern decode_embedding_code(const std::string& bits);
/// Induced pattern of a vertex embedding from its connectivity codes,
/// carrying vertex labels when `g` is labeled.
Pattern embedding_pattern(const Embedding& emb, const Graph& g);

/// Worker-private map from vertex to the embedding positions adjacent to it.
class ConnectivityMap {
 public:
  ConnectivityMap() = default;
  explicit ConnectivityMap(vid_t num_vertices) : bits_(num_vertices, 0), member_(num_vertices, 0) {}

  /// Records `v` at `depth`: every neighbor not in the embedding gains bit `depth`.
  void push(std::span<const vid_t> neighbors, vid_t v, int depth) {
    member_[v] = 1;
    auto& log = undo_[depth];
    log.clear();
    const std::uint32_t bit = 1u << depth;
    for (vid_t w : neighbors) {
      if (member_[w]) continue;
      bits_[w] |= bit;
      log.push_back(w);
    }
    pushed_[depth] = v;
  }

  void pop(int depth) {
    const std::uint32_t mask = ~(1u << depth);
    for (vid_t w : undo_[depth]) bits_[w] &= mask;
    undo_[depth].clear();
    member_[pushed_[depth]] = 0;
  }

  std::uint32_t lookup(vid_t u) const { return bits_[u]; }
  bool member(vid_t u) const { return member_[u] != 0; }

 private:
  std::vector<std::uint32_t> bits_;
  std::vector<std::uint8_t> member_;
  std::array<std::vector<vid_t>, kMaxEmbeddingSize> undo_;
  std::array<vid_t, kMaxEmbeddingSize> pushed_{};
};

}  // namespace gpm
