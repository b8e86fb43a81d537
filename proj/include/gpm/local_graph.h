#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gpm/graph.h"

namespace gpm {

/// Neighborhood source for the search: either the undirected graph or the
/// out-arcs of an orientation of it. Degrees always refer to the undirected graph.
class SearchGraph {
 public:
  explicit SearchGraph(const Graph& g) : g_(&g) {}
  SearchGraph(const Graph& g, const OrientedGraph& dag) : g_(&g), dag_(&dag) {}

  const Graph& graph() const { return *g_; }
  bool oriented() const { return dag_ != nullptr; }
  const OrientedGraph* dag() const { return dag_; }
  vid_t num_vertices() const { return g_->num_vertices(); }
  std::span<const vid_t> neighbors(vid_t v) const {
    return dag_ ? dag_->out_neighbors(v) : g_->neighbors(v);
  }
  vid_t degree(vid_t v) const { return g_->degree(v); }

 private:
  const Graph* g_;
  const OrientedGraph* dag_ = nullptr;
};

/// Shrinking induced subgraph used as the candidate source for extension.
///
/// Level 0 holds every local vertex. Pushing a chosen vertex x makes the next
/// level's candidates the neighbors of x within the current level; each
/// candidate's adjacency is compacted so that its first degree(level, u)
/// entries are exactly its neighbors inside that level. Popping reverts the
/// swaps, so adjacency arrays return to their previous order.
class LocalGraph {
 public:
  LocalGraph() = default;

  /// Induced subgraph on `members` (any order; stored sorted). Local edges are
  /// neighbors(a) ∩ members for each member a.
  void build(const SearchGraph& g, std::span<const vid_t> members);
  /// Builds from explicit local adjacency lists (local ids 0..n-1).
  void build_local(std::vector<vid_t> global_ids, std::vector<std::vector<int>> adjacency);

  int num_vertices() const { return static_cast<int>(global_.size()); }
  vid_t global_id(int local) const { return global_[local]; }
  /// -1 when `global` is not a member; O(log n).
  int local_id(vid_t global) const;
  std::span<const vid_t> members() const { return global_; }

  int level() const { return static_cast<int>(levels_.size()) - 1; }
  std::span<const int> candidates() const { return levels_.back(); }
  std::span<const int> candidates(int level) const { return levels_[level]; }
  int degree(int level, int u) const { return degree_[level][u]; }
  /// Neighbors of u inside the level-`level` candidate set.
  std::span<const int> neighbors(int level, int u) const {
    return {adj_.data() + offset_[u], static_cast<std::size_t>(degree_[level][u])};
  }
  /// Full adjacency row of u in its current order (for restore checks).
  std::span<const int> adjacency_row(int u) const {
    return {adj_.data() + offset_[u], adj_.data() + offset_[u + 1]};
  }

  /// Shrinks to the neighbors of `chosen` (a candidate of the current level).
  void push(int chosen);
  void pop();

 private:
  void init_levels();

  std::vector<vid_t> global_;
  std::vector<std::size_t> offset_;
  std::vector<int> adj_;
  std::vector<std::vector<int>> levels_;
  std::vector<std::vector<int>> degree_;  // degree_[level][u], valid for u in levels_[level]
  std::vector<int> mark_;                 // deepest level containing u
  struct Swap {
    std::size_t a, b;
  };
  std::vector<std::vector<Swap>> swaps_;  // per pushed level
};

/// Sorted intersection size of two ascending lists.
std::size_t intersection_size(std::span<const vid_t> a, std::span<const vid_t> b);
/// Sorted intersection, appended to `out`.
void intersect(std::span<const vid_t> a, std::span<const vid_t> b, std::vector<vid_t>& out);

}  // namespace gpm
