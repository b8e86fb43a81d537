#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gpm/dfs_code.h"
#include "gpm/engine.h"

namespace gpm {

/// Per-position sets of distinct graph vertices over a pattern's embeddings.
/// Its value is the minimum image-based (MNI) support.
class DomainSupport {
 public:
  explicit DomainSupport(int positions = 0) : domains_(positions) {}

  void insert(std::span<const vid_t> mapping);
  void merge(const DomainSupport& other);
  Support value();
  int positions() const { return static_cast<int>(domains_.size()); }
  /// Distinct vertices at `pos` (deduplicates first).
  std::size_t domain_size(int pos);

 private:
  void normalize();
  std::vector<std::vector<vid_t>> domains_;
  bool normalized_ = true;
};

/// A node of the pattern tree: a DFS code and its embeddings, stored as
/// flat position -> vertex maps of stride code_vertex_count(code).
struct PatternNode {
  DfsCode code;
  std::vector<vid_t> embeddings;

  int stride() const { return code_vertex_count(code); }
  std::size_t num_embeddings() const {
    return code.empty() ? 0 : embeddings.size() / static_cast<std::size_t>(stride());
  }
  std::span<const vid_t> embedding(std::size_t i) const {
    return {embeddings.data() + i * stride(), static_cast<std::size_t>(stride())};
  }
  std::size_t bytes() const { return embeddings.size() * sizeof(vid_t); }
};

/// Every single-edge pattern of `g` with all its embeddings, in minimal-code
/// order. Both orientations are stored when the endpoint labels agree.
std::vector<PatternNode> seed_nodes(const Graph& g);
/// Children of `node` by one rightmost-path edge, restricted to minimal codes,
/// in extension order. `accept` (optional) filters individual graph edges.
std::vector<PatternNode> rightmost_extensions(const PatternNode& node, const Graph& g,
                                              const std::function<bool(std::span<const vid_t>, Edge)>& accept = {});
/// Minimum image-based support of the node's embeddings.
Support mni(const PatternNode& node);

struct FrequentPattern {
  DfsCode code;
  Support support = 0;
  std::size_t embeddings = 0;
};

struct FsmResult {
  /// Ordered by edge count, then rendered code.
  std::vector<FrequentPattern> patterns;
  std::uint64_t enumerated = 0;
  double wall_ms = 0;
  int workers = 1;
};

/// Frequent connected patterns with at most `max_edges` edges and MNI support
/// >= `min_sup`. `prune` = false explores infrequent subtrees as well and
/// filters at the end (same output, used as a reference).
FsmResult mine_fsm(const Graph& g, int max_edges, Support min_sup, const EngineOptions& opts = {},
                   bool prune = true);

/// Engine entry for implicit edge-induced problems (spec.k edges, 0 = unbounded).
MiningResult mine_pattern_tree(const Graph& g, const ProblemSpec& spec, const EngineOptions& opts);

}  // namespace gpm
