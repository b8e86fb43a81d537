#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gpm/embedding.h"
#include "gpm/graph.h"
#include "gpm/local_graph.h"
#include "gpm/pattern.h"

namespace gpm {

using Support = std::uint64_t;

/// Reduction target: pattern key -> support, ordered by key for stable output.
class PatternMap {
 public:
  using Reduce = std::function<Support(Support, Support)>;

  void add(const PatternKey& key, Support s, const Reduce& reduce = {});
  /// Ensures `key` is present (with support 0 if new).
  void touch(const PatternKey& key) { map_.try_emplace(key, 0); }
  void merge(const PatternMap& other, const Reduce& reduce = {});
  void erase_if(const std::function<bool(const PatternKey&, Support)>& pred);

  Support at(const PatternKey& key) const;
  bool contains(const PatternKey& key) const { return map_.count(key) != 0; }
  std::size_t size() const { return map_.size(); }
  bool empty() const { return map_.empty(); }
  Support total() const;
  auto begin() const { return map_.begin(); }
  auto end() const { return map_.end(); }

  friend bool operator==(const PatternMap&, const PatternMap&) = default;

 private:
  std::map<PatternKey, Support> map_;
};

/// One mining run. Flags mirror the high-level interface; every hook is
/// optional. Hooks run on worker threads and must be safe to call
/// concurrently (`process` in particular).
struct ProblemSpec {
  bool vertex_induced = true;
  bool listing = false;
  bool explicit_patterns = true;
  /// Embedding size: vertices when vertex-induced, edges for implicit
  /// edge-induced problems (0 means no limit there).
  int k = 3;
  std::vector<Pattern> patterns;

  // high level
  std::function<bool(const PatternKey&, Support)> is_implicit_pattern;
  std::function<void(const Embedding&)> process;
  std::function<bool(const Embedding&)> terminate;
  bool support_anti_monotonic = true;
  std::function<Support(const Embedding&)> get_support;
  std::function<Support(Support, Support)> reduce;

  // low level
  std::function<bool(const Embedding&, int position)> to_extend;
  std::function<bool(const Embedding&, vid_t)> to_add;
  std::function<bool(const Embedding&, Edge)> to_add_edge;
  std::function<PatternKey(const Embedding&)> get_pattern;
  /// Called at every visited embedding with the worker's local supports;
  /// slot i is reduced into `local_patterns[i]`. Setting it replaces the
  /// per-embedding global reduction.
  std::function<void(const Embedding&, std::vector<std::int64_t>&)> local_reduce;
  std::vector<PatternKey> local_patterns;
  std::function<void(const SearchGraph&, vid_t, LocalGraph&)> init_lg_vertex;
  std::function<void(const SearchGraph&, Edge, LocalGraph&)> init_lg_edge;
  /// Must leave exactly one new level on the local graph; defaults to push.
  std::function<void(LocalGraph&, int chosen_local)> update_lg;

  /// Throws std::invalid_argument on inconsistent flags.
  void validate() const;
};

enum class OrientationChoice { auto_, degree, core, none };

struct EngineOptions {
  /// 0 = GPM_THREADS from the environment, else the OpenMP default.
  int workers = 0;
  bool symmetry_breaking = true;
  bool memoize_connectivity = true;
  bool degree_filter = true;
  bool matching_order = true;
  OrientationChoice orientation = OrientationChoice::auto_;
  /// Cross-checks every connectivity lookup and code against the graph;
  /// throws std::logic_error on a mismatch. Slow.
  bool verify_memoization = false;
  /// Embedding-list budget for edge-induced pattern-tree mining.
  std::size_t memory_cap_bytes = std::size_t{4} << 30;
};

struct MiningResult {
  PatternMap supports;
  /// Embeddings of size >= 2 that passed every extension filter.
  std::uint64_t enumerated = 0;
  /// Embeddings handed to `process`.
  std::uint64_t emitted = 0;
  bool terminated = false;
  double wall_ms = 0;
  int workers = 1;
};

class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Resolves EngineOptions::workers.
int resolve_workers(int requested);

MiningResult mine(const Graph& g, const ProblemSpec& spec, const EngineOptions& opts = {});
/// As above, with a caller-provided orientation used for clique patterns.
MiningResult mine(const Graph& g, const OrientedGraph& dag, const ProblemSpec& spec,
                  const EngineOptions& opts = {});

/// The search plan mine() would pick; exposed for inspection and tests.
enum class SearchMode { generic, matching_order, clique_dag, local_graph, pattern_tree };
SearchMode plan_search(const ProblemSpec& spec, const EngineOptions& opts);

/// Extension candidates of `emb` under the generic (implicit-pattern)
/// pipeline, in generation order. Used by tests to inspect canonicality.
std::vector<vid_t> generic_candidates(const Graph& g, const Embedding& emb, const ProblemSpec& spec,
                                      const EngineOptions& opts = {});

}  // namespace gpm
