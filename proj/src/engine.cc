#include "gpm/engine.h"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <memory>
#include <unordered_map>

#include "gpm/fsm.h"

namespace gpm {

// PatternMap ------------------------------------------------------------------

void PatternMap::add(const PatternKey& key, Support s, const Reduce& reduce) {
  auto [it, inserted] = map_.try_emplace(key, s);
  if (!inserted) it->second = reduce ? reduce(it->second, s) : it->second + s;
}

void PatternMap::merge(const PatternMap& other, const Reduce& reduce) {
  for (const auto& [key, s] : other.map_) add(key, s, reduce);
}

void PatternMap::erase_if(const std::function<bool(const PatternKey&, Support)>& pred) {
  std::erase_if(map_, [&](const auto& kv) { return pred(kv.first, kv.second); });
}

Support PatternMap::at(const PatternKey& key) const {
  auto it = map_.find(key);
  return it == map_.end() ? 0 : it->second;
}

Support PatternMap::total() const {
  Support t = 0;
  for (const auto& [key, s] : map_) t += s;
  return t;
}

// Embedding helpers ------------------------------------------------------------

std::string embedding_code(const Embedding& emb) {
  std::string bits;
  for (int l = 1; l < emb.size(); ++l)
    for (int i = 0; i < l; ++i) bits.push_back((emb.code(l) >> i) & 1u ? '1' : '0');
  return bits;
}

Pattern decode_embedding_code(const std::string& bits) {
  int k = 1;
  while (static_cast<std::size_t>(k * (k - 1) / 2) < bits.size()) ++k;
  if (static_cast<std::size_t>(k * (k - 1) / 2) != bits.size())
    throw PatternError("embedding code length is not triangular");
  std::vector<std::pair<int, int>> edges;
  std::size_t pos = 0;
  for (int l = 1; l < k; ++l)
    for (int i = 0; i < l; ++i, ++pos) {
      if (bits[pos] == '1')
        edges.emplace_back(i, l);
      else if (bits[pos] != '0')
        throw PatternError("embedding code must contain only '0' and '1'");
    }
  return Pattern(k, edges);
}

Pattern embedding_pattern(const Embedding& emb, const Graph& g) {
  std::vector<std::pair<int, int>> edges;
  std::vector<label_t> labels;
  for (int l = 0; l < emb.size(); ++l) {
    if (g.labeled()) labels.push_back(g.label(emb.vertex(l)));
    for (int i = 0; i < l; ++i)
      if ((emb.code(l) >> i) & 1u) edges.emplace_back(i, l);
  }
  return Pattern(emb.size(), edges, std::move(labels));
}

// ProblemSpec -------------------------------------------------------------------

void ProblemSpec::validate() const {
  if (explicit_patterns && patterns.empty())
    throw std::invalid_argument("explicit-pattern problem without patterns");
  for (const auto& p : patterns) {
    if (!p.connected()) throw std::invalid_argument("patterns must be connected");
    if (p.size() > kMaxEmbeddingSize) throw std::invalid_argument("pattern too large");
  }
  if (explicit_patterns && vertex_induced) {
    for (const auto& p : patterns)
      if (p.size() != patterns[0].size())
        throw std::invalid_argument("explicit vertex-induced patterns must share one size");
    if (k != 0 && k != patterns[0].size())
      throw std::invalid_argument("k differs from the explicit pattern size");
  }
  if (vertex_induced && !explicit_patterns && (k < 1 || k > kMaxEmbeddingSize))
    throw std::invalid_argument("k out of range [1, " + std::to_string(kMaxEmbeddingSize) + "]");
  if (!vertex_induced && !explicit_patterns && k < 0) throw std::invalid_argument("negative k");
  if (local_reduce && local_patterns.empty())
    throw std::invalid_argument("local_reduce requires local_patterns");
  if (init_lg_vertex && init_lg_edge)
    throw std::invalid_argument("set at most one of init_lg_vertex / init_lg_edge");
  if ((init_lg_vertex || init_lg_edge) &&
      !(vertex_induced && ((explicit_patterns && patterns.size() == 1) || get_pattern)))
    throw std::invalid_argument("local-graph search needs a single explicit pattern or get_pattern");
}

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("GPM_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
  }
  return std::max(1, omp_get_max_threads());
}

SearchMode plan_search(const ProblemSpec& spec, const EngineOptions& opts) {
  if (!spec.vertex_induced && !spec.explicit_patterns) return SearchMode::pattern_tree;
  if (spec.init_lg_vertex || spec.init_lg_edge) return SearchMode::local_graph;
  if (spec.explicit_patterns && spec.patterns.size() == 1) {
    const Pattern& p = spec.patterns[0];
    if (is_clique(p) && !p.labeled() && p.size() >= 2 && opts.symmetry_breaking &&
        opts.orientation != OrientationChoice::none)
      return SearchMode::clique_dag;
    if (opts.matching_order || !spec.vertex_induced) return SearchMode::matching_order;
    return SearchMode::generic;
  }
  if (spec.explicit_patterns && !spec.vertex_induced) return SearchMode::matching_order;
  return SearchMode::generic;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Worker {
  Embedding emb;
  ConnectivityMap mnc;
  LocalGraph lg;
  std::vector<Support> support;
  std::vector<char> present;
  std::vector<std::int64_t> local;
  std::unordered_map<std::uint64_t, int> memo;
  std::unordered_map<std::string, int> memo_labeled;
  // keys discovered by this worker, slots numbered after the fixed ones
  std::unordered_map<PatternKey, int> extra;
  std::vector<PatternKey> extra_keys;
  std::uint64_t enumerated = 0;
  std::uint64_t emitted = 0;
  std::uint64_t bulk = 0;  // leaves counted without materializing
};

class Search {
 public:
  Search(const Graph& g, const OrientedGraph* dag, const ProblemSpec& spec, const EngineOptions& opts,
         SearchMode mode)
      : g_(g), sg_(dag ? SearchGraph(g, *dag) : SearchGraph(g)), spec_(spec), opts_(opts), mode_(mode) {
    k_ = spec.explicit_patterns ? spec.patterns[0].size() : spec.k;
    if (spec.explicit_patterns) {
      for (const auto& p : spec.patterns) {
        if (p.labeled() && !g.labeled())
          throw std::invalid_argument("labeled pattern on an unlabeled graph");
        if (p.size() > kMaxCanonicalSize && mode != SearchMode::clique_dag &&
            mode != SearchMode::local_graph && !spec.get_pattern)
          throw PatternError("pattern exceeds the canonical-code bound");
      }
      if (mode == SearchMode::clique_dag || mode == SearchMode::local_graph) {
        // cliques of any size share this key; avoid the permutation search
        single_key_ = spec.patterns[0].size() <= kMaxCanonicalSize
                          ? canonical_code(spec.patterns[0])
                          : std::string("clique-") + std::to_string(spec.patterns[0].size());
      } else if (mode == SearchMode::matching_order) {
        single_key_ = canonical_code(spec.patterns[0]);
      }
      for (const auto& p : spec.patterns) {
        const PatternKey key = spec.patterns.size() == 1 && !single_key_.empty() ? single_key_ : canonical_code(p);
        if (!slot_of_.count(key)) {
          slot_of_[key] = static_cast<int>(slot_key_.size());
          slot_key_.push_back(key);
        }
      }
      min_degree_ = spec.patterns[0].min_degree();
      for (const auto& p : spec.patterns) min_degree_ = std::min(min_degree_, p.min_degree());
    }
    if (mode == SearchMode::matching_order) {
      mo_ = matching_order(spec.patterns[0]);
      pattern_ = &spec.patterns[0];
    }
    lg_clique_filter_ = mode == SearchMode::local_graph && opts.degree_filter && spec.explicit_patterns &&
                        is_clique(spec.patterns[0]) && !spec.get_pattern;
    use_mnc_ = opts.memoize_connectivity && !(mode == SearchMode::clique_dag && k_ == 3);
    bulk_ok_ = !spec.listing && !spec.terminate && !spec.get_support && !spec.get_pattern && !spec.to_add &&
               !spec.local_reduce && !spec.reduce && !opts.verify_memoization;
  }

  MiningResult run(int workers) {
    const auto t0 = Clock::now();
    MiningResult result;
    result.workers = workers;
    std::vector<std::unique_ptr<Worker>> ws;
    for (int t = 0; t < workers; ++t) ws.push_back(make_worker());
    const vid_t n = g_.num_vertices();

    auto body = [&](Worker& w, vid_t v) {
      switch (mode_) {
        case SearchMode::generic: root_generic(w, v); break;
        case SearchMode::matching_order: root_matching(w, v); break;
        case SearchMode::clique_dag: root_clique(w, v); break;
        case SearchMode::local_graph: root_local(w, v); break;
        case SearchMode::pattern_tree: break;
      }
    };
    const bool feasible = k_ >= 1 && static_cast<vid_t>(k_) <= n;
    if (feasible) {
      if (workers == 1) {
        for (vid_t v = 0; v < n && !stop_.load(std::memory_order_relaxed); ++v) body(*ws[0], v);
      } else {
        std::exception_ptr error;
        const std::int64_t count = n;
#pragma omp parallel num_threads(workers)
        {
          Worker& w = *ws[omp_get_thread_num()];
#pragma omp for schedule(dynamic, 8)
          for (std::int64_t v = 0; v < count; ++v) {
            if (stop_.load(std::memory_order_relaxed)) continue;
            try {
              body(w, static_cast<vid_t>(v));
            } catch (...) {
#pragma omp critical(gpm_engine_error)
              if (!error) error = std::current_exception();
              stop_.store(true);
            }
          }
        }
        if (error) std::rethrow_exception(error);
      }
    }

    std::vector<std::int64_t> local(spec_.local_patterns.size(), 0);
    for (const auto& w : ws) {
      for (std::size_t s = 0; s < w->support.size(); ++s) {
        if (!w->present[s]) continue;
        const PatternKey& key = s < slot_key_.size() ? slot_key_[s] : w->extra_keys[s - slot_key_.size()];
        result.supports.add(key, w->support[s], spec_.reduce);
      }
      if (w->bulk) result.supports.add(slot_key_[0], w->bulk);
      for (std::size_t i = 0; i < local.size(); ++i) local[i] += w->local[i];
      result.enumerated += w->enumerated;
      result.emitted += w->emitted;
    }
    if (feasible)
      for (std::size_t i = 0; i < local.size(); ++i)
        result.supports.add(spec_.local_patterns[i], static_cast<Support>(local[i]));
    // after merging, so a custom reduce never sees the placeholder zero
    if (feasible)
      for (const auto& key : slot_key_) result.supports.touch(key);
    local_totals_ = std::move(local);
    if (spec_.is_implicit_pattern)
      result.supports.erase_if([&](const PatternKey& key, Support s) { return !spec_.is_implicit_pattern(key, s); });
    result.terminated = terminated_.load();
    result.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return result;
  }

  // Candidate pipeline of the generic search at the current embedding.
  template <typename Accept>
  void extend_generic(Worker& w, Accept&& accept) {
    const Embedding& emb = w.emb;
    const int size = emb.size();
    // suffix_max[p] = max vertex at positions > p, folded with the root
    std::array<vid_t, kMaxEmbeddingSize> threshold{};
    vid_t running = emb.vertex(0);
    for (int p = size - 1; p >= 0; --p) {
      threshold[p] = running;
      running = std::max(running, emb.vertex(p));
    }
    for (int p = 0; p < size; ++p) {
      if (spec_.to_extend && !spec_.to_extend(emb, p)) continue;
      auto nbrs = sg_.neighbors(emb.vertex(p));
      auto it = nbrs.begin();
      if (opts_.symmetry_breaking) it = std::upper_bound(nbrs.begin(), nbrs.end(), threshold[p]);
      for (; it != nbrs.end(); ++it) {
        if (stop_.load(std::memory_order_relaxed)) return;
        const vid_t u = *it;
        if (in_embedding(w, u)) continue;
        const std::uint32_t conn = connectivity(w, u);
        if (std::countr_zero(conn) != p) continue;  // extended from its first neighbor only
        if (opts_.degree_filter && static_cast<int>(g_.degree(u)) < min_degree_) continue;
        if (spec_.to_add && !spec_.to_add(emb, u)) continue;
        accept(u, conn);
      }
    }
  }

  std::vector<std::int64_t> local_totals_;

  std::unique_ptr<Worker> make_worker() {
    auto w = std::make_unique<Worker>();
    if (use_mnc_) w->mnc = ConnectivityMap(g_.num_vertices());
    w->support.assign(slot_key_.size(), 0);
    w->present.assign(slot_key_.size(), 0);
    w->local.assign(spec_.local_patterns.size(), 0);
    return w;
  }

  bool use_mnc() const { return use_mnc_; }
  const SearchGraph& search_graph() const { return sg_; }

 private:
  bool in_embedding(const Worker& w, vid_t u) const {
    return use_mnc_ ? w.mnc.member(u) || w.emb.last() == u : w.emb.contains(u);
  }

  std::uint32_t computed_connectivity(const Worker& w, vid_t u) const {
    std::uint32_t conn = 0;
    for (int i = 0; i < w.emb.size(); ++i)
      if (g_.has_edge(w.emb.vertex(i), u)) conn |= 1u << i;
    return conn;
  }

  std::uint32_t connectivity(const Worker& w, vid_t u) const {
    if (!use_mnc_) return computed_connectivity(w, u);
    std::uint32_t conn = w.mnc.lookup(u);
    if (opts_.verify_memoization) {
      const std::uint32_t expect = computed_connectivity(w, u);
      // in DAG mode the map only sees out-arcs, which is exact for higher-ranked candidates
      if (conn != expect && !(sg_.oriented() && (conn & expect) == conn))
        throw std::logic_error("connectivity map disagrees with the graph at vertex " + std::to_string(u));
    }
    return conn;
  }

  void verify_codes(const Worker& w) const {
    for (int l = 1; l < w.emb.size(); ++l)
      for (int i = 0; i < l; ++i)
        if (w.emb.connected(i, l) != g_.has_edge(w.emb.vertex(i), w.emb.vertex(l)))
          throw std::logic_error("embedding connectivity code disagrees with the graph");
  }

  template <typename Dfs>
  void descend(Worker& w, vid_t u, std::uint32_t conn, Dfs&& dfs) {
    ++w.enumerated;
    w.emb.push(u, conn);
    const int depth = w.emb.size() - 1;
    const bool track = use_mnc_ && w.emb.size() < k_;
    if (track) w.mnc.push(sg_.neighbors(u), u, depth);
    dfs(w);
    if (track) w.mnc.pop(depth);
    w.emb.pop();
  }

  void start_root(Worker& w, vid_t v) {
    w.emb.clear();
    w.emb.push(v, 0);
    if (use_mnc_ && k_ > 1) w.mnc.push(sg_.neighbors(v), v, 0);
  }
  void finish_root(Worker& w) {
    if (use_mnc_ && k_ > 1) w.mnc.pop(0);
    w.emb.clear();
  }

  int slot_for(Worker& w, const PatternKey& key) {
    auto it = slot_of_.find(key);
    if (it != slot_of_.end()) return it->second;
    if (spec_.explicit_patterns && !spec_.get_pattern) return -1;
    auto jt = w.extra.find(key);
    if (jt != w.extra.end()) return jt->second;
    const int slot = static_cast<int>(w.support.size());
    w.support.push_back(0);
    w.present.push_back(0);
    w.extra.emplace(key, slot);
    w.extra_keys.push_back(key);
    return slot;
  }

  int classify(Worker& w) {
    if (spec_.get_pattern) return slot_for(w, spec_.get_pattern(w.emb));
    if (!single_key_.empty()) return 0;
    const Embedding& emb = w.emb;
    if (!g_.labeled()) {
      std::uint64_t code = 0;
      for (int l = 1; l < emb.size(); ++l) code = (code << l) | (emb.code(l) & ((1u << l) - 1));
      auto it = w.memo.find(code);
      if (it != w.memo.end()) return it->second;
      const int slot = slot_for(w, canonical_code(embedding_pattern(emb, g_)));
      w.memo.emplace(code, slot);
      return slot;
    }
    std::string key;
    for (int l = 0; l < emb.size(); ++l) {
      const std::uint32_t c = emb.code(l);
      const label_t lab = g_.label(emb.vertex(l));
      key.append(reinterpret_cast<const char*>(&c), sizeof(c));
      key.append(reinterpret_cast<const char*>(&lab), sizeof(lab));
    }
    auto it = w.memo_labeled.find(key);
    if (it != w.memo_labeled.end()) return it->second;
    const int slot = slot_for(w, canonical_code(embedding_pattern(emb, g_)));
    w.memo_labeled.emplace(std::move(key), slot);
    return slot;
  }

  void reduce_leaf(Worker& w) {
    if (opts_.verify_memoization) verify_codes(w);
    const int slot = classify(w);
    if (slot < 0) return;
    const Support s = spec_.get_support ? spec_.get_support(w.emb) : 1;
    if (!w.present[slot]) {
      w.support[slot] = s;
      w.present[slot] = 1;
    } else {
      w.support[slot] = spec_.reduce ? spec_.reduce(w.support[slot], s) : w.support[slot] + s;
    }
    if (spec_.listing && spec_.process) {
      spec_.process(w.emb);
      ++w.emitted;
    }
    if (spec_.terminate && spec_.terminate(w.emb)) {
      terminated_.store(true);
      stop_.store(true);
    }
  }

  bool visit(Worker& w) {
    if (spec_.local_reduce) spec_.local_reduce(w.emb, w.local);
    if (w.emb.size() == k_) {
      if (!spec_.local_reduce) reduce_leaf(w);
      return false;
    }
    return !stop_.load(std::memory_order_relaxed);
  }

  // generic ------------------------------------------------------------------

  void dfs_generic(Worker& w) {
    if (!visit(w)) return;
    extend_generic(w, [&](vid_t u, std::uint32_t conn) {
      descend(w, u, conn, [this](Worker& ww) { dfs_generic(ww); });
    });
  }

  void root_generic(Worker& w, vid_t v) {
    if (opts_.degree_filter && static_cast<int>(g_.degree(v)) < min_degree_) return;
    start_root(w, v);
    dfs_generic(w);
    finish_root(w);
  }

  // matching order -----------------------------------------------------------

  void dfs_matching(Worker& w) {
    if (!visit(w)) return;
    const Embedding& emb = w.emb;
    const int level = emb.size();
    const std::uint32_t need = mo_.connected[level];
    const std::uint32_t forbid = spec_.vertex_induced ? mo_.disconnected[level] : 0;
    int source = -1;
    for (int i = 0; i < level; ++i)
      if (((need >> i) & 1u) && (source < 0 || sg_.degree(emb.vertex(i)) < sg_.degree(emb.vertex(source))))
        source = i;
    vid_t lo = 0, hi = ~vid_t{0};
    bool has_lo = false;
    if (opts_.symmetry_breaking) {
      for (int i = 0; i < level; ++i) {
        if ((mo_.smaller[level] >> i) & 1u) {
          lo = has_lo ? std::max(lo, emb.vertex(i)) : emb.vertex(i);
          has_lo = true;
        }
        if ((mo_.larger[level] >> i) & 1u) hi = std::min(hi, emb.vertex(i));
      }
    }
    const int want_degree = mo_.degree[level];
    const bool labeled = pattern_->labeled();
    const label_t want_label = labeled ? pattern_->label(mo_.vertices[level]) : 0;
    auto nbrs = sg_.neighbors(emb.vertex(source));
    auto it = has_lo ? std::upper_bound(nbrs.begin(), nbrs.end(), lo) : nbrs.begin();
    for (; it != nbrs.end(); ++it) {
      const vid_t u = *it;
      if (u >= hi) break;
      if (stop_.load(std::memory_order_relaxed)) return;
      if (in_embedding(w, u)) continue;
      if (opts_.degree_filter && static_cast<int>(g_.degree(u)) < want_degree) continue;
      if (labeled && g_.label(u) != want_label) continue;
      const std::uint32_t conn = connectivity(w, u);
      if ((conn & need) != need || (conn & forbid)) continue;
      if (spec_.to_add && !spec_.to_add(emb, u)) continue;
      descend(w, u, conn, [this](Worker& ww) { dfs_matching(ww); });
    }
  }

  void root_matching(Worker& w, vid_t v) {
    if (opts_.degree_filter && static_cast<int>(g_.degree(v)) < mo_.degree[0]) return;
    if (pattern_->labeled() && g_.label(v) != pattern_->label(mo_.vertices[0])) return;
    start_root(w, v);
    dfs_matching(w);
    finish_root(w);
  }

  // clique on the orientation -------------------------------------------------

  bool clique_degree_ok(vid_t u, int level) const {
    if (!opts_.degree_filter) return true;
    return static_cast<int>(g_.degree(u)) >= k_ - 1 &&
           static_cast<int>(sg_.dag()->out_degree(u)) >= k_ - 1 - level;
  }

  void dfs_clique(Worker& w) {
    if (!visit(w)) return;
    const Embedding& emb = w.emb;
    const int level = emb.size();
    const std::uint32_t full = (1u << level) - 1;
    if (!use_mnc_ && level == 2 && k_ == 3) {
      // triangle closing by sorted-list intersection
      auto a = sg_.neighbors(emb.vertex(0));
      auto b = sg_.neighbors(emb.vertex(1));
      if (bulk_ok_) {
        const auto c = intersection_size(a, b);
        w.enumerated += c;
        w.bulk += c;
        return;
      }
      std::vector<vid_t> common;
      intersect(a, b, common);
      for (vid_t u : common) {
        if (stop_.load(std::memory_order_relaxed)) return;
        if (spec_.to_add && !spec_.to_add(emb, u)) continue;
        descend(w, u, full, [this](Worker& ww) { dfs_clique(ww); });
      }
      return;
    }
    for (vid_t u : sg_.neighbors(emb.last())) {
      if (stop_.load(std::memory_order_relaxed)) return;
      if (!clique_degree_ok(u, level)) continue;
      const std::uint32_t conn = use_mnc_ ? connectivity(w, u) : computed_connectivity(w, u);
      if (conn != full) continue;
      if (spec_.to_add && !spec_.to_add(emb, u)) continue;
      descend(w, u, conn, [this](Worker& ww) { dfs_clique(ww); });
    }
  }

  void root_clique(Worker& w, vid_t v) {
    if (!clique_degree_ok(v, 0)) return;
    start_root(w, v);
    dfs_clique(w);
    finish_root(w);
  }

  // local graph ---------------------------------------------------------------

  void dfs_local(Worker& w) {
    if (!visit(w)) return;
    auto cands = w.lg.candidates();
    if (bulk_ok_ && w.emb.size() == k_ - 1) {
      w.bulk += cands.size();
      return;
    }
    const std::vector<int> snapshot(cands.begin(), cands.end());
    for (int x : snapshot) {
      if (stop_.load(std::memory_order_relaxed)) return;
      // x still needs k - size - 1 further clique members among its level neighbors
      if (lg_clique_filter_ && w.lg.degree(w.lg.level(), x) < k_ - w.emb.size() - 1) continue;
      const vid_t u = w.lg.global_id(x);
      if (spec_.to_add && !spec_.to_add(w.emb, u)) continue;
      ++w.enumerated;
      w.emb.push(u, computed_connectivity(w, u));
      if (w.emb.size() < k_) {
        if (spec_.update_lg)
          spec_.update_lg(w.lg, x);
        else
          w.lg.push(x);
        dfs_local(w);
        w.lg.pop();
      } else {
        visit(w);
      }
      w.emb.pop();
    }
  }

  void root_local(Worker& w, vid_t v) {
    if (spec_.init_lg_vertex) {
      if (lg_clique_filter_ && static_cast<int>(sg_.neighbors(v).size()) < k_ - 1) return;
      w.emb.clear();
      w.emb.push(v, 0);
      spec_.init_lg_vertex(sg_, v, w.lg);
      dfs_local(w);
      w.emb.clear();
      return;
    }
    for (vid_t u : sg_.neighbors(v)) {
      if (!sg_.oriented() && u < v) continue;
      if (stop_.load(std::memory_order_relaxed)) return;
      w.emb.clear();
      w.emb.push(v, 0);
      if (spec_.to_add && !spec_.to_add(w.emb, u)) continue;
      ++w.enumerated;
      w.emb.push(u, 1);
      spec_.init_lg_edge(sg_, Edge{v, u}, w.lg);
      dfs_local(w);
    }
    w.emb.clear();
  }

  const Graph& g_;
  SearchGraph sg_;
  const ProblemSpec& spec_;
  const EngineOptions& opts_;
  SearchMode mode_;
  int k_ = 0;
  int min_degree_ = 0;
  MatchingOrder mo_;
  const Pattern* pattern_ = nullptr;
  PatternKey single_key_;
  std::unordered_map<PatternKey, int> slot_of_;
  std::vector<PatternKey> slot_key_;
  bool use_mnc_ = false;
  bool lg_clique_filter_ = false;
  bool bulk_ok_ = false;
  std::atomic<bool> stop_{false};
  std::atomic<bool> terminated_{false};
};

MiningResult mine_impl(const Graph& g, const OrientedGraph* dag, const ProblemSpec& spec,
                       const EngineOptions& opts) {
  spec.validate();
  const int workers = resolve_workers(opts.workers);
  const SearchMode mode = plan_search(spec, opts);
  if (mode == SearchMode::pattern_tree) return mine_pattern_tree(g, spec, opts);

  if (spec.explicit_patterns && !spec.vertex_induced && spec.patterns.size() > 1) {
    // one matching-order run per pattern
    MiningResult total;
    total.workers = workers;
    for (const auto& p : spec.patterns) {
      ProblemSpec one = spec;
      one.patterns = {p};
      one.k = 0;
      auto r = mine_impl(g, dag, one, opts);
      total.supports.merge(r.supports, spec.reduce);
      total.enumerated += r.enumerated;
      total.emitted += r.emitted;
      total.wall_ms += r.wall_ms;
      if (r.terminated) {
        total.terminated = true;
        break;
      }
    }
    return total;
  }

  std::optional<OrientedGraph> owned;
  if (mode == SearchMode::clique_dag && !dag) {
    owned = orient(g, opts.orientation == OrientationChoice::core ? Orientation::core : Orientation::degree);
    dag = &*owned;
  }
  if (mode != SearchMode::clique_dag && !(mode == SearchMode::local_graph && dag)) dag = nullptr;
  Search search(g, dag, spec, opts, mode);
  return search.run(workers);
}

}  // namespace

MiningResult mine(const Graph& g, const ProblemSpec& spec, const EngineOptions& opts) {
  if (spec.init_lg_vertex || spec.init_lg_edge) {
    // local-graph searches run over an orientation unless explicitly disabled
    if (opts.orientation != OrientationChoice::none) {
      const auto dag = orient(g, opts.orientation == OrientationChoice::core ? Orientation::core
                                                                           : Orientation::degree);
      return mine_impl(g, &dag, spec, opts);
    }
  }
  return mine_impl(g, nullptr, spec, opts);
}

MiningResult mine(const Graph& g, const OrientedGraph& dag, const ProblemSpec& spec, const EngineOptions& opts) {
  return mine_impl(g, &dag, spec, opts);
}

std::vector<vid_t> generic_candidates(const Graph& g, const Embedding& emb, const ProblemSpec& spec,
                                      const EngineOptions& opts) {
  ProblemSpec s = spec;
  s.explicit_patterns = false;
  s.vertex_induced = true;
  s.k = std::max(spec.k, emb.size() + 1);
  s.validate();
  Search search(g, nullptr, s, opts, SearchMode::generic);
  auto w = search.make_worker();
  for (int i = 0; i < emb.size(); ++i) {
    std::uint32_t conn = 0;
    for (int j = 0; j < i; ++j)
      if (g.has_edge(emb.vertex(j), emb.vertex(i))) conn |= 1u << j;
    w->emb.push(emb.vertex(i), conn);
    if (search.use_mnc()) w->mnc.push(g.neighbors(emb.vertex(i)), emb.vertex(i), i);
  }
  std::vector<vid_t> out;
  search.extend_generic(*w, [&](vid_t u, std::uint32_t) { out.push_back(u); });
  return out;
}

}  // namespace gpm
