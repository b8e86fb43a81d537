#include "gpm/fsm.h"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <map>

namespace gpm {

namespace {

label_t lab(const Graph& g, vid_t v) { return g.labeled() ? g.label(v) : 0; }

struct ExtensionOrder {
  bool operator()(const DfsEdge& a, const DfsEdge& b) const { return extension_less(a, b); }
};

}  // namespace

void DomainSupport::insert(std::span<const vid_t> mapping) {
  if (domains_.empty()) domains_.resize(mapping.size());
  if (mapping.size() != domains_.size()) throw std::invalid_argument("mapping size differs from domain count");
  for (std::size_t i = 0; i < mapping.size(); ++i) domains_[i].push_back(mapping[i]);
  normalized_ = false;
}

void DomainSupport::merge(const DomainSupport& other) {
  if (domains_.empty()) domains_.resize(other.domains_.size());
  if (other.domains_.size() != domains_.size()) throw std::invalid_argument("domain count mismatch");
  for (std::size_t i = 0; i < domains_.size(); ++i)
    domains_[i].insert(domains_[i].end(), other.domains_[i].begin(), other.domains_[i].end());
  normalized_ = false;
}

void DomainSupport::normalize() {
  if (normalized_) return;
  for (auto& d : domains_) {
    std::sort(d.begin(), d.end());
    d.erase(std::unique(d.begin(), d.end()), d.end());
  }
  normalized_ = true;
}

std::size_t DomainSupport::domain_size(int pos) {
  normalize();
  return domains_[pos].size();
}

Support DomainSupport::value() {
  normalize();
  if (domains_.empty()) return 0;
  std::size_t m = domains_[0].size();
  for (const auto& d : domains_) m = std::min(m, d.size());
  return m;
}

std::vector<PatternNode> seed_nodes(const Graph& g) {
  std::map<std::pair<label_t, label_t>, std::vector<vid_t>> bins;
  for (vid_t u = 0; u < g.num_vertices(); ++u)
    for (vid_t v : g.neighbors(u)) {
      const label_t lu = lab(g, u), lv = lab(g, v);
      if (lu > lv) continue;
      auto& list = bins[{lu, lv}];
      list.push_back(u);
      list.push_back(v);
    }
  std::vector<PatternNode> out;
  for (auto& [labels, list] : bins) {
    PatternNode node;
    node.code = {DfsEdge{0, 1, labels.first, labels.second}};
    node.embeddings = std::move(list);
    out.push_back(std::move(node));
  }
  return out;
}

std::vector<PatternNode> rightmost_extensions(const PatternNode& node, const Graph& g,
                                              const std::function<bool(std::span<const vid_t>, Edge)>& accept) {
  const int nv = node.stride();
  const auto rmpath = rightmost_path(node.code);
  const int r = rmpath.front();
  std::vector<std::uint32_t> padj(nv, 0);
  std::vector<label_t> plab(nv, 0);
  for (const auto& e : node.code) {
    padj[e.from] |= 1u << e.to;
    padj[e.to] |= 1u << e.from;
    plab[e.from] = e.from_label;
    plab[e.to] = e.to_label;
  }

  std::map<DfsEdge, std::vector<vid_t>, ExtensionOrder> bins;
  const std::size_t count = node.num_embeddings();
  for (std::size_t i = 0; i < count; ++i) {
    const auto m = node.embedding(i);
    for (auto it = rmpath.rbegin(); it != rmpath.rend(); ++it) {
      const int j = *it;
      if (j == r || ((padj[r] >> j) & 1u)) continue;
      if (!g.has_edge(m[r], m[j])) continue;
      if (accept && !accept(m, Edge{m[r], m[j]})) continue;
      auto& list = bins[DfsEdge{r, j, plab[r], plab[j]}];
      list.insert(list.end(), m.begin(), m.end());
    }
    for (int p : rmpath) {
      for (vid_t w : g.neighbors(m[p])) {
        if (std::find(m.begin(), m.end(), w) != m.end()) continue;
        if (accept && !accept(m, Edge{m[p], w})) continue;
        auto& list = bins[DfsEdge{p, nv, plab[p], lab(g, w)}];
        list.insert(list.end(), m.begin(), m.end());
        list.push_back(w);
      }
    }
  }

  std::vector<PatternNode> out;
  for (auto& [edge, list] : bins) {
    PatternNode child;
    child.code = node.code;
    child.code.push_back(edge);
    if (!is_min_extension(child.code)) continue;
    child.embeddings = std::move(list);
    out.push_back(std::move(child));
  }
  return out;
}

Support mni(const PatternNode& node) {
  DomainSupport d(node.stride());
  for (std::size_t i = 0; i < node.num_embeddings(); ++i) d.insert(node.embedding(i));
  return d.value();
}

namespace {

using Clock = std::chrono::steady_clock;

Embedding make_embedding(const PatternNode& node, std::size_t i) {
  const auto m = node.embedding(i);
  std::vector<std::uint32_t> codes(m.size(), 0);
  std::vector<Edge> edges;
  for (const auto& e : node.code) {
    const int lo = std::min(e.from, e.to), hi = std::max(e.from, e.to);
    codes[hi] |= 1u << lo;
    edges.push_back(Edge{m[e.from], m[e.to]});
  }
  Embedding emb;
  for (std::size_t p = 0; p < m.size(); ++p) emb.push(m[p], codes[p]);
  emb.set_edges(std::move(edges));
  return emb;
}

struct TreeSearch {
  const Graph& g;
  int max_edges;
  bool prune;
  std::size_t cap;
  std::function<Support(const PatternNode&)> support;
  std::function<bool(const DfsCode&, Support)> frequent;
  std::function<bool(std::span<const vid_t>, Edge)> accept;
  std::function<bool(const PatternNode&)> on_record;  // returns true to stop
  std::atomic<std::size_t> live_bytes{0};
  std::atomic<bool> stop{false};

  struct Local {
    std::vector<FrequentPattern> found;
    std::uint64_t enumerated = 0;
  };

  void charge(std::size_t bytes) {
    const std::size_t now = live_bytes.fetch_add(bytes) + bytes;
    if (now > cap)
      throw ResourceError("embedding lists exceed the memory cap (" + std::to_string(cap) + " bytes)");
  }

  void visit(const PatternNode& node, Support s, bool freq, Local& local) {
    if (stop.load(std::memory_order_relaxed)) return;
    if (freq) {
      local.found.push_back({node.code, s, node.num_embeddings()});
      if (on_record && on_record(node)) {
        stop.store(true);
        return;
      }
    }
    if (static_cast<int>(node.code.size()) >= max_edges) return;
    auto children = rightmost_extensions(node, g, accept);
    std::size_t bytes = 0;
    for (const auto& c : children) bytes += c.bytes();
    charge(bytes);
    struct Release {
      std::atomic<std::size_t>& live;
      std::size_t bytes;
      ~Release() { live.fetch_sub(bytes); }
    } release{live_bytes, bytes};
    for (const auto& child : children) {
      local.enumerated += child.num_embeddings();
      const Support cs = support(child);
      const bool cf = frequent(child.code, cs);
      if (prune && !cf) continue;
      visit(child, cs, cf, local);
    }
  }

  FsmResult run(int workers) {
    const auto t0 = Clock::now();
    FsmResult result;
    result.workers = workers;
    auto seeds = seed_nodes(g);
    if (accept) {
      for (auto& s : seeds) {
        std::vector<vid_t> kept;
        for (std::size_t i = 0; i < s.num_embeddings(); ++i) {
          const auto m = s.embedding(i);
          const vid_t root[1] = {m[0]};
          if (accept(std::span<const vid_t>(root, 1), Edge{m[0], m[1]})) kept.insert(kept.end(), m.begin(), m.end());
        }
        s.embeddings = std::move(kept);
      }
      std::erase_if(seeds, [](const PatternNode& s) { return s.embeddings.empty(); });
    }
    std::size_t seed_bytes = 0;
    for (const auto& s : seeds) seed_bytes += s.bytes();
    charge(seed_bytes);

    std::vector<Local> locals(workers);
    auto task = [&](Local& local, const PatternNode& seed) {
      local.enumerated += seed.num_embeddings();
      const Support s = support(seed);
      const bool f = frequent(seed.code, s);
      if (prune && !f) return;
      visit(seed, s, f, local);
    };
    const std::int64_t n = static_cast<std::int64_t>(seeds.size());
    if (workers == 1) {
      for (std::int64_t i = 0; i < n && !stop.load(); ++i) task(locals[0], seeds[i]);
    } else {
      std::exception_ptr error;
#pragma omp parallel num_threads(workers)
      {
        Local& local = locals[omp_get_thread_num()];
#pragma omp for schedule(dynamic, 1)
        for (std::int64_t i = 0; i < n; ++i) {
          if (stop.load(std::memory_order_relaxed)) continue;
          try {
            task(local, seeds[i]);
          } catch (...) {
#pragma omp critical(gpm_fsm_error)
            if (!error) error = std::current_exception();
            stop.store(true);
          }
        }
      }
      if (error) std::rethrow_exception(error);
    }
    for (auto& l : locals) {
      result.enumerated += l.enumerated;
      for (auto& f : l.found) result.patterns.push_back(std::move(f));
    }
    std::sort(result.patterns.begin(), result.patterns.end(), [&](const auto& a, const auto& b) {
      if (a.code.size() != b.code.size()) return a.code.size() < b.code.size();
      return render(a.code, &g) < render(b.code, &g);
    });
    result.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return result;
  }
};

}  // namespace

FsmResult mine_fsm(const Graph& g, int max_edges, Support min_sup, const EngineOptions& opts, bool prune) {
  if (!g.labeled()) throw std::invalid_argument("frequent subgraph mining needs a labeled graph");
  if (max_edges < 1 || max_edges > kMaxDfsCodeEdges)
    throw std::invalid_argument("k must be in [1, " + std::to_string(kMaxDfsCodeEdges) + "] edges");
  if (min_sup < 1) throw std::invalid_argument("minimum support must be at least 1");
  TreeSearch search{g, max_edges, prune, opts.memory_cap_bytes, {}, {}, {}, {}};
  search.support = [](const PatternNode& n) { return mni(n); };
  search.frequent = [min_sup](const DfsCode&, Support s) { return s >= min_sup; };
  return search.run(resolve_workers(opts.workers));
}

MiningResult mine_pattern_tree(const Graph& g, const ProblemSpec& spec, const EngineOptions& opts) {
  const int max_edges = spec.k == 0 ? kMaxDfsCodeEdges : spec.k;
  if (max_edges < 1 || max_edges > kMaxDfsCodeEdges)
    throw std::invalid_argument("k must be in [1, " + std::to_string(kMaxDfsCodeEdges) + "] edges");
  const bool prune = spec.support_anti_monotonic && static_cast<bool>(spec.is_implicit_pattern);
  TreeSearch search{g, max_edges, prune, opts.memory_cap_bytes, {}, {}, {}, {}};
  if (spec.get_support) {
    search.support = [&spec](const PatternNode& n) {
      Support total = 0;
      for (std::size_t i = 0; i < n.num_embeddings(); ++i) {
        const Support s = spec.get_support(make_embedding(n, i));
        total = i == 0 ? s : (spec.reduce ? spec.reduce(total, s) : total + s);
      }
      return total;
    };
  } else {
    search.support = [](const PatternNode& n) { return mni(n); };
  }
  search.frequent = [&](const DfsCode& code, Support s) {
    return !spec.is_implicit_pattern || spec.is_implicit_pattern(render(code, &g), s);
  };
  if (spec.to_add_edge) {
    search.accept = [&spec](std::span<const vid_t> m, Edge e) {
      Embedding emb;
      for (vid_t v : m) emb.push(v, 0);
      return spec.to_add_edge(emb, e);
    };
  }
  std::atomic<std::uint64_t> emitted{0};
  std::atomic<bool> terminated{false};
  if ((spec.listing && spec.process) || spec.terminate) {
    search.on_record = [&](const PatternNode& n) {
      for (std::size_t i = 0; i < n.num_embeddings(); ++i) {
        const Embedding emb = make_embedding(n, i);
        if (spec.listing && spec.process) {
          spec.process(emb);
          ++emitted;
        }
        if (spec.terminate && spec.terminate(emb)) {
          terminated.store(true);
          return true;
        }
      }
      return false;
    };
  }
  FsmResult r = search.run(resolve_workers(opts.workers));
  MiningResult out;
  for (const auto& p : r.patterns) out.supports.add(render(p.code, &g), p.support, spec.reduce);
  out.enumerated = r.enumerated;
  out.emitted = emitted.load();
  out.terminated = terminated.load();
  out.wall_ms = r.wall_ms;
  out.workers = r.workers;
  return out;
}

}  // namespace gpm
