// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "canonicality.h"
#include "gpm/apps/local_count.h"
#include "gpm/apps/presets.h"
#include "gpm/fsm.h"
#include "gpm/oracle.h"
#include "test_util.h"

using namespace gpm;
using apps::Level;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::string digest(const PatternMap& m) {
  std::ostringstream s;
  for (const auto& [key, v] : m) s << to_hex(key) << '=' << v << ';';
  return s.str();
}

struct Check {
  bool ok = true;
  std::string why;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) why = what;
    ok = ok && cond;
  }
};

int failures = 0;

void report(int id, const std::string& name, const Check& c, double secs, double budget, const std::string& extra = {}) {
  const bool in_time = budget <= 0 || secs < budget;
  const bool pass = c.ok && in_time;
  if (!pass) ++failures;
  std::printf("criterion %2d %s  %s (%.2f s", id, pass ? "PASS" : "FAIL", name.c_str(), secs);
  if (budget > 0) std::printf(", budget %.0f s", budget);
  std::printf(")");
  if (!extra.empty()) std::printf("  %s", extra.c_str());
  if (!c.ok) std::printf("  first mismatch: %s", c.why.c_str());
  if (!in_time) std::printf("  over time budget");
  std::printf("\n");
  std::fflush(stdout);
}

Graph random_graph(std::uint64_t seed, vid_t lo, vid_t hi, double pmin, double pmax) {
  std::mt19937_64 rng(seed * 6151 + 17);
  const vid_t n = lo + static_cast<vid_t>(rng() % (hi - lo + 1));
  const double p = pmin + (pmax - pmin) * static_cast<double>(rng() % 1001) / 1000.0;
  return gen::erdos_renyi(n, p, seed);
}

// Frequent labeled patterns of up to three edges by exhaustive labeling of
// every connected shape and the MNI oracle.
std::map<PatternKey, Support> brute_frequent(const Graph& g, int max_edges, Support min_sup) {
  const std::vector<Pattern> shapes{Pattern::path(2), Pattern::wedge(), Pattern::triangle(), Pattern::path(4),
                                    Pattern::star(3)};
  std::map<PatternKey, Support> out;
  std::map<PatternKey, bool> done;
  for (const auto& s : shapes) {
    if (s.num_edges() > max_edges) continue;
    std::vector<label_t> labels(s.size(), 0);
    for (;;) {
      const Pattern p(s.size(), s.edges(), labels);
      const PatternKey key = canonical_code(p);
      if (!done[key]) {
        done[key] = true;
        const Support sup = oracle::mni_oracle(g, p);
        if (sup >= min_sup) out[key] = sup;
      }
      int i = 0;
      while (i < s.size() && ++labels[i] == g.num_labels()) labels[i++] = 0;
      if (i == s.size()) break;
    }
  }
  return out;
}

std::map<PatternKey, Support> fsm_by_key(const FsmResult& r) {
  std::map<PatternKey, Support> out;
  for (const auto& p : r.patterns) out[canonical_code(code_to_pattern(p.code))] = p.support;
  return out;
}

std::string fsm_digest(const FsmResult& r) {
  std::ostringstream s;
  for (const auto& p : r.patterns) s << render(p.code) << '=' << p.support << ';';
  return s.str();
}

// Criteria 1-4 with a given worker count. Each fills its Check and appends
// result digests for the determinism comparison.
struct CoreRun {
  Check c[5];
  double secs[5] = {};
  std::vector<std::string> digests;
};

CoreRun run_core(int workers, bool with_oracles) {
  CoreRun run;
  EngineOptions opts;
  opts.workers = workers;

  auto t0 = Clock::now();
  for (vid_t n = 1; n <= 10; ++n) {
    const Graph kn = gen::complete(n);
    const auto tc = apps::triangle_count(kn, opts);
    run.c[1].expect(tc.supports.total() == binom(n, 3), "TC(K" + std::to_string(n) + ")");
    run.digests.push_back(digest(tc.supports));
    for (int k = 2; k <= 6; ++k) {
      const auto kcl = apps::clique_count(kn, k, Level::hi, opts);
      run.c[1].expect(kcl.supports.total() == binom(n, k),
                      std::to_string(k) + "-CL(K" + std::to_string(n) + ")");
      run.digests.push_back(digest(kcl.supports));
    }
  }
  run.secs[1] = seconds_since(t0);

  t0 = Clock::now();
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const Graph g = random_graph(seed, 20, 100, 0.05, 0.2);
    for (int k = 3; k <= 4; ++k) {
      const auto hi = apps::motif_count(g, k, Level::hi, opts);
      const auto lo = apps::motif_count(g, k, Level::lo, opts);
      run.digests.push_back(digest(hi.supports));
      run.digests.push_back(digest(lo.supports));
      if (with_oracles) {
        const auto expect = oracle::count_vertex_induced(g, k);
        const std::string tag = std::to_string(k) + "-MC graph " + std::to_string(seed);
        run.c[2].expect(hi.supports == expect, tag + " hi");
        run.c[2].expect(lo.supports == expect, tag + " lo");
      }
    }
  }
  run.secs[2] = seconds_since(t0);

  t0 = Clock::now();
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Graph g = random_graph(seed + 100, 20, 60, 0.05, 0.2);
    for (const auto& p : {Pattern::diamond(), Pattern::cycle(4)}) {
      const auto r = apps::subgraph_listing(g, p, opts);
      run.digests.push_back(digest(r.supports));
      if (with_oracles)
        run.c[3].expect(r.supports.total() == oracle::count_edge_induced(g, p),
                        "SL " + std::string(p.num_edges() == 5 ? "diamond" : "4-cycle") + " graph " +
                            std::to_string(seed));
    }
  }
  run.secs[3] = seconds_since(t0);

  t0 = Clock::now();
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    std::mt19937_64 rng(seed + 300);
    const vid_t n = 20 + static_cast<vid_t>(rng() % 41);
    const double p = 0.05 + 0.1 * static_cast<double>(rng() % 101) / 100.0;
    const Graph g = gen::with_random_labels(gen::erdos_renyi(n, p, seed + 300), 3, seed);
    for (int k : {2, 3})
      for (Support min_sup : {Support{2}, Support{5}}) {
        const auto r = mine_fsm(g, k, min_sup, opts);
        run.digests.push_back(fsm_digest(r));
        if (with_oracles) {
          const std::string tag = std::to_string(k) + "-FSM minsup " + std::to_string(min_sup) + " graph " +
                                  std::to_string(seed);
          const auto got = fsm_by_key(r);
          run.c[4].expect(got == fsm_by_key(mine_fsm(g, k, min_sup, opts, false)), tag + " vs unpruned");
          run.c[4].expect(got == brute_frequent(g, k, min_sup), tag + " vs oracle");
        }
      }
  }
  run.secs[4] = seconds_since(t0);
  return run;
}

}  // namespace

int main() {
  const auto start = Clock::now();

  // 1-4
  const CoreRun base = run_core(1, true);
  report(1, "closed-form TC and k-CL on K_n", base.c[1], base.secs[1], 1);
  report(2, "3-MC and 4-MC (hi, lo) match the vertex-induced oracle", base.c[2], base.secs[2], 60);
  report(3, "SL diamond and 4-cycle match the edge-induced oracle", base.c[3], base.secs[3], 60);
  report(4, "FSM matches the unpruned run and the MNI oracle", base.c[4], base.secs[4], 120);

  // 5
  {
    const auto t0 = Clock::now();
    Check c;
    EngineOptions opts;
    opts.workers = 1;
    opts.degree_filter = false;
    std::uint64_t graphs = 0;
    for (vid_t n = 1; n <= 7 && c.ok; ++n) {
      const int pairs = static_cast<int>(n * (n - 1) / 2);
      std::vector<Edge> all;
      for (vid_t i = 0; i < n; ++i)
        for (vid_t j = i + 1; j < n; ++j) all.push_back({i, j});
      for (std::uint32_t bits = 0; bits < (1u << pairs); ++bits) {
        std::vector<Edge> edges;
        for (int b = 0; b < pairs; ++b)
          if ((bits >> b) & 1u) edges.push_back(all[b]);
        const Graph g = Graph::from_edges(n, edges);
        ++graphs;
        if (!test::one_sequence_per_set(g, 4, opts)) {
          c.expect(false, "n=" + std::to_string(n) + " edge mask " + std::to_string(bits));
          break;
        }
      }
    }
    report(5, "generic filter: one sequence per connected set, every graph with n <= 7", c, seconds_since(t0), 0,
           std::to_string(graphs) + " graphs");
  }

  // 6
  {
    const auto t0 = Clock::now();
    Check c;
    for (int w : {2, 4, 8}) {
      const CoreRun r = run_core(w, false);
      c.expect(r.digests == base.digests, "criteria 1-4 differ with " + std::to_string(w) + " workers");
    }
    report(6, "criteria 1-4 identical for 1, 2, 4 and 8 workers", c, seconds_since(t0), 0);
  }

  // 7
  {
    const auto t0 = Clock::now();
    Check c;
    const Graph g = gen::clustered(10000, 20, 0.5, 4.0, 7);
    const auto mc_hi = apps::motif_count(g, 4, Level::hi);
    const auto mc_lo = apps::motif_count(g, 4, Level::lo);
    c.expect(mc_hi.supports == mc_lo.supports, "4-MC hi/lo counts differ");
    c.expect(mc_lo.enumerated < mc_hi.enumerated, "4-MC lo counter not below hi");
    const auto cl_hi = apps::clique_count(g, 6, Level::hi);
    const auto cl_lo = apps::clique_count(g, 6, Level::lo);
    c.expect(cl_hi.supports == cl_lo.supports, "6-CL hi/lo counts differ");
    c.expect(cl_lo.enumerated < cl_hi.enumerated, "6-CL lo counter not below hi");
    char extra[256];
    std::snprintf(extra, sizeof extra, "4-MC %llu/%llu = %.3f, 6-CL %llu/%llu = %.3f (%llu 6-cliques)",
                  static_cast<unsigned long long>(mc_lo.enumerated), static_cast<unsigned long long>(mc_hi.enumerated),
                  static_cast<double>(mc_lo.enumerated) / static_cast<double>(mc_hi.enumerated),
                  static_cast<unsigned long long>(cl_lo.enumerated), static_cast<unsigned long long>(cl_hi.enumerated),
                  static_cast<double>(cl_lo.enumerated) / static_cast<double>(cl_hi.enumerated),
                  static_cast<unsigned long long>(cl_hi.supports.total()));
    report(7, "enumerated embeddings lo < hi on a 10k-vertex graph", c, seconds_since(t0), 0, extra);
  }

  // 8
  {
    const auto t0 = Clock::now();
    Check c;
    const Graph g = gen::clustered(3000, 15, 0.4, 3.0, 8);
    double on_ms = 0, off_ms = 0;
    auto compare = [&](const std::string& name, const std::function<MiningResult(const EngineOptions&)>& f) {
      EngineOptions on, off;
      off.memoize_connectivity = false;
      const auto a = f(on), b = f(off);
      on_ms += a.wall_ms;
      off_ms += b.wall_ms;
      c.expect(a.supports == b.supports, name + " counts");
      c.expect(a.enumerated == b.enumerated, name + " counter");
    };
    compare("4-MC", [&](const EngineOptions& o) { return apps::motif_count(g, 4, Level::hi, o); });
    compare("5-CL", [&](const EngineOptions& o) { return apps::clique_count(g, 5, Level::hi, o); });
    compare("diamond SL", [&](const EngineOptions& o) { return apps::subgraph_listing(g, Pattern::diamond(), o); });
    char extra[128];
    std::snprintf(extra, sizeof extra, "wall %.0f ms with MNC, %.0f ms without", on_ms, off_ms);
    report(8, "MNC on/off: same counts and counter", c, seconds_since(t0), 0, extra);
  }

  // 9
  {
    const auto t0 = Clock::now();
    Check c;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const Graph g = random_graph(seed + 90000, 20, 100, 0.05, 0.2);
      const auto m = oracle::count_vertex_induced(g, 4);
      const auto got = apps::mc4_correct(apps::mc4_raw_sums(g));
      auto at = [&](const Pattern& p) { return static_cast<std::int64_t>(m.at(canonical_code(p))); };
      c.expect(got.path == at(Pattern::path(4)) && got.star == at(Pattern::star(3)) &&
                   got.cycle == at(Pattern::cycle(4)) && got.tailed_triangle == at(Pattern::tailed_triangle()) &&
                   got.diamond == at(Pattern::diamond()) && got.clique == at(Pattern::clique(4)),
               "held-out graph " + std::to_string(seed));
    }
    report(9, "mc4 correction constants exact on 20 held-out graphs", c, seconds_since(t0), 0);
  }

  // 10
  {
    const auto t0 = Clock::now();
    Check c;
    c.expect(apps::edge_wedges(4, 5, 2) == 3, "edge_wedges(4, 5, 2)");
    report(10, "per-edge wedge formula, tri = 2, degrees 4 and 5 -> 3", c, seconds_since(t0), 0);
  }

  std::printf("acceptance: %d failing, %.1f s total\n", failures, seconds_since(start));
  return failures == 0 ? 0 : 1;
}
