#include "cli.h"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <json.hpp>
#include <mutex>
#include <optional>

#include "gpm/apps/presets.h"
#include "gpm/fsm.h"
#include "gpm/oracle.h"

namespace gpm::cli {

namespace {

struct RunConfig {
  std::string graph;
  std::string labels;
  std::string pattern;
  int k = 0;
  long long min_sup = 0;
  int threads = 0;
  std::string orientation = "auto";
  std::string level = "hi";
  bool local_graph = false;
  bool local_count = false;
  std::string format = "json";
  std::string list_path;
  std::string write_cache;
  std::string mem_cap;
  bool no_sb = false;
  bool no_mnc = false;
  bool no_df = false;
  bool no_mo = false;
  bool stats = false;
  bool vertex_induced = false;
};

struct Record {
  std::string pattern;
  Support support;
};

struct Stats {
  std::uint64_t enumerated = 0;
  double wall_ms = 0;
  int workers = 1;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::size_t parse_bytes(const std::string& text) {
  std::size_t pos = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &pos);
  } catch (const std::exception&) {
    throw UsageError("--mem-cap: not a size: " + text);
  }
  const std::string suffix = text.substr(pos);
  if (suffix.empty()) return value;
  if (suffix == "K" || suffix == "k") return value << 10;
  if (suffix == "M" || suffix == "m") return value << 20;
  if (suffix == "G" || suffix == "g") return value << 30;
  throw UsageError("--mem-cap: unknown suffix " + suffix);
}

Graph load_graph(const RunConfig& cfg) {
  Graph g = is_binary_cache(cfg.graph)
                ? load_binary(cfg.graph)
                : load_edge_list(cfg.graph, cfg.labels.empty() ? std::nullopt
                                                               : std::optional<std::filesystem::path>(cfg.labels));
  if (!cfg.write_cache.empty()) save_binary(g, cfg.write_cache);
  return g;
}

EngineOptions engine_options(const RunConfig& cfg) {
  EngineOptions o;
  o.workers = cfg.threads;
  o.symmetry_breaking = !cfg.no_sb;
  o.memoize_connectivity = !cfg.no_mnc;
  o.degree_filter = !cfg.no_df;
  o.matching_order = !cfg.no_mo;
  if (cfg.orientation == "degree")
    o.orientation = OrientationChoice::degree;
  else if (cfg.orientation == "core")
    o.orientation = OrientationChoice::core;
  else if (cfg.orientation == "none")
    o.orientation = OrientationChoice::none;
  if (!cfg.mem_cap.empty()) o.memory_cap_bytes = parse_bytes(cfg.mem_cap);
  return o;
}

class ListingSink {
 public:
  explicit ListingSink(const std::string& path) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) throw UsageError("cannot open listing file " + path);
  }
  std::function<void(const Embedding&)> callback() {
    if (!file_.is_open()) return {};
    return [this](const Embedding& emb) {
      std::string line;
      for (int i = 0; i < emb.size(); ++i) {
        if (i) line.push_back(' ');
        line += std::to_string(emb.vertex(i));
      }
      line.push_back('\n');
      std::lock_guard<std::mutex> lock(mu_);
      file_ << line;
    };
  }

 private:
  std::ofstream file_;
  std::mutex mu_;
};

void collect(const MiningResult& r, std::vector<Record>& records, Stats& stats) {
  for (const auto& [key, s] : r.supports) records.push_back({pattern_label(key), s});
  stats.enumerated += r.enumerated;
  stats.wall_ms += r.wall_ms;
  stats.workers = r.workers;
}

MiningResult with_sink(const Graph& g, ProblemSpec spec, const EngineOptions& opts,
                       std::function<void(const Embedding&)> sink) {
  if (sink) {
    spec.listing = true;
    spec.process = std::move(sink);
  }
  return mine(g, spec, opts);
}

void write_output(const RunConfig& cfg, const std::vector<Record>& records, const Stats& stats,
                  std::ostream& out) {
  if (cfg.format == "tsv") {
    for (const auto& r : records) out << r.pattern << '\t' << r.support << '\n';
    if (cfg.stats) {
      out << "# enumerated_embeddings\t" << stats.enumerated << '\n';
      out << "# wall_ms\t" << stats.wall_ms << '\n';
      out << "# workers\t" << stats.workers << '\n';
    }
    return;
  }
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : records) arr.push_back({{"pattern", r.pattern}, {"support", r.support}});
  if (cfg.stats)
    arr.push_back({{"enumerated_embeddings", stats.enumerated}, {"wall_ms", stats.wall_ms}, {"workers", stats.workers}});
  out << arr.dump(2) << '\n';
}

void add_common(CLI::App* sub, RunConfig& cfg, bool engine_flags) {
  sub->add_option("graph", cfg.graph, "edge-list file or binary cache")->required();
  sub->add_option("--labels", cfg.labels, "vertex label file (\"id label\" lines)");
  sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "tsv"}));
  sub->add_flag("--stats", cfg.stats, "append enumeration counter, wall time and worker count");
  sub->add_option("--write-cache", cfg.write_cache, "also save the loaded graph as a binary cache");
  if (!engine_flags) return;
  sub->add_option("--threads", cfg.threads, "worker count (default: GPM_THREADS, else all cores)")
      ->check(CLI::PositiveNumber);
  sub->add_option("--orientation", cfg.orientation, "clique orientation")
      ->check(CLI::IsMember({"degree", "core", "none", "auto"}));
  sub->add_option("--level", cfg.level, "hi: high-level API; lo: low-level preset")
      ->check(CLI::IsMember({"hi", "lo"}));
  sub->add_flag("--local-graph", cfg.local_graph, "same as --level lo (clique)");
  sub->add_flag("--local-count", cfg.local_count, "same as --level lo (motif)");
  sub->add_flag("--no-sb", cfg.no_sb, "disable symmetry breaking (refused for counting)");
  sub->add_flag("--no-mnc", cfg.no_mnc, "disable connectivity memoization");
  sub->add_flag("--no-df", cfg.no_df, "disable degree filtering");
  sub->add_flag("--no-mo", cfg.no_mo, "disable matching order");
  sub->add_option("--list", cfg.list_path, "write every embedding to this file");
  sub->add_option("--mem-cap", cfg.mem_cap, "embedding-list budget for fsm, e.g. 512M");
}

int dispatch(const std::string& command, const RunConfig& cfg, std::ostream& out) {
  if (cfg.local_graph && command != "clique") throw UsageError("--local-graph is available for clique only");
  if (cfg.local_count && command != "motif") throw UsageError("--local-count is available for motif only");
  const bool low = cfg.level == "lo" || cfg.local_graph || cfg.local_count;
  if (low && command != "clique" && command != "motif")
    throw UsageError("--level lo is available for clique and motif only");
  if (cfg.no_sb && command.rfind("oracle", 0) != 0)
    throw UsageError("--no-sb changes counts (every automorphic copy would be reported); refused");

  std::vector<Record> records;
  Stats stats;
  const auto t0 = std::chrono::steady_clock::now();
  const Graph g = load_graph(cfg);
  const EngineOptions opts = engine_options(cfg);
  ListingSink sink(cfg.list_path);

  if (command == "tc") {
    collect(with_sink(g, apps::tc_spec(), opts, sink.callback()), records, stats);
  } else if (command == "clique") {
    if (cfg.k < 2) throw UsageError("clique: -k >= 2 required");
    if (low) {
      if (cfg.k < 3) throw UsageError("clique --level lo: -k >= 3 required");
      if (opts.orientation == OrientationChoice::none)
        throw UsageError("clique --level lo needs an orientation");
      const auto dag =
          orient(g, opts.orientation == OrientationChoice::core ? Orientation::core : Orientation::degree);
      ProblemSpec spec = apps::kcl_lg_spec(cfg.k);
      if (auto cb = sink.callback()) {
        spec.listing = true;
        spec.process = cb;
      }
      collect(mine(g, dag, spec, opts), records, stats);
    } else {
      collect(with_sink(g, apps::kcl_spec(cfg.k), opts, sink.callback()), records, stats);
    }
  } else if (command == "match") {
    if (cfg.pattern.empty()) throw UsageError("match: --pattern required");
    const Pattern p = load_pattern(cfg.pattern, &g);
    ProblemSpec spec = apps::sl_spec(p);
    spec.vertex_induced = cfg.vertex_induced;
    collect(with_sink(g, spec, opts, sink.callback()), records, stats);
  } else if (command == "motif") {
    if (cfg.k < 3 || cfg.k > 5) throw UsageError("motif: -k must be 3, 4 or 5");
    if (low && cfg.k == 5) throw UsageError("motif --level lo: -k must be 3 or 4");
    if (!cfg.list_path.empty() && low) throw UsageError("motif --level lo does not enumerate embeddings");
    MiningResult r;
    if (!cfg.list_path.empty()) {
      const Graph plain = g.labeled() ? apps::unlabeled(g) : g;
      r = with_sink(plain, apps::motif_spec(cfg.k), opts, sink.callback());
      for (const auto& p : all_patterns(cfg.k)) r.supports.touch(canonical_code(p));
    } else {
      r = apps::motif_count(g, cfg.k, low ? apps::Level::lo : apps::Level::hi, opts);
    }
    // motif order: edge count, then code
    for (const auto& p : all_patterns(cfg.k)) {
      const auto key = canonical_code(p);
      records.push_back({pattern_label(key), r.supports.at(key)});
    }
    stats.enumerated = r.enumerated;
    stats.wall_ms = r.wall_ms;
    stats.workers = r.workers;
  } else if (command == "fsm") {
    if (!g.labeled()) throw UsageError("fsm: a labeled graph is required (--labels)");
    if (cfg.k < 1 || cfg.k > kMaxDfsCodeEdges)
      throw UsageError("fsm: -k must be in [1, " + std::to_string(kMaxDfsCodeEdges) + "]");
    if (cfg.min_sup < 1) throw UsageError("fsm: --minsup >= 1 required");
    const FsmResult r = mine_fsm(g, cfg.k, static_cast<Support>(cfg.min_sup), opts);
    for (const auto& p : r.patterns) records.push_back({render(p.code, &g), p.support});
    stats.enumerated = r.enumerated;
    stats.wall_ms = r.wall_ms;
    stats.workers = r.workers;
  } else if (command == "oracle-motif") {
    if (cfg.k < 1 || cfg.k > oracle::kMaxSubsetSize) throw UsageError("oracle motif: -k must be in [1, 5]");
    const Graph plain = g.labeled() ? apps::unlabeled(g) : g;
    for (const auto& [key, s] : oracle::count_vertex_induced(plain, cfg.k)) records.push_back({pattern_label(key), s});
  } else if (command == "oracle-match") {
    if (cfg.pattern.empty()) throw UsageError("oracle match: --pattern required");
    const Pattern p = load_pattern(cfg.pattern, &g);
    records.push_back({pattern_label(canonical_code(p)), oracle::count_edge_induced(g, p)});
  } else if (command == "oracle-mni") {
    if (cfg.pattern.empty()) throw UsageError("oracle mni: --pattern required");
    const Pattern p = load_pattern(cfg.pattern, &g);
    records.push_back({pattern_label(canonical_code(p)), oracle::mni_oracle(g, p)});
  }
  if (command.rfind("oracle", 0) == 0)
    stats.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  write_output(cfg, records, stats, out);
  return kOk;
}

}  // namespace

std::string pattern_label(const std::string& key) {
  if (key.rfind("clique-", 0) == 0) return key.substr(7) + "-clique";
  const std::string name = motif_name(key);
  return name.empty() ? to_hex(key) : name;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph pattern mining: triangles, cliques, subgraph listing, motifs and frequent subgraphs"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* tc = app.add_subcommand("tc", "count triangles");
  add_common(tc, cfg, true);

  auto* clique = app.add_subcommand("clique", "count k-cliques");
  add_common(clique, cfg, true);
  clique->add_option("-k", cfg.k, "clique size")->required();

  auto* match = app.add_subcommand("match", "list or count one pattern (edge-induced by default)");
  add_common(match, cfg, true);
  match->add_option("--pattern", cfg.pattern, "pattern file")->required();
  match->add_flag("--vertex-induced", cfg.vertex_induced, "match induced subgraphs instead");

  auto* motif = app.add_subcommand("motif", "count all connected k-vertex induced motifs");
  add_common(motif, cfg, true);
  motif->add_option("-k", cfg.k, "motif size (3-5)")->required();

  auto* fsm = app.add_subcommand("fsm", "frequent subgraph mining with MNI support >= minsup");
  add_common(fsm, cfg, true);
  fsm->add_option("-k", cfg.k, "maximum pattern edges")->required();
  fsm->add_option("--minsup", cfg.min_sup, "minimum MNI support (inclusive)")->required();

  auto* orc = app.add_subcommand("oracle", "brute-force reference counts (small graphs only)");
  orc->require_subcommand(1);
  auto* orc_motif = orc->add_subcommand("motif", "vertex-induced motif counts");
  add_common(orc_motif, cfg, false);
  orc_motif->add_option("-k", cfg.k, "subset size (1-5)")->required();
  auto* orc_match = orc->add_subcommand("match", "edge-induced pattern count");
  add_common(orc_match, cfg, false);
  orc_match->add_option("--pattern", cfg.pattern, "pattern file")->required();
  auto* orc_mni = orc->add_subcommand("mni", "MNI support of a labeled pattern");
  add_common(orc_mni, cfg, false);
  orc_mni->add_option("--pattern", cfg.pattern, "pattern file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  std::string command;
  for (auto* sub : {tc, clique, match, motif, fsm})
    if (sub->parsed()) command = sub->get_name();
  if (orc_motif->parsed()) command = "oracle-motif";
  if (orc_match->parsed()) command = "oracle-match";
  if (orc_mni->parsed()) command = "oracle-mni";

  try {
    return dispatch(command, cfg, out);
  } catch (const UsageError& e) {
    err << "gpm: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceError& e) {
    err << "gpm: " << e.what() << '\n';
    return kResource;
  } catch (const ParseError& e) {
    err << "gpm: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "gpm: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "gpm: " << e.what() << '\n';
    return kFailure;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"gpm"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace gpm::cli
