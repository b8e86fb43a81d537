#include <doctest.h>

#include <json.hpp>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "cli.h"
#include "gpm/pattern.h"
#include "test_util.h"

using gpm::cli::run;

namespace {

struct Output {
  int code;
  std::string out, err;
};

Output gpm_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string edge_text(const gpm::Graph& g) {
  std::string s;
  for (const auto& e : g.edge_list()) s += std::to_string(e.src) + " " + std::to_string(e.dst) + "\n";
  return s;
}

// pattern -> support from JSON output, skipping the stats record
std::map<std::string, std::uint64_t> records(const std::string& json) {
  std::map<std::string, std::uint64_t> out;
  for (const auto& r : nlohmann::json::parse(json))
    if (r.contains("pattern")) out[r["pattern"].get<std::string>()] = r["support"].get<std::uint64_t>();
  return out;
}

}  // namespace

TEST_CASE("cli examples") {
  test::TempDir dir;
  const auto k4 = dir.write("k4.el", edge_text(gpm::gen::complete(4)));
  const auto tc = gpm_run({"tc", k4.string(), "--format", "tsv"});
  CHECK(tc.code == 0);
  CHECK(tc.out == "triangle\t4\n");

  const auto diamond = dir.write("diamond.el", edge_text(test::diamond_graph()));
  const auto mc = gpm_run({"motif", "-k", "3", diamond.string(), "--level", "lo"});
  REQUIRE(mc.code == 0);
  CHECK(records(mc.out) == std::map<std::string, std::uint64_t>{{"wedge", 2}, {"triangle", 2}});
  const auto arr = nlohmann::json::parse(mc.out);
  CHECK(arr[0]["pattern"] == "wedge");  // motif order: fewer edges first

  const auto two = dir.write("two.el", "0 1\n2 3\n");
  const auto lbl = dir.write("two.lbl", "0 A\n1 B\n2 A\n3 B\n");
  const auto fsm = gpm_run({"fsm", "-k", "1", two.string(), "--labels", lbl.string(), "--minsup", "2"});
  REQUIRE(fsm.code == 0);
  const auto fr = records(fsm.out);
  REQUIRE(fr.size() == 1);
  CHECK(fr.begin()->first == "(0,1,A,B)");
  CHECK(fr.begin()->second == 2);
}

TEST_CASE("cli counts agree across levels and toggles") {
  test::TempDir dir;
  const auto g = dir.write("g.el", edge_text(gpm::gen::clustered(300, 12, 0.6, 2.0, 4)));
  for (const std::string k : {"3", "4"}) {
    const auto hi = gpm_run({"motif", "-k", k, g.string()});
    const auto lo = gpm_run({"motif", "-k", k, g.string(), "--level", "lo"});
    const auto lc = gpm_run({"motif", "-k", k, g.string(), "--local-count"});
    CHECK(hi.code == 0);
    CHECK(records(hi.out) == records(lo.out));
    CHECK(records(hi.out) == records(lc.out));
  }
  for (const std::string k : {"4", "5", "6"}) {
    const auto hi = gpm_run({"clique", "-k", k, g.string()});
    CHECK(records(hi.out) == records(gpm_run({"clique", "-k", k, g.string(), "--level", "lo"}).out));
    CHECK(records(hi.out) == records(gpm_run({"clique", "-k", k, g.string(), "--local-graph"}).out));
    CHECK(records(hi.out) == records(gpm_run({"clique", "-k", k, g.string(), "--orientation", "core"}).out));
    CHECK(records(hi.out) == records(gpm_run({"clique", "-k", k, g.string(), "--orientation", "none"}).out));
  }
  const auto base = records(gpm_run({"motif", "-k", "4", g.string()}).out);
  for (const std::string flag : {"--no-mnc", "--no-df", "--no-mo"})
    CHECK(records(gpm_run({"motif", "-k", "4", g.string(), flag}).out) == base);
  const auto pat = dir.write("diamond.pat", "0 1\n0 2\n1 2\n0 3\n1 3\n");
  const auto sl = records(gpm_run({"match", g.string(), "--pattern", pat.string()}).out);
  for (const std::string flag : {"--no-mnc", "--no-df", "--no-mo"})
    CHECK(records(gpm_run({"match", g.string(), "--pattern", pat.string(), flag}).out) == sl);
  const auto threaded = gpm_run({"match", g.string(), "--pattern", pat.string(), "--threads", "3"});
  CHECK(records(threaded.out) == sl);
}

TEST_CASE("cli stats") {
  test::TempDir dir;
  const auto g = dir.write("g.el", edge_text(gpm::gen::erdos_renyi(60, 0.1, 2)));
  const auto r = gpm_run({"motif", "-k", "3", g.string(), "--stats", "--threads", "2"});
  REQUIRE(r.code == 0);
  const auto arr = nlohmann::json::parse(r.out);
  const auto& last = arr.back();
  CHECK(last.contains("enumerated_embeddings"));
  CHECK(last["workers"] == 2);
  CHECK(last["wall_ms"].get<double>() >= 0);
  const auto tsv = gpm_run({"tc", g.string(), "--stats", "--format", "tsv"});
  CHECK(tsv.out.find("# enumerated_embeddings\t") != std::string::npos);
  CHECK(tsv.out.find("# workers\t") != std::string::npos);
}

TEST_CASE("cli listing and cache") {
  test::TempDir dir;
  const auto k5 = dir.write("k5.el", edge_text(gpm::gen::complete(5)));
  const auto list = dir.path("list.txt");
  const auto cache = dir.path("k5.bin");
  const auto r = gpm_run({"clique", "-k", "4", k5.string(), "--list", list.string(), "--write-cache", cache.string()});
  REQUIRE(r.code == 0);
  std::ifstream in(list);
  std::set<std::set<int>> seen;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::set<int> vs;
    int v;
    while (ls >> v) vs.insert(v);
    CHECK(vs.size() == 4);
    seen.insert(vs);
  }
  CHECK(seen.size() == 5);
  CHECK(gpm::is_binary_cache(cache));
  CHECK(records(gpm_run({"clique", "-k", "4", cache.string()}).out) == records(r.out));

  const auto motif_list = dir.path("m.txt");
  const auto m = gpm_run({"motif", "-k", "3", k5.string(), "--list", motif_list.string()});
  CHECK(m.code == 0);
  CHECK(records(m.out).at("triangle") == 10);
}

TEST_CASE("cli usage errors") {
  test::TempDir dir;
  const auto g = dir.write("g.el", "0 1\n1 2\n2 0\n");
  CHECK(gpm_run({}).code == 2);
  CHECK(gpm_run({"bogus"}).code == 2);
  CHECK(gpm_run({"tc"}).code == 2);
  CHECK(gpm_run({"tc", g.string(), "--no-sb"}).code == 2);
  CHECK(gpm_run({"tc", g.string(), "--level", "lo"}).code == 2);
  CHECK(gpm_run({"tc", g.string(), "--local-graph"}).code == 2);
  CHECK(gpm_run({"clique", "-k", "4", g.string(), "--local-count"}).code == 2);
  CHECK(gpm_run({"motif", "-k", "5", g.string(), "--level", "lo"}).code == 2);
  CHECK(gpm_run({"motif", "-k", "6", g.string()}).code == 2);
  CHECK(gpm_run({"clique", "-k", "4", g.string(), "--level", "lo", "--orientation", "none"}).code == 2);
  CHECK(gpm_run({"tc", g.string(), "--format", "xml"}).code == 2);
  CHECK(gpm_run({"tc", dir.path("missing.el").string()}).code == 2);
  CHECK(gpm_run({"tc", dir.write("bad.el", "0 x\n").string()}).code == 2);
  CHECK(gpm_run({"fsm", "-k", "2", g.string(), "--minsup", "1"}).code == 2);  // unlabeled
  const auto lbl = dir.write("g.lbl", "0 A\n1 A\n2 A\n");
  CHECK(gpm_run({"fsm", "-k", "0", g.string(), "--labels", lbl.string(), "--minsup", "1"}).code == 2);
  CHECK(gpm_run({"fsm", "-k", "2", g.string(), "--labels", lbl.string(), "--minsup", "0"}).code == 2);
  CHECK(gpm_run({"fsm", "-k", "2", g.string(), "--labels", lbl.string(), "--minsup", "1", "--mem-cap", "1Q"})
            .code == 2);
  const auto usage = gpm_run({"tc", g.string(), "--no-sb"});
  CHECK_FALSE(usage.err.empty());
  CHECK(gpm_run({"--help"}).code == 0);
}

TEST_CASE("cli resource abort") {
  test::TempDir dir;
  const auto g = gpm::gen::erdos_renyi(200, 0.1, 3);
  const auto el = dir.write("g.el", edge_text(g));
  std::string labels;
  for (gpm::vid_t v = 0; v < g.num_vertices(); ++v) labels += std::to_string(v) + (v % 2 ? " A\n" : " B\n");
  const auto lbl = dir.write("g.lbl", labels);
  const auto r = gpm_run({"fsm", "-k", "3", el.string(), "--labels", lbl.string(), "--minsup", "1", "--mem-cap", "1K"});
  CHECK(r.code == 3);
  CHECK(r.err.find("memory cap") != std::string::npos);
}

TEST_CASE("cli oracle subcommands") {
  test::TempDir dir;
  const auto k4 = dir.write("k4.el", edge_text(gpm::gen::complete(4)));
  const auto m = gpm_run({"oracle", "motif", "-k", "3", k4.string()});
  REQUIRE(m.code == 0);
  CHECK(records(m.out).at("triangle") == 4);
  const auto pat = dir.write("c4.pat", "0 1\n1 2\n2 3\n3 0\n");
  const auto sl = gpm_run({"oracle", "match", k4.string(), "--pattern", pat.string(), "--format", "tsv"});
  CHECK(sl.out == "4-cycle\t3\n");
  const auto tri = dir.write("tri.el", "0 1\n1 2\n2 0\n");
  const auto lbl = dir.write("tri.lbl", "0 A\n1 A\n2 A\n");
  const auto edge = dir.write("aa.pat", "0 1\nv 0 A\nv 1 A\n");
  const auto mni = gpm_run({"oracle", "mni", tri.string(), "--labels", lbl.string(), "--pattern", edge.string()});
  REQUIRE(mni.code == 0);
  CHECK(records(mni.out).begin()->second == 3);
  CHECK(gpm_run({"oracle"}).code == 2);
}

TEST_CASE("pattern labels") {
  CHECK(gpm::cli::pattern_label(gpm::canonical_code(gpm::Pattern::diamond())) == "diamond");
  CHECK(gpm::cli::pattern_label("clique-12") == "12-clique");
  const gpm::Pattern odd(3, {{0, 1}, {1, 2}}, {0, 1, 0});
  CHECK(gpm::cli::pattern_label(gpm::canonical_code(odd)) == gpm::to_hex(gpm::canonical_code(odd)));
}
