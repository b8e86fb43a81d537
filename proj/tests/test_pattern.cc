#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "gpm/pattern.h"
#include "test_util.h"

using namespace gpm;

namespace {

Pattern permuted(const Pattern& p, const std::vector<int>& perm) {
  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : p.edges()) edges.emplace_back(perm[a], perm[b]);
  std::vector<label_t> labels;
  if (p.labeled()) {
    labels.resize(p.size());
    for (int i = 0; i < p.size(); ++i) labels[perm[i]] = p.label(i);
  }
  return Pattern(p.size(), edges, labels);
}

bool brute_isomorphic(const Pattern& a, const Pattern& b) {
  if (a.size() != b.size() || a.num_edges() != b.num_edges()) return false;
  std::vector<int> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < a.size() && ok; ++i) {
      if (a.labeled() && a.label(i) != b.label(perm[i])) ok = false;
      for (int j = i + 1; j < a.size() && ok; ++j)
        if (a.has_edge(i, j) != b.has_edge(perm[i], perm[j])) ok = false;
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

Pattern random_connected(int k, double p, int labels, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::uniform_int_distribution<label_t> lab(0, labels > 0 ? labels - 1 : 0);
  while (true) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (coin(rng)) edges.emplace_back(i, j);
    std::vector<label_t> ls;
    if (labels > 0)
      for (int i = 0; i < k; ++i) ls.push_back(lab(rng));
    Pattern q(k, edges, ls);
    if (q.connected()) return q;
  }
}

}  // namespace

TEST_CASE("pattern construction") {
  const Pattern d = Pattern::diamond();
  CHECK(d.size() == 4);
  CHECK(d.num_edges() == 5);
  CHECK(d.degree(0) == 3);
  CHECK(d.degree(2) == 2);
  CHECK(d.min_degree() == 2);
  CHECK(d.connected());
  CHECK_FALSE(Pattern(3, {{0, 1}}).connected());
  CHECK_THROWS_AS(Pattern(2, {{0, 0}}), PatternError);
  CHECK_THROWS_AS(Pattern(2, {{0, 2}}), PatternError);
  CHECK_THROWS_AS(Pattern(2, {{0, 1}}, {1}), PatternError);
  CHECK(Pattern::star(3).degree(0) == 3);
  CHECK(Pattern::cycle(4).num_edges() == 4);
  CHECK(Pattern::path(4).num_edges() == 3);
  CHECK(Pattern::tailed_triangle().num_edges() == 4);
}

TEST_CASE("induced sub-pattern") {
  const std::vector<int> v{0, 2, 3};
  const Pattern sub = Pattern::diamond().induced(v);
  CHECK(sub.size() == 3);
  CHECK(sub.num_edges() == 2);
  CHECK(canonical_code(sub) == canonical_code(Pattern::wedge()));
}

TEST_CASE("canonical code examples") {
  const Pattern t1(3, {{0, 1}, {1, 2}, {0, 2}});
  const Pattern t2(3, {{2, 1}, {0, 2}, {1, 0}});
  CHECK(canonical_code(t1) == canonical_code(t2));
  CHECK(canonical_code(Pattern::wedge()) != canonical_code(Pattern::triangle()));
  CHECK(canonical_code(Pattern::diamond()) != canonical_code(Pattern::cycle(4)));
  CHECK(canonical_code(Pattern(3, {{0, 1}, {1, 2}}, {0, 1, 0})) != canonical_code(Pattern(3, {{0, 1}, {1, 2}}, {1, 0, 1})));
  CHECK_THROWS_AS(canonical_code(Pattern::clique(9)), PatternError);
}

TEST_CASE("canonical code equals brute-force isomorphism on random pairs") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 300; ++iter) {
    const int k = 2 + static_cast<int>(rng() % 5);
    const int labels = iter % 3 == 0 ? 2 : 0;
    const Pattern a = random_connected(k, 0.5, labels, rng);
    const Pattern b = random_connected(k, 0.5, labels, rng);
    CHECK((canonical_code(a) == canonical_code(b)) == brute_isomorphic(a, b));
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(canonical_code(permuted(a, perm)) == canonical_code(a));
  }
}

TEST_CASE("codes decode and render as hex") {
  for (const auto& p : all_patterns(4)) {
    const PatternKey key = canonical_code(p);
    CHECK(canonical_code(decode_code(key)) == key);
    CHECK(from_hex(to_hex(key)) == key);
  }
  const Pattern lab(3, {{0, 1}, {1, 2}}, {2, 0, 1});
  CHECK(canonical_code(decode_code(canonical_code(lab))) == canonical_code(lab));
  CHECK_THROWS_AS(from_hex("zz"), PatternError);
  CHECK_THROWS_AS(from_hex("abc"), PatternError);
}

TEST_CASE("automorphisms and orbits") {
  CHECK(automorphisms(Pattern::triangle()).size() == 6);
  CHECK(automorphisms(Pattern::diamond()).size() == 4);
  CHECK(automorphisms(Pattern::cycle(4)).size() == 8);
  CHECK(automorphisms(Pattern::path(3)).size() == 2);
  CHECK(automorphisms(Pattern::star(3)).size() == 6);
  CHECK(automorphisms(Pattern::clique(5)).size() == 120);
  const auto id = automorphisms(Pattern::diamond()).front();
  CHECK(id == std::vector<int>{0, 1, 2, 3});

  CHECK(automorphism_orbits(Pattern::triangle()) == std::vector<int>{0, 0, 0});
  CHECK(automorphism_orbits(Pattern::diamond()) == std::vector<int>{0, 0, 2, 2});
  CHECK(automorphism_orbits(Pattern::cycle(4)) == std::vector<int>{0, 0, 0, 0});
  CHECK(automorphism_orbits(Pattern::path(4)) == std::vector<int>{0, 1, 1, 0});
  // labels split orbits
  CHECK(automorphism_orbits(Pattern(3, {{0, 1}, {1, 2}, {0, 2}}, {0, 0, 1})) == std::vector<int>{0, 0, 2});
}

TEST_CASE("is_clique") {
  CHECK(is_clique(Pattern::triangle()));
  CHECK_FALSE(is_clique(Pattern::diamond()));
  CHECK(is_clique(Pattern::clique(5)));
}

TEST_CASE("symmetry orders") {
  const std::vector<int> id3{0, 1, 2};
  CHECK(symmetry_orders(Pattern::triangle(), id3).constraints == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  const std::vector<int> id2{0, 1};
  CHECK(symmetry_orders(Pattern::path(2), id2).constraints == std::vector<std::pair<int, int>>{{0, 1}});
  const std::vector<int> id4{0, 1, 2, 3};
  // chord ends first, then the two poles
  CHECK(symmetry_orders(Pattern::diamond(), id4).constraints == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});
  CHECK(symmetry_orders(Pattern::clique(4), id4).constraints ==
        std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
  // wedge matched center first: only the endpoints are interchangeable
  const std::vector<int> center_first{1, 0, 2};
  CHECK(symmetry_orders(Pattern::wedge(), center_first).constraints == std::vector<std::pair<int, int>>{{1, 2}});
}

TEST_CASE("symmetry orders admit one sequence per automorphism class") {
  // each automorphism of p maps a matched sequence to another; exactly one of
  // them must satisfy the constraints when the matched IDs are all distinct
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 60; ++iter) {
    const int k = 3 + static_cast<int>(rng() % 3);
    const Pattern p = random_connected(k, 0.6, 0, rng);
    const MatchingOrder mo = matching_order(p);
    const auto autos = automorphisms(p);
    std::vector<int> ids(k);
    std::iota(ids.begin(), ids.end(), 0);
    std::shuffle(ids.begin(), ids.end(), rng);  // ids[v] = graph ID matched to pattern vertex v
    int accepted = 0;
    for (const auto& a : autos) {
      bool ok = true;
      for (auto [x, y] : mo.orders.constraints)
        if (ids[a[mo.vertices[x]]] >= ids[a[mo.vertices[y]]]) ok = false;
      accepted += ok;
    }
    CHECK(accepted == 1);
  }
}

TEST_CASE("matching order") {
  SUBCASE("clique levels connect to every earlier level") {
    const auto mo = matching_order(Pattern::clique(4));
    for (int l = 0; l < 4; ++l) CHECK(mo.connected[l] == (1u << l) - 1);
    CHECK(mo.disconnected[3] == 0);
  }
  SUBCASE("diamond starts with the symmetric chord pair and a triangle") {
    const auto mo = matching_order(Pattern::diamond());
    const Pattern d = Pattern::diamond();
    CHECK(d.degree(mo.vertices[0]) == 3);
    CHECK(d.degree(mo.vertices[1]) == 3);
    CHECK(mo.connected[2] == 0b11);
    CHECK(mo.orders.constraints.front() == std::pair<int, int>{0, 1});
    CHECK(mo.disconnected[3] == 0b100);
    CHECK(mo.smaller[1] == 0b1);
  }
  SUBCASE("deterministic") {
    for (const auto& p : all_patterns(5)) {
      const auto a = matching_order(p);
      const auto b = matching_order(p);
      CHECK(a.vertices == b.vertices);
      CHECK(a.orders == b.orders);
    }
  }
  SUBCASE("every later position has an earlier neighbor") {
    for (const auto& p : all_patterns(5)) {
      const auto mo = matching_order(p);
      for (int l = 1; l < mo.size(); ++l) CHECK(mo.connected[l] != 0);
      for (int l = 0; l < mo.size(); ++l) CHECK((mo.connected[l] & mo.disconnected[l]) == 0);
      for (int l = 0; l < mo.size(); ++l) CHECK(mo.degree[l] == p.degree(mo.vertices[l]));
    }
  }
  SUBCASE("caller-supplied order rejects disconnected prefixes") {
    CHECK_THROWS_AS(make_matching_order(Pattern::path(3), {0, 2, 1}), PatternError);
    CHECK(make_matching_order(Pattern::path(3), {1, 0, 2}).orders.constraints ==
          std::vector<std::pair<int, int>>{{1, 2}});
  }
}

TEST_CASE("all_patterns sizes and uniqueness") {
  CHECK(all_patterns(3).size() == 2);
  CHECK(all_patterns(4).size() == 6);
  const auto five = all_patterns(5);
  CHECK(five.size() == 21);
  std::set<PatternKey> keys;
  for (const auto& p : five) {
    CHECK(p.connected());
    keys.insert(canonical_code(p));
  }
  CHECK(keys.size() == 21);
  CHECK_THROWS_AS(all_patterns(2), PatternError);
  CHECK_THROWS_AS(all_patterns(6), PatternError);
}

TEST_CASE("five-vertex connected graphs counted independently") {
  // all 2^10 graphs on 5 labeled vertices, connected ones, by brute-force classes
  std::vector<Pattern> reps;
  for (int mask = 0; mask < 1024; ++mask) {
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j, ++bit)
        if ((mask >> bit) & 1) edges.emplace_back(i, j);
    Pattern p(5, edges);
    if (!p.connected()) continue;
    bool seen = false;
    for (const auto& r : reps)
      if (brute_isomorphic(r, p)) seen = true;
    if (!seen) reps.push_back(p);
  }
  CHECK(reps.size() == 21);
}

TEST_CASE("motif names") {
  CHECK(motif_name(canonical_code(Pattern::triangle())) == "triangle");
  CHECK(motif_name(canonical_code(Pattern::wedge())) == "wedge");
  CHECK(motif_name(canonical_code(Pattern::star(3))) == "3-star");
  CHECK(motif_name(canonical_code(Pattern::clique(6))) == "6-clique");
  CHECK(motif_name(canonical_code(Pattern::cycle(5))).empty());
}

TEST_CASE("pattern files") {
  test::TempDir dir;
  SUBCASE("unlabeled triangle") {
    const Pattern p = load_pattern(dir.write("t.pat", "0 1\n0 2\n1 2\n"));
    CHECK(canonical_code(p) == canonical_code(Pattern::triangle()));
  }
  SUBCASE("labels resolved through the graph dictionary") {
    const Graph g = load_edge_list(dir.write("g.el", "0 1\n"), dir.write("g.lbl", "0 X\n1 Y\n"));
    const Pattern p = load_pattern(dir.write("l.pat", "0 1\nv 0 Y\nv 1 X\n"), &g);
    REQUIRE(p.labeled());
    CHECK(p.label(0) == 1);
    CHECK(p.label(1) == 0);
  }
  SUBCASE("disconnected pattern rejected") {
    CHECK_THROWS(load_pattern(dir.write("d.pat", "0 1\n2 3\n")));
  }
}
