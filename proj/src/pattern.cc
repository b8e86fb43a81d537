#include "gpm/pattern.h"

#include <algorithm>
#include <bit>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

namespace gpm {

Pattern::Pattern(int k, std::span<const std::pair<int, int>> edges, std::vector<label_t> labels)
    : k_(k), labels_(std::move(labels)) {
  if (k < 0 || k > kMaxPatternSize)
    throw PatternError("pattern size " + std::to_string(k) + " outside [0, " +
                       std::to_string(kMaxPatternSize) + "]");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != k)
    throw PatternError("pattern label count differs from vertex count");
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= k || b >= k) throw PatternError("pattern edge endpoint out of range");
    if (a == b) throw PatternError("pattern self-loop");
    adj_[a] |= 1u << b;
    adj_[b] |= 1u << a;
  }
}

Pattern Pattern::clique(int k) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) e.emplace_back(i, j);
  return Pattern(k, e);
}

Pattern Pattern::cycle(int k) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
  return Pattern(k, e);
}

Pattern Pattern::path(int k) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
  return Pattern(k, e);
}

Pattern Pattern::star(int leaves) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Pattern(leaves + 1, e);
}

// 0 and 1 are the chord ends
Pattern Pattern::diamond() { return Pattern(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}}); }

Pattern Pattern::tailed_triangle() { return Pattern(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}}); }

int Pattern::num_edges() const {
  int twice = 0;
  for (int i = 0; i < k_; ++i) twice += std::popcount(adj_[i]);
  return twice / 2;
}

int Pattern::degree(int i) const { return std::popcount(adj_[i]); }

int Pattern::min_degree() const {
  int d = k_ > 0 ? kMaxPatternSize : 0;
  for (int i = 0; i < k_; ++i) d = std::min(d, degree(i));
  return d;
}

std::vector<std::pair<int, int>> Pattern::edges() const {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < k_; ++i)
    for (int j = i + 1; j < k_; ++j)
      if (has_edge(i, j)) e.emplace_back(i, j);
  return e;
}

bool Pattern::connected() const {
  if (k_ <= 1) return true;
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (int i = 0; i < k_; ++i)
      if ((frontier >> i) & 1u) next |= adj_[i];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (k_ == 32 ? ~0u : (1u << k_) - 1);
}

Pattern Pattern::induced(std::span<const int> vertices) const {
  std::vector<std::pair<int, int>> e;
  std::vector<label_t> l;
  const int m = static_cast<int>(vertices.size());
  for (int i = 0; i < m; ++i) {
    if (labeled()) l.push_back(labels_[vertices[i]]);
    for (int j = i + 1; j < m; ++j)
      if (has_edge(vertices[i], vertices[j])) e.emplace_back(i, j);
  }
  return Pattern(m, e, std::move(l));
}

namespace {

std::size_t adjacency_bytes(int k) { return (static_cast<std::size_t>(k * (k - 1) / 2) + 7) / 8; }

PatternKey encode(const Pattern& p, std::span<const int> perm) {
  const int k = p.size();
  PatternKey out;
  out.reserve(2 + (p.labeled() ? 4 * k : 0) + adjacency_bytes(k));
  out.push_back(static_cast<char>(k));
  out.push_back(static_cast<char>(p.labeled() ? 1 : 0));
  if (p.labeled())
    for (int i = 0; i < k; ++i) {
      const label_t l = p.label(perm[i]);
      for (int s = 24; s >= 0; s -= 8) out.push_back(static_cast<char>((l >> s) & 0xFF));
    }
  unsigned char byte = 0;
  int nbits = 0;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      byte = static_cast<unsigned char>((byte << 1) | (p.has_edge(perm[i], perm[j]) ? 1 : 0));
      if (++nbits == 8) {
        out.push_back(static_cast<char>(byte));
        byte = 0;
        nbits = 0;
      }
    }
  if (nbits) out.push_back(static_cast<char>(byte << (8 - nbits)));
  return out;
}

bool compare_bytes_less(const PatternKey& a, const PatternKey& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](char x, char y) {
                                        return static_cast<unsigned char>(x) <
                                               static_cast<unsigned char>(y);
                                      });
}

}  // namespace

PatternKey canonical_code(const Pattern& p) {
  const int k = p.size();
  if (k > kMaxCanonicalSize)
    throw PatternError("canonical_code supports at most " + std::to_string(kMaxCanonicalSize) +
                       " vertices, got " + std::to_string(k));
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  if (p.labeled())  // the minimum code lists labels in ascending order
    std::sort(perm.begin(), perm.end(), [&](int a, int b) {
      return std::pair(p.label(a), a) < std::pair(p.label(b), b);
    });
  else
    std::sort(perm.begin(), perm.end());
  PatternKey best = encode(p, perm);
  auto by_label = [&](int a, int b) {
    return p.labeled() ? std::pair(p.label(a), a) < std::pair(p.label(b), b) : a < b;
  };
  while (std::next_permutation(perm.begin(), perm.end(), by_label)) {
    if (p.labeled()) {
      bool sorted = true;
      for (int i = 1; i < k && sorted; ++i) sorted = p.label(perm[i - 1]) <= p.label(perm[i]);
      if (!sorted) continue;
    }
    PatternKey cand = encode(p, perm);
    if (compare_bytes_less(cand, best)) best = std::move(cand);
  }
  return best;
}

Pattern decode_code(const PatternKey& key) {
  if (key.size() < 2) throw PatternError("pattern key too short");
  const int k = static_cast<unsigned char>(key[0]);
  const bool labeled = key[1] & 1;
  const std::size_t label_bytes = labeled ? 4 * static_cast<std::size_t>(k) : 0;
  if (k > kMaxPatternSize || key.size() != 2 + label_bytes + adjacency_bytes(k))
    throw PatternError("malformed pattern key");
  std::vector<label_t> labels;
  std::size_t pos = 2;
  for (int i = 0; labeled && i < k; ++i) {
    label_t l = 0;
    for (int b = 0; b < 4; ++b) l = (l << 8) | static_cast<unsigned char>(key[pos++]);
    labels.push_back(l);
  }
  std::vector<std::pair<int, int>> edges;
  int bit = 0;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j, ++bit) {
      const auto byte = static_cast<unsigned char>(key[pos + bit / 8]);
      if ((byte >> (7 - bit % 8)) & 1u) edges.emplace_back(i, j);
    }
  return Pattern(k, edges, std::move(labels));
}

std::string to_hex(const PatternKey& key) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  for (char c : key) {
    const auto b = static_cast<unsigned char>(c);
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xF]);
  }
  return out;
}

PatternKey from_hex(const std::string& hex) {
  if (hex.size() % 2) throw PatternError("odd-length hex key");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw PatternError("invalid hex digit");
  };
  PatternKey out;
  for (std::size_t i = 0; i < hex.size(); i += 2)
    out.push_back(static_cast<char>(nibble(hex[i]) << 4 | nibble(hex[i + 1])));
  return out;
}

std::vector<std::vector<int>> automorphisms(const Pattern& p) {
  const int k = p.size();
  if (k > kMaxCanonicalSize)
    throw PatternError("automorphism search supports at most " + std::to_string(kMaxCanonicalSize) +
                       " vertices");
  std::vector<std::vector<int>> result;
  std::vector<int> image(k, -1);
  std::uint32_t used = 0;
  auto rec = [&](auto&& self, int i) -> void {
    if (i == k) {
      result.push_back(image);
      return;
    }
    for (int c = 0; c < k; ++c) {
      if ((used >> c) & 1u) continue;
      if (p.degree(c) != p.degree(i)) continue;
      if (p.labeled() && p.label(c) != p.label(i)) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = p.has_edge(i, j) == p.has_edge(c, image[j]);
      if (!ok) continue;
      image[i] = c;
      used |= 1u << c;
      self(self, i + 1);
      used &= ~(1u << c);
    }
  };
  rec(rec, 0);
  // identity is found first because candidates are tried in ascending order
  return result;
}

std::vector<int> automorphism_orbits(const Pattern& p) {
  const int k = p.size();
  std::vector<int> orbit(k);
  std::iota(orbit.begin(), orbit.end(), 0);
  for (const auto& perm : automorphisms(p))
    for (int i = 0; i < k; ++i) orbit[i] = std::min(orbit[i], perm[i]);
  // perm images already cover the whole orbit, since automorphisms form a group
  return orbit;
}

bool is_clique(const Pattern& p) { return p.num_edges() == p.size() * (p.size() - 1) / 2; }

namespace {

// Stabilizer-chain constraints along `seq`, in pattern-vertex space, not reduced.
std::vector<std::pair<int, int>> chain_constraints(const std::vector<std::vector<int>>& group,
                                                   std::span<const int> seq) {
  std::vector<const std::vector<int>*> current;
  for (const auto& g : group) current.push_back(&g);
  std::vector<std::pair<int, int>> out;
  for (int v : seq) {
    std::vector<int> orbit;
    for (const auto* g : current) orbit.push_back((*g)[v]);
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    for (int w : orbit)
      if (w != v) out.emplace_back(v, w);
    std::erase_if(current, [v](const std::vector<int>* g) { return (*g)[v] != v; });
  }
  return out;
}

}  // namespace

PartialOrderSet symmetry_orders(const Pattern& p, std::span<const int> order) {
  const int k = p.size();
  if (static_cast<int>(order.size()) != k) throw PatternError("matching order length mismatch");
  std::vector<int> pos(k);
  for (int i = 0; i < k; ++i) pos[order[i]] = i;
  const auto raw = chain_constraints(automorphisms(p), order);

  // transitive closure over positions, then keep only the covering relations
  std::vector<std::uint32_t> less(k, 0);  // less[a] bit b: a < b
  for (auto [v, w] : raw) less[pos[v]] |= 1u << pos[w];
  for (int via = 0; via < k; ++via)
    for (int a = 0; a < k; ++a)
      if ((less[a] >> via) & 1u) less[a] |= less[via];
  PartialOrderSet result;
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      if (!((less[a] >> b) & 1u)) continue;
      bool implied = false;
      for (int m = 0; m < k && !implied; ++m)
        implied = m != a && m != b && ((less[a] >> m) & 1u) && ((less[m] >> b) & 1u);
      if (!implied) result.constraints.emplace_back(a, b);
    }
  return result;
}

MatchingOrder make_matching_order(const Pattern& p, std::vector<int> order) {
  const int k = p.size();
  MatchingOrder mo;
  mo.vertices = std::move(order);
  mo.connected.assign(k, 0);
  mo.disconnected.assign(k, 0);
  mo.smaller.assign(k, 0);
  mo.larger.assign(k, 0);
  mo.degree.assign(k, 0);
  for (int i = 0; i < k; ++i) {
    mo.degree[i] = p.degree(mo.vertices[i]);
    for (int j = 0; j < i; ++j) {
      if (p.has_edge(mo.vertices[i], mo.vertices[j]))
        mo.connected[i] |= 1u << j;
      else
        mo.disconnected[i] |= 1u << j;
    }
    if (i > 0 && mo.connected[i] == 0)
      throw PatternError("matching order position " + std::to_string(i) +
                         " is not adjacent to any earlier position");
  }
  mo.orders = symmetry_orders(p, mo.vertices);
  for (auto [a, b] : mo.orders.constraints) {
    if (a < b)
      mo.smaller[b] |= 1u << a;
    else
      mo.larger[a] |= 1u << b;
  }
  return mo;
}

MatchingOrder matching_order(const Pattern& p) {
  const int k = p.size();
  if (!p.connected()) throw PatternError("matching order requires a connected pattern");
  if (k <= 1) return make_matching_order(p, std::vector<int>(k, 0));
  const auto group = automorphisms(p);

  struct Score {
    int orders;
    int edges;
    PatternKey code;
  };
  auto score = [&](const std::vector<int>& seq) {
    std::uint32_t in = 0;
    for (int v : seq) in |= 1u << v;
    int internal = 0;
    for (auto [v, w] : chain_constraints(group, seq))
      if ((in >> w) & 1u) ++internal;
    const Pattern sub = p.induced(seq);
    return Score{internal, sub.num_edges(), canonical_code(sub)};
  };
  auto better = [](const Score& a, const Score& b) {
    if (a.orders != b.orders) return a.orders > b.orders;
    if (a.edges != b.edges) return a.edges > b.edges;
    return compare_bytes_less(a.code, b.code);
  };

  std::vector<int> best;
  Score best_score{-1, -1, {}};
  for (int u = 0; u < k; ++u)
    for (int v = 0; v < k; ++v) {
      if (!p.has_edge(u, v)) continue;
      std::vector<int> seq{u, v};
      Score s = score(seq);
      if (best.empty() || better(s, best_score)) {
        best = seq;
        best_score = std::move(s);
      }
    }
  while (static_cast<int>(best.size()) < k) {
    std::uint32_t in = 0, frontier = 0;
    for (int v : best) in |= 1u << v;
    for (int v : best) frontier |= p.adjacency(v);
    frontier &= ~in;
    std::vector<int> pick;
    Score pick_score{-1, -1, {}};
    for (int u = 0; u < k; ++u) {
      if (!((frontier >> u) & 1u)) continue;
      auto seq = best;
      seq.push_back(u);
      Score s = score(seq);
      if (pick.empty() || better(s, pick_score)) {
        pick = std::move(seq);
        pick_score = std::move(s);
      }
    }
    best = std::move(pick);
  }
  return make_matching_order(p, std::move(best));
}

std::vector<Pattern> all_patterns(int k) {
  if (k < 3 || k > 5) throw PatternError("all_patterns supports 3 <= k <= 5, got " + std::to_string(k));
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) slots.emplace_back(i, j);
  std::map<std::pair<int, PatternKey>, Pattern> unique;
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    std::vector<std::pair<int, int>> e;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if ((mask >> s) & 1u) e.push_back(slots[s]);
    Pattern p(k, e);
    if (!p.connected()) continue;
    PatternKey code = canonical_code(p);
    unique.try_emplace({p.num_edges(), code}, decode_code(code));
  }
  std::vector<Pattern> out;
  for (auto& [key, p] : unique) out.push_back(p);
  return out;
}

std::string motif_name(const PatternKey& key) {
  static const std::map<PatternKey, std::string> names = [] {
    std::map<PatternKey, std::string> m;
    m[canonical_code(Pattern::path(2))] = "edge";
    m[canonical_code(Pattern::wedge())] = "wedge";
    m[canonical_code(Pattern::triangle())] = "triangle";
    m[canonical_code(Pattern::path(4))] = "4-path";
    m[canonical_code(Pattern::star(3))] = "3-star";
    m[canonical_code(Pattern::cycle(4))] = "4-cycle";
    m[canonical_code(Pattern::tailed_triangle())] = "tailed-triangle";
    m[canonical_code(Pattern::diamond())] = "diamond";
    for (int c = 4; c <= kMaxCanonicalSize; ++c)
      m[canonical_code(Pattern::clique(c))] = std::to_string(c) + "-clique";
    return m;
  }();
  auto it = names.find(key);
  return it == names.end() ? std::string() : it->second;
}

Pattern load_pattern(const std::filesystem::path& path, const Graph* graph) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), 0, "cannot open file");
  std::vector<std::pair<int, int>> edges;
  std::map<int, std::string> raw_labels;
  int max_id = -1;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(line);
    std::string first;
    if (!(ss >> first) || first[0] == '#' || first[0] == '%') continue;
    if (first == "v") {
      int id;
      std::string label;
      if (!(ss >> id >> label) || id < 0)
        throw ParseError(path.string(), lineno, "expected \"v id label\"");
      raw_labels[id] = label;
      max_id = std::max(max_id, id);
      continue;
    }
    int a, b;
    try {
      std::size_t used = 0;
      a = std::stoi(first, &used);
      if (used != first.size()) throw std::invalid_argument(first);
    } catch (const std::exception&) {
      throw ParseError(path.string(), lineno, "expected \"u v\"");
    }
    if (!(ss >> b) || a < 0 || b < 0) throw ParseError(path.string(), lineno, "expected \"u v\"");
    if (a == b) continue;
    edges.emplace_back(a, b);
    max_id = std::max({max_id, a, b});
  }
  const int k = max_id + 1;
  if (k > kMaxPatternSize) throw ParseError(path.string(), 0, "pattern has too many vertices");
  std::vector<label_t> labels;
  if (!raw_labels.empty()) {
    if (static_cast<int>(raw_labels.size()) != k)
      throw ParseError(path.string(), 0, "labels must cover every pattern vertex");
    for (const auto& [id, name] : raw_labels) {
      if (graph && !graph->label_names().empty()) {
        const auto& names = graph->label_names();
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) throw ParseError(path.string(), 0, "label \"" + name + "\" absent from graph");
        labels.push_back(static_cast<label_t>(it - names.begin()));
      } else {
        try {
          labels.push_back(static_cast<label_t>(std::stoul(name)));
        } catch (const std::exception&) {
          throw ParseError(path.string(), 0, "non-numeric label \"" + name + "\" without a graph dictionary");
        }
      }
    }
  }
  // dedupe edges given in both directions
  for (auto& [a, b] : edges)
    if (a > b) std::swap(a, b);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  Pattern p(k, edges, std::move(labels));
  if (!p.connected()) throw ParseError(path.string(), 0, "pattern is not connected");
  return p;
}

}  // namespace gpm
