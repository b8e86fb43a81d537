#include "gpm/dfs_code.h"

#include <algorithm>
#include <optional>

namespace gpm {

int code_vertex_count(const DfsCode& code) {
  int n = 0;
  for (const auto& e : code) n = std::max({n, e.from + 1, e.to + 1});
  return n;
}

std::vector<int> rightmost_path(const DfsCode& code) {
  const int n = code_vertex_count(code);
  std::vector<int> parent(n, -1);
  for (const auto& e : code)
    if (e.forward()) parent[e.to] = e.from;
  std::vector<int> path;
  for (int v = n - 1; v >= 0; v = parent[v]) {
    path.push_back(v);
    if (v == 0) break;
  }
  return path;
}

Pattern code_to_pattern(const DfsCode& code) {
  if (code.empty()) return Pattern();
  const int n = code_vertex_count(code);
  if (n > kMaxPatternSize) throw PatternError("DFS code has too many vertices");
  std::vector<label_t> labels(n, 0);
  std::vector<bool> seen(n, false);
  std::vector<std::pair<int, int>> edges;
  int next = 0;
  for (const auto& e : code) {
    auto introduce = [&](int v, label_t l) {
      if (!seen[v]) {
        if (v != next) throw PatternError("DFS code introduces positions out of order");
        seen[v] = true;
        labels[v] = l;
        ++next;
      } else if (labels[v] != l) {
        throw PatternError("DFS code gives inconsistent labels");
      }
    };
    if (e.from == e.to) throw PatternError("DFS code self-loop");
    introduce(e.from, e.from_label);
    introduce(e.to, e.to_label);
    edges.emplace_back(e.from, e.to);
  }
  for (auto& [a, b] : edges)
    if (a > b) std::swap(a, b);
  auto sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw PatternError("DFS code repeats an edge");
  return Pattern(n, edges, std::move(labels));
}

bool extension_less(const DfsEdge& a, const DfsEdge& b) {
  const bool fa = a.forward(), fb = b.forward();
  if (!fa && fb) return true;
  if (fa && !fb) return false;
  if (!fa) return a.to < b.to;  // both backward from the rightmost vertex
  if (a.from != b.from) return a.from > b.from;  // deeper source first
  return a.to_label < b.to_label;
}

namespace {

struct Projection {
  std::vector<int> map;         // code position -> pattern vertex
  std::vector<int> inverse;     // pattern vertex -> code position, -1 if unmapped
  std::uint32_t used[kMaxPatternSize] = {};  // used pattern edges, symmetric
};

label_t label_of(const Pattern& p, int v) { return p.labeled() ? p.label(v) : 0; }

// Appends every admissible extension of `proj` under `code` with its child projection.
template <typename Visit>
void for_each_extension(const Pattern& p, const DfsCode& code, const Projection& proj, Visit&& visit) {
  const auto rmpath = rightmost_path(code);
  const int r = rmpath.front();
  const int vr = proj.map[r];
  // backward: rightmost vertex to rightmost-path positions, ascending
  for (auto it = rmpath.rbegin(); it != rmpath.rend(); ++it) {
    const int j = *it;
    if (j == r) continue;
    const int vj = proj.map[j];
    if (!p.has_edge(vr, vj) || ((proj.used[vr] >> vj) & 1u)) continue;
    Projection child = proj;
    child.used[vr] |= 1u << vj;
    child.used[vj] |= 1u << vr;
    visit(DfsEdge{r, j, label_of(p, vr), label_of(p, vj)}, std::move(child));
  }
  // forward: from rightmost-path positions, deepest first
  const int next = static_cast<int>(proj.map.size());
  for (int i : rmpath) {
    const int vi = proj.map[i];
    for (int w = 0; w < p.size(); ++w) {
      if (!p.has_edge(vi, w) || proj.inverse[w] >= 0) continue;
      Projection child = proj;
      child.map.push_back(w);
      child.inverse[w] = next;
      child.used[vi] |= 1u << w;
      child.used[w] |= 1u << vi;
      visit(DfsEdge{i, next, label_of(p, vi), label_of(p, w)}, std::move(child));
    }
  }
}

// Runs the greedy minimum-code construction. If `target` is given, stops at
// the first position where the minimum diverges from it and returns nullopt.
std::optional<DfsCode> build_min_code(const Pattern& p, const DfsCode* target) {
  const int m = p.num_edges();
  if (m == 0) return DfsCode{};
  if (m > kMaxDfsCodeEdges)
    throw PatternError("min DFS code supports at most " + std::to_string(kMaxDfsCodeEdges) + " edges");
  if (!p.connected()) throw PatternError("min DFS code requires a connected pattern");

  DfsCode code;
  std::vector<Projection> projections;
  {
    std::optional<std::pair<label_t, label_t>> best;
    for (int a = 0; a < p.size(); ++a)
      for (int b = 0; b < p.size(); ++b) {
        if (!p.has_edge(a, b)) continue;
        std::pair<label_t, label_t> lab{label_of(p, a), label_of(p, b)};
        if (!best || lab < *best) {
          best = lab;
          projections.clear();
        }
        if (lab != *best) continue;
        Projection proj;
        proj.map = {a, b};
        proj.inverse.assign(p.size(), -1);
        proj.inverse[a] = 0;
        proj.inverse[b] = 1;
        proj.used[a] |= 1u << b;
        proj.used[b] |= 1u << a;
        projections.push_back(std::move(proj));
      }
    code.push_back({0, 1, best->first, best->second});
  }
  if (target && !(code[0] == (*target)[0])) return std::nullopt;

  while (static_cast<int>(code.size()) < m) {
    std::optional<DfsEdge> best;
    std::vector<Projection> next;
    for (const auto& proj : projections)
      for_each_extension(p, code, proj, [&](const DfsEdge& e, Projection&& child) {
        if (!best || extension_less(e, *best)) {
          best = e;
          next.clear();
        }
        if (e == *best) next.push_back(std::move(child));
      });
    code.push_back(*best);
    if (target && !(code.back() == (*target)[code.size() - 1])) return std::nullopt;
    projections = std::move(next);
  }
  return code;
}

}  // namespace

DfsCode min_dfs_code(const Pattern& p) { return *build_min_code(p, nullptr); }

bool is_min_extension(const DfsCode& code) {
  if (code.size() <= 1) return code.empty() || code[0].from_label <= code[0].to_label;
  const Pattern p = code_to_pattern(code);
  return build_min_code(p, &code).has_value();
}

std::string render(const DfsCode& code, const Graph* g) {
  std::string out;
  auto name = [&](label_t l) { return g ? g->label_name(l) : std::to_string(l); };
  for (const auto& e : code)
    out += "(" + std::to_string(e.from) + "," + std::to_string(e.to) + "," + name(e.from_label) + "," +
           name(e.to_label) + ")";
  return out;
}

}  // namespace gpm
