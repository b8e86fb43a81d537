#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gpm/graph.h"

namespace gpm {

/// Canonical pattern key: byte string, equal iff the patterns are isomorphic.
///
/// Layout: byte 0 = vertex count k; byte 1 = flags (bit 0 set when labeled);
/// if labeled, k labels as 4-byte big-endian integers; then the upper
/// triangle of the adjacency matrix, row-major over pairs (i, j) with i < j,
/// packed MSB-first into ceil(k(k-1)/2 / 8) bytes. The canonical form is the
/// lexicographic minimum of this encoding over all vertex permutations.
using PatternKey = std::string;

constexpr int kMaxPatternSize = 16;
constexpr int kMaxCanonicalSize = 8;

class PatternError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Small simple graph on local vertex ids 0..k-1, adjacency as bitmasks.
class Pattern {
 public:
  Pattern() = default;
  Pattern(int k, std::span<const std::pair<int, int>> edges, std::vector<label_t> labels = {});
  Pattern(int k, std::initializer_list<std::pair<int, int>> edges, std::vector<label_t> labels = {})
      : Pattern(k, std::span<const std::pair<int, int>>(edges.begin(), edges.size()), std::move(labels)) {}

  static Pattern clique(int k);
  static Pattern cycle(int k);
  static Pattern path(int k);
  static Pattern star(int leaves);
  static Pattern triangle() { return clique(3); }
  static Pattern wedge() { return path(3); }
  static Pattern diamond();
  static Pattern tailed_triangle();

  int size() const { return k_; }
  int num_edges() const;
  bool has_edge(int i, int j) const { return (adj_[i] >> j) & 1u; }
  std::uint32_t adjacency(int i) const { return adj_[i]; }
  int degree(int i) const;
  int min_degree() const;
  std::vector<std::pair<int, int>> edges() const;

  bool labeled() const { return !labels_.empty(); }
  label_t label(int i) const { return labels_[i]; }
  const std::vector<label_t>& labels() const { return labels_; }

  bool connected() const;
  /// Sub-pattern induced by `vertices`, renumbered in the given order.
  Pattern induced(std::span<const int> vertices) const;

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  int k_ = 0;
  std::uint32_t adj_[kMaxPatternSize] = {};
  std::vector<label_t> labels_;
};

PatternKey canonical_code(const Pattern& p);
/// Rebuilds a pattern from a canonical (or any encoded) key.
Pattern decode_code(const PatternKey& key);
std::string to_hex(const PatternKey& key);
PatternKey from_hex(const std::string& hex);

/// Every automorphism as a permutation perm[i] = image of i (identity first).
std::vector<std::vector<int>> automorphisms(const Pattern& p);

/// orbit[i] = smallest vertex in the automorphism orbit of i.
std::vector<int> automorphism_orbits(const Pattern& p);

bool is_clique(const Pattern& p);

/// Pairs (a, b) of matching positions: the graph vertex matched at a must
/// have a smaller ID than the one matched at b.
struct PartialOrderSet {
  std::vector<std::pair<int, int>> constraints;
  friend bool operator==(const PartialOrderSet&, const PartialOrderSet&) = default;
};

struct MatchingOrder {
  std::vector<int> vertices;              // position -> pattern vertex
  std::vector<std::uint32_t> connected;   // earlier positions that must be adjacent
  std::vector<std::uint32_t> disconnected;  // earlier positions that must not be (vertex-induced)
  std::vector<std::uint32_t> smaller;     // earlier positions whose ID must be smaller
  std::vector<std::uint32_t> larger;      // earlier positions whose ID must be larger
  std::vector<int> degree;                // pattern degree of the vertex at each position
  PartialOrderSet orders;

  int size() const { return static_cast<int>(vertices.size()); }
};

/// Symmetry-breaking constraints along `order` via a stabilizer chain of the
/// automorphism group, transitively reduced.
PartialOrderSet symmetry_orders(const Pattern& p, std::span<const int> order);

/// Greedy order: start from the edge whose pair carries the most internal
/// partial orders, then repeatedly add the neighbor maximizing (internal
/// partial orders, induced edges), ties broken by the smallest canonical
/// code of the induced prefix and then by vertex id.
MatchingOrder matching_order(const Pattern& p);
/// Fills the per-position constraint masks for a caller-supplied order.
MatchingOrder make_matching_order(const Pattern& p, std::vector<int> order);

/// All connected unlabeled patterns on k vertices (3 <= k <= 5), sorted by
/// edge count and then canonical code.
std::vector<Pattern> all_patterns(int k);

/// Conventional motif name ("wedge", "diamond", "5-clique", ...) or empty.
std::string motif_name(const PatternKey& key);

/// Edge-list pattern file: "u v" lines plus optional "v id label" lines.
/// Label tokens are resolved against `graph`'s label names when provided.
Pattern load_pattern(const std::filesystem::path& path, const Graph* graph = nullptr);

}  // namespace gpm
