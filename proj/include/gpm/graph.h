#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gpm {

using vid_t = std::uint32_t;
using eid_t = std::uint64_t;
using label_t = std::uint32_t;

struct Edge {
  vid_t src;
  vid_t dst;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Thrown when an input file cannot be parsed. `line` is 1-based, 0 if unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& file, std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Immutable undirected graph in CSR form.
///
/// Neighbor lists are sorted, free of duplicates and self-loops, and the
/// adjacency is symmetric. Labels are optional dense integers; the original
/// label strings are kept in `label_names()` for output.
class Graph {
 public:
  Graph() : offsets_{0} {}

  /// Builds a graph from an arbitrary edge list. Edges are symmetrized,
  /// deduplicated and self-loops dropped. `n` must exceed every endpoint.
  static Graph from_edges(vid_t n, std::span<const Edge> edges,
                          std::vector<label_t> labels = {},
                          std::vector<std::string> label_names = {});

  /// Adopts an already-normalized CSR; throws std::invalid_argument if any
  /// invariant does not hold.
  static Graph from_csr(std::vector<eid_t> offsets, std::vector<vid_t> neighbors,
                        std::vector<label_t> labels = {},
                        std::vector<std::string> label_names = {});

  vid_t num_vertices() const { return static_cast<vid_t>(offsets_.size() - 1); }
  /// Undirected edge count.
  eid_t num_edges() const { return neighbors_.size() / 2; }
  double average_degree() const;

  std::span<const vid_t> neighbors(vid_t v) const {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  vid_t degree(vid_t v) const { return static_cast<vid_t>(offsets_[v + 1] - offsets_[v]); }
  vid_t max_degree() const { return max_degree_; }

  /// Binary search over the sorted neighbor list of u.
  bool has_edge(vid_t u, vid_t v) const;

  bool labeled() const { return !labels_.empty(); }
  label_t label(vid_t v) const { return labels_[v]; }
  std::span<const label_t> labels() const { return labels_; }
  std::size_t num_labels() const;
  /// Display name of a dense label id; falls back to the decimal id.
  std::string label_name(label_t l) const;
  const std::vector<std::string>& label_names() const { return label_names_; }

  std::span<const eid_t> row_offsets() const { return offsets_; }
  std::span<const vid_t> column_indices() const { return neighbors_; }

  /// Each undirected edge once, as (u, v) with u < v, in CSR order.
  std::vector<Edge> edge_list() const;

  /// Full scan of the CSR invariants; throws std::invalid_argument with a
  /// description of the first violation found.
  void validate() const;

 private:
  std::vector<eid_t> offsets_;
  std::vector<vid_t> neighbors_;
  std::vector<label_t> labels_;
  std::vector<std::string> label_names_;
  vid_t max_degree_ = 0;
};

/// Each undirected edge kept in exactly one direction along a strict total
/// order of the vertices, so the result is acyclic.
class OrientedGraph {
 public:
  OrientedGraph() : offsets_{0} {}
  OrientedGraph(std::vector<eid_t> offsets, std::vector<vid_t> neighbors,
                std::vector<vid_t> rank);

  vid_t num_vertices() const { return static_cast<vid_t>(offsets_.size() - 1); }
  eid_t num_edges() const { return neighbors_.size(); }
  std::span<const vid_t> out_neighbors(vid_t v) const {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  vid_t out_degree(vid_t v) const { return static_cast<vid_t>(offsets_[v + 1] - offsets_[v]); }
  vid_t max_out_degree() const { return max_out_degree_; }
  bool has_arc(vid_t u, vid_t v) const;
  /// Position of v in the orienting order; arcs go from lower to higher rank.
  vid_t rank(vid_t v) const { return rank_[v]; }

  /// Throws std::invalid_argument if an arc goes against the ranking or a
  /// list is unsorted.
  void validate() const;

 private:
  std::vector<eid_t> offsets_;
  std::vector<vid_t> neighbors_;
  std::vector<vid_t> rank_;
  vid_t max_out_degree_ = 0;
};

enum class Orientation { degree, core };

/// k-core number of every vertex (bucket peeling, O(n + m)).
std::vector<vid_t> core_numbers(const Graph& g);

/// degree: arcs toward higher degree, ties toward the larger ID.
/// core: arcs toward higher core number, ties by degree, then larger ID.
OrientedGraph orient(const Graph& g, Orientation strategy);

// I/O -----------------------------------------------------------------------

/// Reads "u v" lines ('#' and '%' start comments). The vertex count is the
/// largest ID + 1. If `labels_path` is given it must hold "id label" lines
/// covering every vertex. A file starting with the binary cache magic is
/// loaded as a cache instead.
Graph load_edge_list(const std::filesystem::path& path,
                     const std::optional<std::filesystem::path>& labels_path = std::nullopt);

/// Writes the graph as a binary CSR cache (magic "GPMCSR01", little-endian
/// u64 vertex count, u64 arc count, u64 label count, offsets as u64,
/// neighbors as u32, labels as u32, then label names as u32-length strings).
void save_binary(const Graph& g, const std::filesystem::path& path);
Graph load_binary(const std::filesystem::path& path);
bool is_binary_cache(const std::filesystem::path& path);

}  // namespace gpm
