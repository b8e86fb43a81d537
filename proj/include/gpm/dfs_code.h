#pragma once

#include <string>
#include <vector>

#include "gpm/graph.h"
#include "gpm/pattern.h"

namespace gpm {

/// One edge of a gSpan DFS code. Positions are discovery indices; an edge
/// is forward when it introduces `to` (from < to), backward otherwise.
struct DfsEdge {
  int from;
  int to;
  label_t from_label;
  label_t to_label;

  bool forward() const { return from < to; }
  friend bool operator==(const DfsEdge&, const DfsEdge&) = default;
};

using DfsCode = std::vector<DfsEdge>;

constexpr int kMaxDfsCodeEdges = 10;

int code_vertex_count(const DfsCode& code);
/// Positions on the rightmost path, rightmost vertex first, root last.
std::vector<int> rightmost_path(const DfsCode& code);
/// Pattern whose vertex i is the code's position i. Throws PatternError if
/// the sequence is not a well-formed DFS code.
Pattern code_to_pattern(const DfsCode& code);

/// Orders two candidate extensions of the same code prefix.
bool extension_less(const DfsEdge& a, const DfsEdge& b);

/// Lexicographically minimal DFS code of a connected pattern (unlabeled
/// patterns are treated as uniformly labeled 0).
DfsCode min_dfs_code(const Pattern& p);
/// True iff `code` is the minimal code of the pattern it encodes.
bool is_min_extension(const DfsCode& code);

/// "(0,1,A,B)(1,2,B,C)"; label names come from `g` when given.
std::string render(const DfsCode& code, const Graph* g = nullptr);

}  // namespace gpm
