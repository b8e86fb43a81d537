#pragma once

#include <array>
#include <cstdint>

#include "gpm/engine.h"

namespace gpm::apps {

/// Wedges through edge (u, v) that do not close a triangle on it.
std::int64_t edge_wedges(std::int64_t deg_u, std::int64_t deg_v, std::int64_t tri);

/// {wedge, triangle} from per-vertex C(deg, 2) minus three per triangle.
MiningResult mc3_local_counts(const Graph& g, const EngineOptions& opts = {});

/// Per undirected edge (u, v) with t common neighbors, su = deg(u) - t - 1 and
/// sv = deg(v) - t - 1, summed over edges; plus explicit 4-clique and induced
/// 4-cycle counts.
struct Mc4RawSums {
  std::int64_t diamond = 0;          // t (t - 1)
  std::int64_t tailed_triangle = 0;  // t (su + sv)
  std::int64_t path = 0;             // su sv
  std::int64_t star = 0;             // su (su - 1) + sv (sv - 1)
  std::int64_t clique = 0;
  std::int64_t cycle = 0;

  std::array<std::int64_t, 6> features() const { return {diamond, tailed_triangle, path, star, clique, cycle}; }
};

struct Mc4Counts {
  std::int64_t path = 0, star = 0, cycle = 0, tailed_triangle = 0, diamond = 0, clique = 0;
  friend bool operator==(const Mc4Counts&, const Mc4Counts&) = default;
};

/// Motif count = (row . features) / kMc4Denominator, rows ordered as
/// {path, star, cycle, tailed_triangle, diamond, clique} and columns as
/// Mc4RawSums::features().
constexpr std::int64_t kMc4Denominator = 6;
constexpr std::array<std::array<std::int64_t, 6>, 6> kMc4Correction = {{
    {0, 0, 6, 0, 0, -24},    // path
    {2, -1, 0, 1, -24, 0},   // star
    {0, 0, 0, 0, 0, 6},      // cycle
    {-6, 3, 0, 0, 72, 0},    // tailed triangle
    {3, 0, 0, 0, -36, 0},    // diamond
    {0, 0, 0, 0, 6, 0},      // clique
}};

Mc4RawSums mc4_raw_sums(const Graph& g, const EngineOptions& opts = {}, std::uint64_t* enumerated = nullptr);
/// Throws std::logic_error if a count is not an integer.
Mc4Counts mc4_correct(const Mc4RawSums& raw);
MiningResult mc4_local_counts(const Graph& g, const EngineOptions& opts = {});

}  // namespace gpm::apps
