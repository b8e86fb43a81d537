#pragma once

#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <random>
#include <string>
#include <utility>

#include "gpm/generators.h"
#include "gpm/graph.h"

namespace test {

inline gpm::Graph make_graph(gpm::vid_t n, std::initializer_list<std::pair<gpm::vid_t, gpm::vid_t>> edges,
                             std::vector<gpm::label_t> labels = {}) {
  std::vector<gpm::Edge> list;
  for (auto [u, v] : edges) list.push_back({u, v});
  return gpm::Graph::from_edges(n, list, std::move(labels));
}

// 0-1 is the chord; 2 and 3 see both ends.
inline gpm::Graph diamond_graph() { return make_graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}}); }

inline gpm::Graph path_graph(gpm::vid_t n) {
  std::vector<gpm::Edge> list;
  for (gpm::vid_t v = 0; v + 1 < n; ++v) list.push_back({v, v + 1});
  return gpm::Graph::from_edges(n, list);
}

inline gpm::Graph relabel(const gpm::Graph& g, std::uint64_t seed) {
  std::vector<gpm::vid_t> perm(g.num_vertices());
  for (gpm::vid_t v = 0; v < perm.size(); ++v) perm[v] = v;
  std::mt19937_64 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<gpm::Edge> list;
  for (const auto& e : g.edge_list()) list.push_back({perm[e.src], perm[e.dst]});
  std::vector<gpm::label_t> labels;
  if (g.labeled()) {
    labels.resize(g.num_vertices());
    for (gpm::vid_t v = 0; v < perm.size(); ++v) labels[perm[v]] = g.label(v);
  }
  return gpm::Graph::from_edges(g.num_vertices(), list, std::move(labels));
}

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("gpm_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::filesystem::path write(const std::string& name, const std::string& text) const {
    const auto p = path_ / name;
    std::ofstream(p) << text;
    return p;
  }
  std::filesystem::path path(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

}  // namespace test
