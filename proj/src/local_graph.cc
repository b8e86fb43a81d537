#include "gpm/local_graph.h"

#include <algorithm>

namespace gpm {

std::size_t intersection_size(std::span<const vid_t> a, std::span<const vid_t> b) {
  std::size_t i = 0, j = 0, n = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j])
      ++i;
    else if (a[i] > b[j])
      ++j;
    else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

void intersect(std::span<const vid_t> a, std::span<const vid_t> b, std::vector<vid_t>& out) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j])
      ++i;
    else if (a[i] > b[j])
      ++j;
    else {
      out.push_back(a[i]);
      ++i;
      ++j;
    }
  }
}

void LocalGraph::build(const SearchGraph& g, std::span<const vid_t> members) {
  global_.assign(members.begin(), members.end());
  std::sort(global_.begin(), global_.end());
  global_.erase(std::unique(global_.begin(), global_.end()), global_.end());
  const int n = num_vertices();
  offset_.assign(static_cast<std::size_t>(n) + 1, 0);
  adj_.clear();
  for (int a = 0; a < n; ++a) {
    // merge the sorted neighbor list against the sorted member list
    auto nbrs = g.neighbors(global_[a]);
    std::size_t i = 0, j = 0;
    while (i < nbrs.size() && j < global_.size()) {
      if (nbrs[i] < global_[j])
        ++i;
      else if (nbrs[i] > global_[j])
        ++j;
      else {
        adj_.push_back(static_cast<int>(j));
        ++i;
        ++j;
      }
    }
    offset_[a + 1] = adj_.size();
  }
  init_levels();
}

void LocalGraph::build_local(std::vector<vid_t> global_ids, std::vector<std::vector<int>> adjacency) {
  global_ = std::move(global_ids);
  const int n = num_vertices();
  offset_.assign(static_cast<std::size_t>(n) + 1, 0);
  adj_.clear();
  for (int a = 0; a < n; ++a) {
    adj_.insert(adj_.end(), adjacency[a].begin(), adjacency[a].end());
    offset_[a + 1] = adj_.size();
  }
  init_levels();
}

void LocalGraph::init_levels() {
  const int n = num_vertices();
  levels_.assign(1, {});
  levels_[0].resize(n);
  for (int u = 0; u < n; ++u) levels_[0][u] = u;
  degree_.assign(1, std::vector<int>(n));
  for (int u = 0; u < n; ++u) degree_[0][u] = static_cast<int>(offset_[u + 1] - offset_[u]);
  mark_.assign(n, 0);
  swaps_.clear();
}

int LocalGraph::local_id(vid_t global) const {
  auto it = std::lower_bound(global_.begin(), global_.end(), global);
  return it != global_.end() && *it == global ? static_cast<int>(it - global_.begin()) : -1;
}

void LocalGraph::push(int chosen) {
  const int l = level();
  const int next_level = l + 1;
  std::vector<int> next(neighbors(l, chosen).begin(), neighbors(l, chosen).end());
  for (int w : next) mark_[w] = next_level;
  if (static_cast<int>(degree_.size()) <= next_level) degree_.emplace_back(num_vertices(), 0);
  std::vector<Swap> log;
  for (int w : next) {
    const std::size_t base = offset_[w];
    std::size_t i = base;
    std::size_t tail = base + static_cast<std::size_t>(degree_[l][w]);
    // partition [base, tail): members of the next level first
    while (i < tail) {
      if (mark_[adj_[i]] == next_level) {
        ++i;
      } else {
        --tail;
        if (i != tail) {
          std::swap(adj_[i], adj_[tail]);
          log.push_back({i, tail});
        }
      }
    }
    degree_[next_level][w] = static_cast<int>(i - base);
  }
  levels_.push_back(std::move(next));
  swaps_.push_back(std::move(log));
}

void LocalGraph::pop() {
  const int l = level();
  auto& log = swaps_.back();
  for (auto it = log.rbegin(); it != log.rend(); ++it) std::swap(adj_[it->a], adj_[it->b]);
  for (int w : levels_.back()) mark_[w] = l - 1;
  swaps_.pop_back();
  levels_.pop_back();
}

}  // namespace gpm
