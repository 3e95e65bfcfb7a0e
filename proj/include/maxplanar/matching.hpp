#pragma once

#include <limits>
#include <queue>
#include <vector>

namespace maxplanar {

// Hopcroft-Karp maximum matching on a bipartite graph with left vertices
// 0..m-1 and right vertices 0..k-1. Adjacency is supplied once, then
// max_matching() runs in O(E sqrt(V)).
class BipartiteMatcher {
 public:
  BipartiteMatcher(int left_count, int right_count)
      : adj_(left_count), pair_left_(left_count, kFree), pair_right_(right_count, kFree),
        level_(left_count) {}

  void add_edge(int left, int right) { adj_[left].push_back(right); }

  int max_matching() {
    int matched = 0;
    while (bfs()) {
      for (int u = 0; u < static_cast<int>(adj_.size()); ++u) {
        if (pair_left_[u] == kFree && dfs(u)) ++matched;
      }
    }
    return matched;
  }

  // Right partner of left vertex u, or -1.
  int partner_of(int u) const { return pair_left_[u]; }

  static constexpr int kFree = -1;

 private:
  bool bfs() {
    std::queue<int> q;
    for (int u = 0; u < static_cast<int>(adj_.size()); ++u) {
      if (pair_left_[u] == kFree) {
        level_[u] = 0;
        q.push(u);
      } else {
        level_[u] = kInf;
      }
    }
    int reachable_free = kInf;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      if (level_[u] >= reachable_free) continue;
      for (int v : adj_[u]) {
        int w = pair_right_[v];
        if (w == kFree) {
          reachable_free = std::min(reachable_free, level_[u] + 1);
        } else if (level_[w] == kInf) {
          level_[w] = level_[u] + 1;
          q.push(w);
        }
      }
    }
    free_level_ = reachable_free;
    return reachable_free != kInf;
  }

  bool dfs(int u) {
    for (int v : adj_[u]) {
      int w = pair_right_[v];
      if (w == kFree) {
        if (level_[u] + 1 == free_level_) {
          pair_left_[u] = v;
          pair_right_[v] = u;
          return true;
        }
      } else if (level_[w] == level_[u] + 1 && dfs(w)) {
        pair_left_[u] = v;
        pair_right_[v] = u;
        return true;
      }
    }
    level_[u] = kInf;
    return false;
  }

  static constexpr int kInf = std::numeric_limits<int>::max();

  std::vector<std::vector<int>> adj_;
  std::vector<int> pair_left_;
  std::vector<int> pair_right_;
  std::vector<int> level_;
  int free_level_ = kInf;
};

}  // namespace maxplanar
