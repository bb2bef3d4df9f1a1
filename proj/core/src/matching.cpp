#include <algorithm>
#include <deque>
#include <limits>

#include "cffa/error.hpp"
#include "cffa/structured.hpp"

namespace cffa {

void BipartiteGraphView::validate() const {
  if (left_count < 0 || right_count < 0) fail(ErrorKind::Contract, "BIPARTITE", "negative side size");
  auto sorted = edges;
  for (auto [l, r] : sorted)
    if (l < 0 || l >= left_count || r < 0 || r >= right_count)
      fail(ErrorKind::Contract, "BIPARTITE", "edge endpoint out of range");
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail(ErrorKind::Contract, "BIPARTITE", "duplicate edge");
}

namespace {

class HopcroftKarp {
 public:
  explicit HopcroftKarp(const BipartiteGraphView& g)
      : adj_(static_cast<std::size_t>(g.left_count)),
        match_left_(static_cast<std::size_t>(g.left_count), -1),
        match_right_(static_cast<std::size_t>(g.right_count), -1),
        dist_(static_cast<std::size_t>(g.left_count)) {
    for (auto [l, r] : g.edges) adj_[l].push_back(r);
  }

  void run() {
    while (bfs()) {
      for (std::size_t l = 0; l < adj_.size(); ++l)
        if (match_left_[l] < 0) dfs(static_cast<int>(l));
    }
  }

  std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t l = 0; l < match_left_.size(); ++l)
      if (match_left_[l] >= 0) out.emplace_back(static_cast<int>(l), match_left_[l]);
    return out;
  }

 private:
  static constexpr int kInf = std::numeric_limits<int>::max();

  bool bfs() {
    std::deque<int> queue;
    for (std::size_t l = 0; l < adj_.size(); ++l) {
      dist_[l] = match_left_[l] < 0 ? 0 : kInf;
      if (match_left_[l] < 0) queue.push_back(static_cast<int>(l));
    }
    bool reachable_free = false;
    while (!queue.empty()) {
      const int l = queue.front();
      queue.pop_front();
      for (int r : adj_[l]) {
        const int next = match_right_[r];
        if (next < 0) {
          reachable_free = true;
        } else if (dist_[next] == kInf) {
          dist_[next] = dist_[l] + 1;
          queue.push_back(next);
        }
      }
    }
    return reachable_free;
  }

  bool dfs(int l) {
    for (int r : adj_[l]) {
      const int next = match_right_[r];
      if (next < 0 || (dist_[next] == dist_[l] + 1 && dfs(next))) {
        match_left_[l] = r;
        match_right_[r] = l;
        return true;
      }
    }
    dist_[l] = kInf;
    return false;
  }

  std::vector<std::vector<int>> adj_;
  std::vector<int> match_left_;
  std::vector<int> match_right_;
  std::vector<int> dist_;
};

}  // namespace

std::vector<std::pair<int, int>> max_bipartite_matching(const BipartiteGraphView& g) {
  g.validate();
  HopcroftKarp hk(g);
  hk.run();
  return hk.pairs();
}

}  // namespace cffa
