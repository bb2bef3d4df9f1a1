#include "cffa/graph_classes.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace cffa {

DegeneracyOrder degeneracy_order(const ConflictGraph& g) {
  const int v = g.vertex_count();
  std::vector<int> degree(static_cast<std::size_t>(v));
  std::vector<char> removed(static_cast<std::size_t>(v), 0);
  for (int x = 0; x < v; ++x) degree[x] = g.degree(x);

  DegeneracyOrder result;
  result.order.reserve(static_cast<std::size_t>(v));
  for (int step = 0; step < v; ++step) {
    int pick = -1;
    for (int x = 0; x < v; ++x)
      if (!removed[x] && (pick < 0 || degree[x] < degree[pick])) pick = x;
    result.degeneracy = std::max(result.degeneracy, degree[pick]);
    result.order.push_back(pick);
    removed[pick] = 1;
    for (int y : g.neighbors(pick))
      if (!removed[y]) --degree[y];
  }
  return result;
}

std::optional<std::vector<std::vector<int>>> cluster_partition(const ConflictGraph& g) {
  const int v = g.vertex_count();
  std::vector<int> component(static_cast<std::size_t>(v), -1);
  std::vector<std::vector<int>> parts;
  for (int root = 0; root < v; ++root) {
    if (component[root] >= 0) continue;
    const int id = static_cast<int>(parts.size());
    parts.emplace_back();
    std::deque<int> queue{root};
    component[root] = id;
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      parts[id].push_back(x);
      for (int y : g.neighbors(x))
        if (component[y] < 0) {
          component[y] = id;
          queue.push_back(y);
        }
    }
    auto& part = parts[id];
    std::sort(part.begin(), part.end());
    for (int x : part)
      if (g.degree(x) != static_cast<int>(part.size()) - 1) return std::nullopt;
  }
  return parts;
}

std::optional<std::vector<int>> two_coloring(const ConflictGraph& g) {
  const int v = g.vertex_count();
  std::vector<int> side(static_cast<std::size_t>(v), -1);
  for (int root = 0; root < v; ++root) {
    if (side[root] >= 0) continue;
    side[root] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (int y : g.neighbors(x)) {
        if (side[y] < 0) {
          side[y] = 1 - side[x];
          queue.push_back(y);
        } else if (side[y] == side[x]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

bool has_triangle(const ConflictGraph& g) {
  for (auto [u, v] : g.edges())
    for (int w : g.neighbors(u))
      if (w > v && g.adjacent(v, w)) return true;
  return false;
}

bool has_clique(const ConflictGraph& g, int size) {
  if (size <= 0) return true;
  if (size == 1) return g.vertex_count() > 0;
  std::vector<int> chosen;
  std::function<bool(int)> grow = [&](int from) {
    if (static_cast<int>(chosen.size()) == size) return true;
    for (int x = from; x < g.vertex_count(); ++x) {
      if (std::all_of(chosen.begin(), chosen.end(), [&](int c) { return g.adjacent(c, x); })) {
        chosen.push_back(x);
        if (grow(x + 1)) return true;
        chosen.pop_back();
      }
    }
    return false;
  };
  return grow(0);
}

GraphClassReport detect_class(const ConflictGraph& g) {
  GraphClassReport report;
  const int m = g.vertex_count();
  report.edgeless = g.edge_count() == 0;
  report.complete = g.is_complete();
  report.cluster = cluster_partition(g);
  report.bipartition = two_coloring(g);
  report.degeneracy = degeneracy_order(g);
  report.all_degrees_m_minus_2 = m >= 2;
  for (int x = 0; x < m; ++x)
    if (g.degree(x) != m - 2) report.all_degrees_m_minus_2 = false;
  return report;
}

}  // namespace cffa
