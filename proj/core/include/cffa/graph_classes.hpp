#pragma once

#include <optional>
#include <vector>

#include "cffa/model.hpp"

namespace cffa {

// Smallest-last elimination order: every vertex has at most `degeneracy`
// neighbours that appear after it in `order`.
struct DegeneracyOrder {
  int degeneracy = 0;
  std::vector<int> order;
};

DegeneracyOrder degeneracy_order(const ConflictGraph& g);

// Connected components, each sorted, listed by smallest vertex. Returned only
// when every component is a clique.
std::optional<std::vector<std::vector<int>>> cluster_partition(const ConflictGraph& g);

// side[v] in {0, 1}; BFS from the lowest uncoloured vertex, which gets side 0.
std::optional<std::vector<int>> two_coloring(const ConflictGraph& g);

bool has_triangle(const ConflictGraph& g);
// True iff g contains a clique on `size` vertices. Exponential; small graphs only.
bool has_clique(const ConflictGraph& g, int size);

// Every class tag carries the structure that witnesses it.
struct GraphClassReport {
  bool edgeless = false;
  bool complete = false;
  std::optional<std::vector<std::vector<int>>> cluster;
  std::optional<std::vector<int>> bipartition;
  DegeneracyOrder degeneracy;
  // All degrees equal m - 2, i.e. the complement is a perfect matching.
  bool all_degrees_m_minus_2 = false;
};

GraphClassReport detect_class(const ConflictGraph& g);

}  // namespace cffa
