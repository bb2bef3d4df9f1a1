#pragma once

// Polynomial-time solvers for conflict graphs with rigid structure. All of
// them reduce to maximum bipartite matching.

#include <utility>
#include <vector>

#include "cffa/model.hpp"

namespace cffa {

struct BipartiteGraphView {
  int left_count = 0;
  int right_count = 0;
  std::vector<std::pair<int, int>> edges;  // (left, right)

  // Throws Error(Contract) on out-of-range indices or duplicate edges.
  void validate() const;
};

// Hopcroft-Karp. The result is a list of (left, right) pairs sorted by left
// index and depends only on the edge order.
std::vector<std::pair<int, int>> max_bipartite_matching(const BipartiteGraphView& g);

// Complete conflict graph: every bundle is a single job, so the question is
// whether the agent/job graph {(a, x) : u_a(x) >= eta} saturates all agents.
// Throws Error(Routing) unless the conflict graph is complete.
SolveReport solve_complete_graph(const Instance& inst);

// Singleton assignment for the given agents over the given jobs, ignoring the
// conflict graph: each listed agent gets one listed job worth >= eta to it.
// Returns one bundle per entry of `agents`, or nullopt.
std::optional<std::vector<int>> match_singletons(const Instance& inst, const std::vector<int>& agents,
                                                 const std::vector<int>& jobs);

// Cluster graph with exactly two cliques and identical utility rows. Jobs
// worth >= eta on their own are handed out as singletons; the remaining agents
// need pairs, one job from each clique, found by matching across the cliques.
// Throws Error(Routing) when the preconditions fail.
SolveReport solve_cluster_two_cliques_uniform(const Instance& inst);

// Every job conflicts with all but one other job (degree m - 2, so the
// non-edges form a perfect matching) and utility rows are identical. The only
// independent pairs are the non-edges, which are already disjoint, so they are
// counted greedily. Throws Error(Routing) when the preconditions fail.
SolveReport solve_near_complete_uniform(const Instance& inst);

}  // namespace cffa
