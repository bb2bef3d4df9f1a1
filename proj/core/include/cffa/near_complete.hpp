#pragma once

// Solvers parameterized by t, the number of job pairs that do NOT conflict.
// Independent sets of the conflict graph are cliques of its complement, which
// has only t edges; a graph with t edges is ceil(2 sqrt t)-degenerate, so the
// independent sets of size >= 2 are few and can be listed from a degeneracy
// order of the complement.

#include <cstdint>
#include <utility>
#include <vector>

#include "cffa/model.hpp"

namespace cffa {

struct ComplementView {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> complement_edges;  // the t non-edges
  std::vector<int> non_isolated;                      // vertices touching a non-edge, ascending
  std::vector<int> degeneracy_order;                  // of the complement on non_isolated
  int degeneracy = 0;                                 // max forward degree along that order
};

ComplementView complement_view(const ConflictGraph& g);

// ceil(sqrt(t)) computed exactly on integers.
int ceil_sqrt(std::uint64_t t);

// Every independent set with at least two jobs, each sorted, listed in
// lexicographic order. Throws Error(Capacity) when t > max_missing_edges.
std::vector<std::vector<int>> enumerate_nontrivial_independent_sets(const ConflictGraph& g,
                                                                    std::uint64_t max_missing_edges = 24);

struct NearCompleteOptions {
  std::uint64_t guess_budget = 100'000'000;  // guess vectors for solve_guess_per_agent
  std::uint64_t max_missing_edges = 10;      // t cap for solve_partition_contract
};

// Each agent either takes one independent set of size >= 2 or is left for the
// singleton matching over the jobs nobody took. Counters: guesses.
SolveReport solve_guess_per_agent(const Instance& inst, const NearCompleteOptions& options = {});

// Guesses which non-isolated jobs are grouped into multi-job bundles (a
// canonical set partition into independent classes of size >= 2), contracts
// each class into one job with summed utilities and matches agents to the
// contracted jobs. Counters: labelings, valid_labelings.
SolveReport solve_partition_contract(const Instance& inst, const NearCompleteOptions& options = {});

}  // namespace cffa
