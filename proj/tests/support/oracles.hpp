#pragma once

// Independent reference implementations used only by tests. None of these
// call into the solver code; they work from the definitions directly.

#include <cstdint>
#include <set>
#include <vector>

#include "cffa/model.hpp"
#include "cffa/reductions.hpp"
#include "cffa/rng.hpp"
#include "cffa/sbmwis_types.hpp"

namespace cffa::testing {

// Disjoint, conflict-free, worth >= eta, within the cap. Edge lookups go
// through the raw edge list, not the adjacency structure.
bool definitional_verify(const Instance& inst, const Allocation& alloc);

// Independence by scanning every edge.
bool edge_scan_independent(const ConflictGraph& g, const std::vector<int>& vertices);

// Size of a maximum matching by trying every choice for every left vertex.
std::size_t exhaustive_matching_size(int left, int right, const std::vector<std::pair<int, int>>& edges);

// Does an independent set of size exactly k exist? Checks all C(m, k) sets.
bool has_independent_set_of_size(const ConflictGraph& g, int k);

// All independent vertex sets of size >= 2, each sorted.
std::set<std::vector<int>> independent_sets_min2(const ConflictGraph& g);

// Best Sb-MWIS value over every subset (weight of a heaviest independent set of size <= k).
std::uint64_t best_sbmwis_weight(const SbMwisInstance& inst);

// Source problems decided by trying every grouping.
bool three_partition_exhaustive(const ThreePartitionInstance& src);
bool numerical_3dm_exhaustive(const Numerical3DMInstance& src);

// Every valid 3-Partition source with two triples and B <= max_bound.
std::vector<ThreePartitionInstance> three_partition_corpus(Utility max_bound);
// Every two-element Numerical 3DM source with entries <= max_entry.
std::vector<Numerical3DMInstance> numerical_3dm_corpus(Utility max_entry);

// Feasibility by trying every job -> (agent | none) map, independent of the
// library brute force (different enumeration order, no pruning).
bool exhaustive_feasible(const Instance& inst);

// Random generators for test corpora.
struct RandomShape {
  int max_jobs = 8;
  int max_agents = 3;
  Utility max_utility = 10;
  Utility max_eta = 20;
  double edge_prob = 0.5;
  bool maybe_cap = true;
};
Instance random_instance(Rng& rng, const RandomShape& shape);
Instance random_instance_on(Rng& rng, ConflictGraph g, int agents, Utility max_utility, Utility max_eta,
                            std::optional<int> cap, bool uniform = false);
ConflictGraph random_test_graph(Rng& rng, int vertices, double edge_prob);
SbMwisInstance random_sbmwis(Rng& rng, ConflictGraph g, int max_k, Utility max_weight);
ConflictGraph random_cluster_graph(Rng& rng, int vertices, std::vector<std::vector<int>>* cliques = nullptr);
ConflictGraph graph_with_missing_edges(Rng& rng, int vertices, std::uint64_t t);

}  // namespace cffa::testing
