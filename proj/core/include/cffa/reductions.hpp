#pragma once

// Instance encoders from classic hard problems, plus seeded random generators.
// The encoders double as structured test fixtures: each maps yes-instances of
// the source problem to yes-instances of allocation and no to no.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cffa/model.hpp"
#include "cffa/sbmwis_types.hpp"

namespace cffa {

// 3m' element sizes and a bound B with B/4 < s < B/2 and sum = m' B.
struct ThreePartitionInstance {
  std::vector<Utility> sizes;
  Utility bound = 0;

  void validate() const;  // throws Error(Contract, "SOURCE_INVARIANT")
};

// Three lists of m' sizes whose grand total is m' B.
struct Numerical3DMInstance {
  std::vector<Utility> sizes_x;
  std::vector<Utility> sizes_y;
  std::vector<Utility> sizes_z;
  Utility bound = 0;

  void validate() const;  // throws Error(Contract, "SOURCE_INVARIANT")
};

// m' agents, edgeless conflicts, u(x) = B - s(x) for every agent, eta = 2B.
// The utility bounds force every bundle to be a triple summing to B.
Instance from_3partition(const ThreePartitionInstance& src);

// m' agents, conflicts are the three cliques X, Y, Z, u(j) = s(j), eta = B.
Instance from_numerical_3dm(const Numerical3DMInstance& src);

// One agent with unit utilities over the vertices of g; eta = cap = k.
Instance from_independent_set(const ConflictGraph& g, int k);

// Target 0 cannot be expressed since eta >= 1. Strict rejects it; lenient
// raises it to 1 and appends a warning.
enum class EtaPolicy { Strict, Lenient };

// One agent with u = w, conflicts = G, cap = k, eta = rho.
Instance from_sbmwis(const SbMwisInstance& src, EtaPolicy policy = EtaPolicy::Strict,
                     std::vector<std::string>* warnings = nullptr);

// ---------------------------------------------------------------------------
// Generators. All of them are pure functions of their arguments; the seed
// drives an Rng (see rng.hpp).

struct GeneratorOptions {
  int agents = 2;
  Utility u_max = 10;
  Utility eta = 1;
  std::optional<int> bundle_cap;
  bool uniform = false;  // one shared utility row
  std::uint64_t seed = 0;
};

// Each job pair conflicts independently with probability edge_prob. Draw
// order: edges in lexicographic pair order, then utilities row by row.
Instance gen_random(int jobs, double edge_prob, const GeneratorOptions& options);

struct ClusterInstance {
  Instance instance;
  std::vector<std::vector<int>> cliques;  // consecutive job ranges
};

ClusterInstance gen_cluster(const std::vector<int>& clique_sizes, const GeneratorOptions& options);

// K_m with exactly t randomly chosen edges removed. Throws Error(Contract)
// when t > C(m, 2).
Instance gen_near_complete(int jobs, std::uint64_t t, const GeneratorOptions& options);

// K_m minus a random perfect matching, so every job has degree m - 2.
// Requires even m >= 2.
Instance gen_near_complete_regular(int jobs, const GeneratorOptions& options);

// Graph-only generators for the Sb-MWIS layer.
ConflictGraph random_graph(int vertices, double edge_prob, std::uint64_t seed);
ConflictGraph random_bipartite_graph(int vertices, double edge_prob, std::uint64_t seed);
// Every vertex attaches to at most d earlier vertices in a random order.
ConflictGraph random_degenerate_graph(int vertices, int d, std::uint64_t seed);

}  // namespace cffa
