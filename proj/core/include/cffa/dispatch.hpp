#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "cffa/model.hpp"

namespace cffa {

enum class Algorithm {
  Auto,
  Brute,
  SubsetDp,
  SubsetConv,
  Color,
  Complete,
  Cluster2u,
  NearCompleteU,
  GuessTn,
  PartitionT,
};

std::string_view to_string(Algorithm algorithm) noexcept;
std::optional<Algorithm> parse_algorithm(std::string_view name);

struct SolverChoice {
  Algorithm algorithm = Algorithm::Auto;
  std::uint64_t seed = 0;
  // Color coding: fixed number of colorings instead of the 2^-40 default.
  std::optional<std::uint64_t> repetitions;
  // Color coding repetitions / guess_tn guess vectors.
  std::optional<std::uint64_t> budget;
  // Color coding: enumerate every coloring instead of sampling.
  bool exhaustive_colorings = false;
};

// The solver `auto` would run on this instance, with the reason. Checks run
// in order: complete graph, two-clique cluster with uniform utilities,
// (m-2)-regular with uniform utilities, t <= 8, m <= 22, capped with
// n*s <= 16, m <= 26 (subset DP). Throws Error(Capacity) when nothing applies.
std::pair<Algorithm, std::string> route(const Instance& inst);

// Runs the chosen solver (after routing, for `auto`). Explicit choices whose
// preconditions fail raise Error(Routing). Every feasible report is
// re-verified; a rejected certificate raises Error(Internal).
SolveReport dispatch(const Instance& inst, const SolverChoice& choice);

// Largest eta in [1, upper] for which `choice` answers yes, found by binary
// search (feasibility is monotone in eta). nullopt when even eta = 1 fails.
std::optional<std::pair<Utility, SolveReport>> maximize_eta(const Instance& inst, const SolverChoice& choice);

}  // namespace cffa
