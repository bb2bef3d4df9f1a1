#pragma once

// Color coding for allocation with a bundle cap s. Jobs are colored with n*s
// colors; an allocation is colorful when all of its jobs get distinct colors.
// A dynamic program over (agent prefix, color set) decides whether a colorful
// allocation exists, asking an Sb-MWIS solver whether agent a can be served
// from the jobs whose colors lie in a given set. Bundles built from disjoint
// color sets are disjoint, so every "yes" is genuine; a random coloring is
// colorful for a fixed solution with probability at least e^-(n*s).

#include <cstdint>
#include <optional>
#include <vector>

#include "cffa/model.hpp"
#include "cffa/sbmwis.hpp"

namespace cffa {

struct Coloring {
  int color_count = 0;
  std::vector<int> colors;  // colors[job] in [0, color_count)
};

struct ColorfulOutcome {
  bool feasible = false;
  std::optional<Allocation> allocation;
  std::uint64_t sbmwis_calls = 0;
  std::uint64_t dp_cells = 0;
};

inline constexpr int kMaxColors = 20;

// Requires a bundle cap, n*s <= 20 colors and a coloring of every job with
// exactly n*s colors.
ColorfulOutcome dp_colorful(const Instance& inst, const Coloring& coloring, const SbMwisSolver& solver);

// ceil(e^colors * ln(2^40)): enough independent colorings that a yes-instance
// is missed with probability at most 2^-40.
std::uint64_t default_repetitions(int colors);

struct ColorCodingOptions {
  std::uint64_t seed = 0;
  // Defaults to default_repetitions(n*s), clipped to `budget`.
  std::optional<std::uint64_t> repetitions;
  std::uint64_t budget = 10'000'000;
};

// Draws colorings from Rng(seed) and stops at the first colorful success.
// Counters: colorings_tried, repetitions_planned, budget_clipped (1 when the
// failure bound had to be relaxed to respect the budget).
SolveReport solve_color_coding(const Instance& inst, const ColorCodingOptions& options, const SbMwisSolver& solver);
SolveReport solve_color_coding(const Instance& inst, const ColorCodingOptions& options = {});

// Runs the DP on all (n*s)^m colorings, which makes the search complete.
// Throws Error(Capacity) when (n*s)^m exceeds `max_colorings`.
SolveReport solve_exhaustive_colorings(const Instance& inst, const SbMwisSolver& solver,
                                       std::uint64_t max_colorings = 10'000'000);
SolveReport solve_exhaustive_colorings(const Instance& inst);

}  // namespace cffa
