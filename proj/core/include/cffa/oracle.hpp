#pragma once

// Exhaustive reference solvers. They are slow on purpose and serve as ground
// truth for every other algorithm in the suite.

#include "cffa/model.hpp"
#include "cffa/sbmwis_types.hpp"

namespace cffa {

// Tries every map from jobs to {agent 0, ..., agent n-1, unassigned}, in
// lexicographic order of the target vector (job 0 most significant, agents in
// index order, "unassigned" last). Returns the first feasible allocation.
SolveReport brute_force_cffa(const Instance& inst);

// Scans every vertex subset of size <= size_cap. The witness has maximum
// weight among independent sets of size <= size_cap, ties broken towards the
// lexicographically smallest sorted vertex list; feasible iff its weight
// reaches the target. Graphs are limited to 30 vertices.
SbMwisResult brute_force_sbmwis(const SbMwisInstance& inst);

// 3^m dynamic program: layer i marks the job masks M from which agents
// 0..i-1 can all be served. Rejects m > 62 (mask width) and tables above
// 2^26 entries.
SolveReport subset_dp_cffa(const Instance& inst);

}  // namespace cffa
