#pragma once

// JSON document formats.
//
// Instance:
//   {"agents": [str], "jobs": [str], "utilities": [[int]],
//    "edges": [[i, j]] (0-based job indices, i < j), "eta": int,
//    "bundle_cap": int | null}
//
// Certificate (a solve report is a certificate with extra fields):
//   {"feasible": bool, "assignment": {agent: [job, ...]} | null,
//    "algorithm": str, "counters": {str: int}, "elapsed_ms": number}
//
// Parse failures throw Error(Parse) with a stable code and a JSON-pointer
// (or line:column for syntax errors) in Error::where().

#include <optional>
#include <string>
#include <string_view>

#include "cffa/model.hpp"
#include "cffa/reductions.hpp"
#include "cffa/sbmwis_types.hpp"

namespace cffa {

Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& inst);

struct Certificate {
  bool feasible = false;
  std::optional<Allocation> allocation;
};

// Agent and job names are resolved against `inst`; unknown names throw
// Error(MalformedCertificate).
Certificate parse_certificate(std::string_view text, const Instance& inst);

// `with_elapsed = false` drops the timing field, which is the only
// non-deterministic part of a report.
std::string serialize_report(const Instance& inst, const SolveReport& report, bool with_elapsed = true);

// Source documents for the `reduce` command:
//   3-Partition:   {"sizes": [int], "bound": int}
//   Numerical 3DM: {"x": [int], "y": [int], "z": [int], "bound": int}
//   Graph + k:     {"vertices": int, "edges": [[i, j]], "k": int}
//   Sb-MWIS:       {"vertices": int, "edges": [[i, j]], "weights": [int], "k": int, "rho": int}
ThreePartitionInstance parse_three_partition(std::string_view text);
Numerical3DMInstance parse_numerical_3dm(std::string_view text);
std::pair<ConflictGraph, int> parse_graph_with_k(std::string_view text);
SbMwisInstance parse_sbmwis(std::string_view text);

}  // namespace cffa
