#pragma once

// Benchmark spec:
//   {"rows": [{"generator": "random" | "cluster" | "near-complete" | "regular",
//              "jobs": int, "edge_prob": number, "clique_sizes": [int], "t": int,
//              "agents": int, "u_max": int, "eta": int, "bundle_cap": int | null,
//              "uniform": bool, "seed": int,
//              "solver": str, "solver_seed": int, "repetitions": int}]}
// Every row field except "generator" and "solver" has a default. A missing
// "rows" key (or an empty array) yields a header-only table.

#include <string>
#include <string_view>
#include <vector>

namespace cffa {

struct BenchRow {
  std::vector<std::string> cells;  // aligned with bench_columns()
};

struct BenchTable {
  std::vector<BenchRow> rows;
  std::string to_csv() const;
};

const std::vector<std::string>& bench_columns();

// Runs every row `repetitions` times and reports the median elapsed time.
// A row whose generator or solver fails gets verdict "error" and the error
// code in the last column; later rows still run. Malformed spec documents
// throw Error(Parse).
BenchTable run_bench(std::string_view spec_json);

}  // namespace cffa
