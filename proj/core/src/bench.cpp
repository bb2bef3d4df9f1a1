#include "cffa/bench.hpp"

#include <algorithm>
#include <cstdio>

#include <json.hpp>

#include "cffa/dispatch.hpp"
#include "cffa/error.hpp"
#include "cffa/reductions.hpp"

namespace cffa {

using json = nlohmann::ordered_json;

namespace {

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

[[noreturn]] void spec_fail(const std::string& code, const std::string& message, const std::string& where) {
  fail(ErrorKind::Parse, code, message, where);
}

template <typename T>
T get_or(const json& row, const char* key, T fallback, const std::string& where) {
  auto it = row.find(key);
  if (it == row.end() || it->is_null()) return fallback;
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    spec_fail("FIELD_TYPE", std::string("bad type for '") + key + "'", where + "/" + key);
  }
}

std::string join(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ";" : "") + std::to_string(values[i]);
  return out;
}

std::string format_number(const char* format, double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, format, value);
  return buf;
}

struct RowSpec {
  std::string generator;
  int jobs = 0;
  double edge_prob = 0.5;
  std::vector<int> clique_sizes;
  std::uint64_t t = 0;
  GeneratorOptions options;
  std::string solver;
  std::uint64_t solver_seed = 0;
  int repetitions = 1;
};

RowSpec read_row(const json& row, const std::string& where) {
  if (!row.is_object()) spec_fail("FIELD_TYPE", "bench rows must be objects", where);
  RowSpec spec;
  spec.generator = get_or<std::string>(row, "generator", "", where);
  spec.solver = get_or<std::string>(row, "solver", "", where);
  if (spec.generator.empty()) spec_fail("MISSING_FIELD", "missing field 'generator'", where + "/generator");
  if (spec.solver.empty()) spec_fail("MISSING_FIELD", "missing field 'solver'", where + "/solver");
  spec.jobs = get_or<int>(row, "jobs", 0, where);
  spec.edge_prob = get_or<double>(row, "edge_prob", 0.5, where);
  spec.clique_sizes = get_or<std::vector<int>>(row, "clique_sizes", {}, where);
  spec.t = get_or<std::uint64_t>(row, "t", 0, where);
  spec.options.agents = get_or<int>(row, "agents", 2, where);
  spec.options.u_max = get_or<Utility>(row, "u_max", 10, where);
  spec.options.eta = get_or<Utility>(row, "eta", 1, where);
  if (auto it = row.find("bundle_cap"); it != row.end() && !it->is_null())
    spec.options.bundle_cap = get_or<int>(row, "bundle_cap", 0, where);
  spec.options.uniform = get_or<bool>(row, "uniform", false, where);
  spec.options.seed = get_or<std::uint64_t>(row, "seed", 0, where);
  spec.solver_seed = get_or<std::uint64_t>(row, "solver_seed", 0, where);
  spec.repetitions = get_or<int>(row, "repetitions", 1, where);
  if (spec.repetitions < 1) spec_fail("INT_RANGE", "repetitions must be positive", where + "/repetitions");
  return spec;
}

Instance generate(const RowSpec& spec) {
  if (spec.generator == "random") return gen_random(spec.jobs, spec.edge_prob, spec.options);
  if (spec.generator == "cluster") return gen_cluster(spec.clique_sizes, spec.options).instance;
  if (spec.generator == "near-complete") return gen_near_complete(spec.jobs, spec.t, spec.options);
  if (spec.generator == "regular") return gen_near_complete_regular(spec.jobs, spec.options);
  fail(ErrorKind::Contract, "GEN_KIND", "unknown generator '" + spec.generator + "'");
}

BenchRow run_row(const RowSpec& spec) {
  std::vector<std::string> cells{
      spec.generator,
      std::to_string(spec.jobs),
      std::to_string(spec.options.agents),
      format_number("%g", spec.edge_prob),
      std::to_string(spec.t),
      join(spec.clique_sizes),
      std::to_string(spec.options.u_max),
      std::to_string(spec.options.eta),
      spec.options.bundle_cap ? std::to_string(*spec.options.bundle_cap) : "",
      spec.options.uniform ? "1" : "0",
      std::to_string(spec.options.seed),
      spec.solver,
      std::to_string(spec.solver_seed),
      std::to_string(spec.repetitions),
  };
  std::string verdict, algorithm, counters, elapsed, error;
  try {
    const auto choice_alg = parse_algorithm(spec.solver);
    if (!choice_alg) fail(ErrorKind::Routing, "UNKNOWN_SOLVER", "unknown solver '" + spec.solver + "'");
    const Instance inst = generate(spec);
    SolverChoice choice;
    choice.algorithm = *choice_alg;
    choice.seed = spec.solver_seed;
    std::vector<double> times;
    SolveReport report;
    for (int r = 0; r < spec.repetitions; ++r) {
      report = dispatch(inst, choice);
      times.push_back(report.elapsed_ms);
    }
    std::sort(times.begin(), times.end());
    const std::size_t mid = times.size() / 2;
    const double median = times.size() % 2 ? times[mid] : (times[mid - 1] + times[mid]) / 2;
    verdict = report.feasible ? "yes" : "no";
    algorithm = report.algorithm;
    for (const auto& [name, value] : report.counters)
      counters += (counters.empty() ? "" : ";") + name + "=" + std::to_string(value);
    elapsed = format_number("%.3f", median);
  } catch (const Error& e) {
    verdict = "error";
    error = e.code();
  }
  for (auto* cell : {&verdict, &algorithm, &counters, &elapsed, &error}) cells.push_back(std::move(*cell));
  return {std::move(cells)};
}

}  // namespace

const std::vector<std::string>& bench_columns() {
  static const std::vector<std::string> columns{
      "generator", "jobs",   "agents",      "edge_prob",   "t",         "clique_sizes", "u_max",
      "eta",       "bundle_cap", "uniform", "seed",        "solver",    "solver_seed",  "repetitions",
      "verdict",   "algorithm",  "counters", "elapsed_ms_median", "error",
  };
  return columns;
}

std::string BenchTable::to_csv() const {
  std::string out;
  const auto write = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + csv_escape(cells[i]);
    out += "\n";
  };
  write(bench_columns());
  for (const auto& row : rows) write(row.cells);
  return out;
}

BenchTable run_bench(std::string_view spec_json) {
  json doc;
  try {
    doc = json::parse(spec_json);
  } catch (const json::parse_error& e) {
    spec_fail("JSON_SYNTAX", e.what(), "");
  }
  if (!doc.is_object()) spec_fail("FIELD_TYPE", "bench spec must be a JSON object", "");
  BenchTable table;
  auto it = doc.find("rows");
  if (it == doc.end()) return table;
  if (!it->is_array()) spec_fail("FIELD_TYPE", "rows must be an array", "/rows");
  std::vector<RowSpec> specs;
  for (std::size_t i = 0; i < it->size(); ++i) specs.push_back(read_row((*it)[i], "/rows/" + std::to_string(i)));
  for (const auto& spec : specs) table.rows.push_back(run_row(spec));
  return table;
}

}  // namespace cffa
