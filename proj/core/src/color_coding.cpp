#include "cffa/color_coding.hpp"

#include <cmath>
#include <unordered_map>

#include "cffa/error.hpp"
#include "cffa/rng.hpp"
#include "stopwatch.hpp"

namespace cffa {

namespace {

void check_colorable(const Instance& inst) {
  if (!inst.bundle_cap())
    fail(ErrorKind::Contract, "CAP_REQUIRED", "color coding needs a bundle cap");
  if (static_cast<long long>(inst.agent_count()) * *inst.bundle_cap() > kMaxColors)
    fail(ErrorKind::Capacity, "COLOR_LIMIT", "n * s exceeds 20 colors");
  if (inst.job_count() > 64) fail(ErrorKind::Capacity, "MASK_WIDTH", "color coding supports at most 64 jobs");
}

// Decides "can agent a be served from this job set" through the injected
// Sb-MWIS solver, memoized on (agent, job set) across colorings.
class BundleOracle {
 public:
  BundleOracle(const Instance& inst, const SbMwisSolver& solver)
      : inst_(inst), solver_(solver), memo_(static_cast<std::size_t>(inst.agent_count())) {}

  // Returns the witness bundle, or nullopt.
  std::optional<JobMask> bundle(int agent, JobMask jobs) {
    if (jobs == 0) return std::nullopt;
    auto& memo = memo_[agent];
    if (auto it = memo.find(jobs); it != memo.end()) return it->second;

    const auto vertices = elements_of(jobs);
    SbMwisInstance sub;
    sub.graph = inst_.conflict().induced(vertices);
    for (int x : vertices) sub.weights.push_back(inst_.utility(agent, x));
    sub.size_cap = std::min(*inst_.bundle_cap(), static_cast<int>(vertices.size()));
    sub.target = static_cast<std::int64_t>(inst_.eta());
    ++calls_;
    const auto result = solver_(sub);

    std::optional<JobMask> answer;
    if (result.feasible) {
      if (!result.witness) fail(ErrorKind::Internal, "SBMWIS_WITNESS", "Sb-MWIS solver returned no witness");
      JobMask chosen = 0;
      for (int i : *result.witness) chosen |= JobMask{1} << vertices.at(static_cast<std::size_t>(i));
      if (chosen == 0 || popcount(chosen) > *inst_.bundle_cap() || !inst_.conflict().independent_mask(chosen) ||
          bundle_utility(inst_, agent, chosen) < inst_.eta())
        fail(ErrorKind::Internal, "SBMWIS_WITNESS", "Sb-MWIS witness is not a feasible bundle");
      answer = chosen;
    }
    memo.emplace(jobs, answer);
    return answer;
  }

  std::uint64_t calls() const noexcept { return calls_; }

 private:
  const Instance& inst_;
  const SbMwisSolver& solver_;
  std::vector<std::unordered_map<JobMask, std::optional<JobMask>>> memo_;
  std::uint64_t calls_ = 0;
};

ColorfulOutcome run_colorful_dp(const Instance& inst, const Coloring& coloring, BundleOracle& oracle) {
  const int n = inst.agent_count();
  const int colors = coloring.color_count;
  if (colors != n * *inst.bundle_cap())
    fail(ErrorKind::Contract, "COLORING", "coloring must use exactly n * s colors");
  if (static_cast<int>(coloring.colors.size()) != inst.job_count())
    fail(ErrorKind::Contract, "COLORING", "coloring must color every job");

  ColorfulOutcome outcome;
  if (n == 0) {
    outcome.feasible = true;
    outcome.allocation = Allocation{};
    return outcome;
  }

  std::vector<JobMask> jobs_with_color(static_cast<std::size_t>(colors), 0);
  for (int x = 0; x < inst.job_count(); ++x) {
    const int c = coloring.colors[x];
    if (c < 0 || c >= colors) fail(ErrorKind::Contract, "COLORING", "color out of range");
    jobs_with_color[c] |= JobMask{1} << x;
  }
  const std::size_t sets = std::size_t{1} << colors;
  std::vector<JobMask> jobs_of(sets, 0);
  for (std::size_t s = 1; s < sets; ++s)
    jobs_of[s] = jobs_of[s & (s - 1)] | jobs_with_color[std::countr_zero(s)];

  const std::uint64_t calls_before = oracle.calls();
  // table[i][S]: agents 0..i served colorfully with colors inside S.
  // split[i][S]: the colors S' left to agents 0..i-1 (agent i uses S \ S').
  std::vector<std::vector<std::uint8_t>> table(static_cast<std::size_t>(n), std::vector<std::uint8_t>(sets, 0));
  std::vector<std::vector<std::uint32_t>> split(static_cast<std::size_t>(n), std::vector<std::uint32_t>(sets, 0));
  for (std::size_t s = 1; s < sets; ++s) {
    ++outcome.dp_cells;
    table[0][s] = oracle.bundle(0, jobs_of[s]).has_value();
  }
  for (int i = 1; i < n; ++i) {
    for (std::size_t s = 1; s < sets; ++s) {
      ++outcome.dp_cells;
      for (std::size_t sub = (s - 1) & s; sub != 0; sub = (sub - 1) & s) {
        if (table[i - 1][sub] && oracle.bundle(i, jobs_of[s ^ sub])) {
          table[i][s] = 1;
          split[i][s] = static_cast<std::uint32_t>(sub);
          break;
        }
      }
    }
  }

  std::size_t final_set = 1;
  while (final_set < sets && !table[n - 1][final_set]) ++final_set;
  outcome.sbmwis_calls = oracle.calls() - calls_before;
  if (final_set == sets) return outcome;

  Allocation alloc;
  alloc.bundles.resize(static_cast<std::size_t>(n));
  std::size_t s = final_set;
  for (int i = n - 1; i >= 0; --i) {
    const std::size_t rest = i == 0 ? 0 : split[i][s];
    const auto bundle = oracle.bundle(i, jobs_of[s ^ rest]);
    if (!bundle) fail(ErrorKind::Internal, "COLOR_BACKTRACK", "predecessor link points at an infeasible cell");
    alloc.bundles[i] = elements_of(*bundle);
    s = rest;
  }
  outcome.feasible = true;
  outcome.allocation = std::move(alloc);
  return outcome;
}

}  // namespace

ColorfulOutcome dp_colorful(const Instance& inst, const Coloring& coloring, const SbMwisSolver& solver) {
  check_colorable(inst);
  BundleOracle oracle(inst, solver);
  return run_colorful_dp(inst, coloring, oracle);
}

std::uint64_t default_repetitions(int colors) {
  return static_cast<std::uint64_t>(std::ceil(std::exp(static_cast<double>(colors)) * 40.0 * std::log(2.0)));
}

SolveReport solve_color_coding(const Instance& inst, const ColorCodingOptions& options, const SbMwisSolver& solver) {
  detail::Stopwatch clock;
  check_colorable(inst);
  const int colors = inst.agent_count() * *inst.bundle_cap();

  std::uint64_t planned = options.repetitions.value_or(default_repetitions(colors));
  bool clipped = false;
  if (planned > options.budget) {
    planned = options.budget;
    clipped = true;
  }
  if (planned == 0 && colors > 0) fail(ErrorKind::Contract, "REPETITIONS", "at least one repetition is required");

  SolveReport report;
  report.algorithm = "color";
  if (colors == 0) {
    report.feasible = true;
    report.certificate = Allocation{};
    return report;
  }
  BundleOracle oracle(inst, solver);
  Rng rng(options.seed);
  Coloring coloring{colors, std::vector<int>(static_cast<std::size_t>(inst.job_count()), 0)};
  std::uint64_t tried = 0;
  std::uint64_t cells = 0;
  while (tried < planned) {
    for (int& c : coloring.colors) c = static_cast<int>(rng.below(static_cast<std::uint64_t>(colors)));
    ++tried;
    auto outcome = run_colorful_dp(inst, coloring, oracle);
    cells += outcome.dp_cells;
    if (outcome.feasible) {
      report.feasible = true;
      report.certificate = std::move(outcome.allocation);
      break;
    }
  }
  report.counters["colorings_tried"] = tried;
  report.counters["repetitions_planned"] = planned;
  report.counters["budget_clipped"] = clipped ? 1 : 0;
  report.counters["dp_cells"] = cells;
  report.counters["sbmwis_calls"] = oracle.calls();
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

SolveReport solve_color_coding(const Instance& inst, const ColorCodingOptions& options) {
  return solve_color_coding(inst, options, route_sbmwis_solver(inst.conflict()));
}

SolveReport solve_exhaustive_colorings(const Instance& inst, const SbMwisSolver& solver, std::uint64_t max_colorings) {
  detail::Stopwatch clock;
  check_colorable(inst);
  const int colors = inst.agent_count() * *inst.bundle_cap();
  const int m = inst.job_count();
  if (colors == 0) {
    SolveReport report;
    report.algorithm = "color-exhaustive";
    report.feasible = true;
    report.certificate = Allocation{};
    return report;
  }

  std::uint64_t total = 1;
  for (int x = 0; x < m; ++x) {
    if (total > max_colorings / static_cast<std::uint64_t>(colors))
      fail(ErrorKind::Capacity, "COLORING_BUDGET", "(n*s)^m colorings exceed the exhaustive budget");
    total *= static_cast<std::uint64_t>(colors);
  }

  SolveReport report;
  report.algorithm = "color-exhaustive";
  BundleOracle oracle(inst, solver);
  Coloring coloring{colors, std::vector<int>(static_cast<std::size_t>(m), 0)};
  std::uint64_t tried = 0;
  std::uint64_t cells = 0;
  while (true) {
    ++tried;
    auto outcome = run_colorful_dp(inst, coloring, oracle);
    cells += outcome.dp_cells;
    if (outcome.feasible) {
      report.feasible = true;
      report.certificate = std::move(outcome.allocation);
      break;
    }
    // Odometer with job 0 as the most significant digit.
    int pos = m - 1;
    while (pos >= 0 && coloring.colors[pos] == colors - 1) coloring.colors[pos--] = 0;
    if (pos < 0) break;
    ++coloring.colors[pos];
  }
  report.counters["colorings_tried"] = tried;
  report.counters["dp_cells"] = cells;
  report.counters["sbmwis_calls"] = oracle.calls();
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

SolveReport solve_exhaustive_colorings(const Instance& inst) {
  return solve_exhaustive_colorings(inst, route_sbmwis_solver(inst.conflict()));
}

}  // namespace cffa
