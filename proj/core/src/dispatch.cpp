#include "cffa/dispatch.hpp"

#include <array>
#include <numeric>

#include "cffa/color_coding.hpp"
#include "cffa/error.hpp"
#include "cffa/graph_classes.hpp"
#include "cffa/near_complete.hpp"
#include "cffa/oracle.hpp"
#include "cffa/structured.hpp"
#include "cffa/subset_convolution.hpp"
#include "stopwatch.hpp"

namespace cffa {

namespace {

constexpr std::array<std::pair<Algorithm, std::string_view>, 10> kNames{{
    {Algorithm::Auto, "auto"},
    {Algorithm::Brute, "brute"},
    {Algorithm::SubsetDp, "subsetdp"},
    {Algorithm::SubsetConv, "subsetconv"},
    {Algorithm::Color, "color"},
    {Algorithm::Complete, "complete"},
    {Algorithm::Cluster2u, "cluster2u"},
    {Algorithm::NearCompleteU, "nearcomplete_u"},
    {Algorithm::GuessTn, "guess_tn"},
    {Algorithm::PartitionT, "partition_t"},
}};

constexpr std::uint64_t kAutoMaxT = 8;
constexpr int kAutoMaxSubsetConvJobs = 22;
constexpr int kAutoMaxColors = 16;
constexpr int kAutoMaxSubsetDpJobs = 26;

}  // namespace

std::string_view to_string(Algorithm algorithm) noexcept {
  for (auto [a, name] : kNames)
    if (a == algorithm) return name;
  return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (auto [a, n] : kNames)
    if (n == name) return a;
  return std::nullopt;
}

std::pair<Algorithm, std::string> route(const Instance& inst) {
  const auto classes = detect_class(inst.conflict());
  const bool uniform = inst.uniform_utilities();
  if (classes.complete) return {Algorithm::Complete, "conflict graph is complete"};
  if (classes.cluster && classes.cluster->size() == 2 && uniform)
    return {Algorithm::Cluster2u, "two-clique cluster graph with uniform utilities"};
  if (classes.all_degrees_m_minus_2 && uniform)
    return {Algorithm::NearCompleteU, "(m-2)-regular conflict graph with uniform utilities"};
  const auto t = inst.conflict().missing_edge_count();
  if (t <= kAutoMaxT) return {Algorithm::PartitionT, "t = " + std::to_string(t) + " missing edges"};
  if (inst.job_count() <= kAutoMaxSubsetConvJobs) return {Algorithm::SubsetConv, "m <= 22"};
  if (inst.bundle_cap() && static_cast<long long>(inst.agent_count()) * *inst.bundle_cap() <= kAutoMaxColors)
    return {Algorithm::Color, "bundle cap with n*s <= 16"};
  if (inst.job_count() <= kAutoMaxSubsetDpJobs) return {Algorithm::SubsetDp, "m <= 26"};
  fail(ErrorKind::Capacity, "NO_SOLVER", "no solver applies within its size limits");
}

namespace {

SolveReport run(const Instance& inst, Algorithm algorithm, const SolverChoice& choice) {
  switch (algorithm) {
    case Algorithm::Auto: break;
    case Algorithm::Brute: return brute_force_cffa(inst);
    case Algorithm::SubsetDp: return subset_dp_cffa(inst);
    case Algorithm::SubsetConv: return solve_fpt_items(inst);
    case Algorithm::Color: {
      if (!inst.bundle_cap()) fail(ErrorKind::Routing, "CAP_REQUIRED", "color needs an instance with bundle_cap");
      if (choice.exhaustive_colorings) {
        return solve_exhaustive_colorings(inst, route_sbmwis_solver(inst.conflict()),
                                          choice.budget.value_or(10'000'000));
      }
      ColorCodingOptions options;
      options.seed = choice.seed;
      options.repetitions = choice.repetitions;
      if (choice.budget) options.budget = *choice.budget;
      return solve_color_coding(inst, options);
    }
    case Algorithm::Complete: return solve_complete_graph(inst);
    case Algorithm::Cluster2u: return solve_cluster_two_cliques_uniform(inst);
    case Algorithm::NearCompleteU: return solve_near_complete_uniform(inst);
    case Algorithm::GuessTn: {
      NearCompleteOptions options;
      if (choice.budget) options.guess_budget = *choice.budget;
      return solve_guess_per_agent(inst, options);
    }
    case Algorithm::PartitionT: return solve_partition_contract(inst);
  }
  fail(ErrorKind::Contract, "ALGORITHM", "unknown algorithm");
}

}  // namespace

SolveReport dispatch(const Instance& inst, const SolverChoice& choice) {
  detail::Stopwatch clock;
  Algorithm algorithm = choice.algorithm;
  if (algorithm == Algorithm::Auto) algorithm = route(inst).first;

  auto report = run(inst, algorithm, choice);
  if (report.feasible) {
    if (!report.certificate || !verify_allocation(inst, *report.certificate))
      fail(ErrorKind::Internal, "CERTIFICATE", std::string(to_string(algorithm)) + " produced an invalid certificate");
  } else {
    report.certificate.reset();
  }
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

std::optional<std::pair<Utility, SolveReport>> maximize_eta(const Instance& inst, const SolverChoice& choice) {
  auto at = [&](Utility eta) {
    const Instance probe(inst.agents(), inst.jobs(), inst.utilities(), inst.conflict(), eta, inst.bundle_cap());
    return dispatch(probe, choice);
  };

  // No bundle can be worth more than the agent's total utility.
  Utility upper = kMaxUtility;
  for (const auto& row : inst.utilities())
    upper = std::min(upper, std::accumulate(row.begin(), row.end(), Utility{0}));
  if (upper < 1) return std::nullopt;

  auto best = at(1);
  if (!best.feasible) return std::nullopt;
  Utility lo = 1, hi = upper;
  while (lo < hi) {
    const Utility mid = lo + (hi - lo + 1) / 2;
    auto report = at(mid);
    if (report.feasible) {
      lo = mid;
      best = std::move(report);
    } else {
      hi = mid - 1;
    }
  }
  return std::make_pair(lo, std::move(best));
}

}  // namespace cffa
