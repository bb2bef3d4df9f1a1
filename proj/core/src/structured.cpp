#include "cffa/structured.hpp"

#include "cffa/error.hpp"
#include "cffa/graph_classes.hpp"
#include "stopwatch.hpp"

namespace cffa {

std::optional<std::vector<int>> match_singletons(const Instance& inst, const std::vector<int>& agents,
                                                 const std::vector<int>& jobs) {
  BipartiteGraphView g;
  g.left_count = static_cast<int>(agents.size());
  g.right_count = static_cast<int>(jobs.size());
  for (std::size_t a = 0; a < agents.size(); ++a)
    for (std::size_t x = 0; x < jobs.size(); ++x)
      if (inst.utility(agents[a], jobs[x]) >= inst.eta())
        g.edges.emplace_back(static_cast<int>(a), static_cast<int>(x));
  const auto matching = max_bipartite_matching(g);
  if (matching.size() < agents.size()) return std::nullopt;
  std::vector<int> assigned(agents.size());
  for (auto [a, x] : matching) assigned[a] = jobs[x];
  return assigned;
}

SolveReport solve_complete_graph(const Instance& inst) {
  detail::Stopwatch clock;
  if (!inst.conflict().is_complete())
    fail(ErrorKind::Routing, "NOT_COMPLETE", "complete-graph solver needs a complete conflict graph");

  std::vector<int> agents(static_cast<std::size_t>(inst.agent_count()));
  std::vector<int> jobs(static_cast<std::size_t>(inst.job_count()));
  for (std::size_t a = 0; a < agents.size(); ++a) agents[a] = static_cast<int>(a);
  for (std::size_t x = 0; x < jobs.size(); ++x) jobs[x] = static_cast<int>(x);

  SolveReport report;
  report.algorithm = "complete";
  if (auto assigned = match_singletons(inst, agents, jobs)) {
    report.feasible = true;
    Allocation alloc;
    for (int x : *assigned) alloc.bundles.push_back({x});
    report.certificate = std::move(alloc);
  }
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

namespace {

struct UniformSplit {
  std::vector<int> high;  // jobs worth >= eta alone, ascending
  std::vector<int> low;
};

UniformSplit split_by_utility(const Instance& inst) {
  UniformSplit split;
  for (int x = 0; x < inst.job_count(); ++x)
    (inst.utility(0, x) >= inst.eta() ? split.high : split.low).push_back(x);
  return split;
}

// High-utility singletons go to the first agents, pairs to the rest.
SolveReport assemble_uniform(const Instance& inst, const UniformSplit& split,
                             const std::vector<std::pair<int, int>>& pairs, SolveReport report) {
  const auto n = static_cast<std::size_t>(inst.agent_count());
  Allocation alloc;
  for (std::size_t a = 0; a < n && a < split.high.size(); ++a) alloc.bundles.push_back({split.high[a]});
  for (std::size_t p = 0; alloc.bundles.size() < n; ++p) {
    auto [x, y] = pairs.at(p);
    alloc.bundles.push_back({std::min(x, y), std::max(x, y)});
  }
  report.feasible = true;
  report.certificate = std::move(alloc);
  return report;
}

void require_uniform(const Instance& inst, const char* solver) {
  if (!inst.uniform_utilities())
    fail(ErrorKind::Routing, "NOT_UNIFORM", std::string(solver) + " needs identical utility rows");
}

}  // namespace

SolveReport solve_cluster_two_cliques_uniform(const Instance& inst) {
  detail::Stopwatch clock;
  const auto parts = cluster_partition(inst.conflict());
  if (!parts || parts->size() != 2)
    fail(ErrorKind::Routing, "NOT_TWO_CLIQUES", "cluster2u needs a cluster graph with exactly two cliques");
  require_uniform(inst, "cluster2u");

  SolveReport report;
  report.algorithm = "cluster2u";
  const int n = inst.agent_count();
  if (n == 0) {
    report.feasible = true;
    report.certificate = Allocation{};
    return report;
  }

  const auto split = split_by_utility(inst);
  report.counters["high_utility_jobs"] = split.high.size();
  const int needed_pairs = n - static_cast<int>(split.high.size());
  if (needed_pairs <= 0) {
    report = assemble_uniform(inst, split, {}, std::move(report));
    report.elapsed_ms = clock.elapsed_ms();
    return report;
  }

  std::vector<std::pair<int, int>> pairs;
  if (inst.effective_cap() >= 2) {
    std::vector<char> in_first(static_cast<std::size_t>(inst.job_count()), 0);
    for (int x : (*parts)[0]) in_first[x] = 1;
    BipartiteGraphView g;
    std::vector<int> left, right;
    for (int x : split.low) (in_first[x] ? left : right).push_back(x);
    g.left_count = static_cast<int>(left.size());
    g.right_count = static_cast<int>(right.size());
    for (std::size_t i = 0; i < left.size(); ++i)
      for (std::size_t j = 0; j < right.size(); ++j)
        if (inst.utility(0, left[i]) + inst.utility(0, right[j]) >= inst.eta())
          g.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    for (auto [i, j] : max_bipartite_matching(g)) pairs.emplace_back(left[i], right[j]);
  }
  report.counters["matching_size"] = pairs.size();

  if (static_cast<int>(pairs.size()) >= needed_pairs) report = assemble_uniform(inst, split, pairs, std::move(report));
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

SolveReport solve_near_complete_uniform(const Instance& inst) {
  detail::Stopwatch clock;
  const int m = inst.job_count();
  bool regular = m >= 2;
  for (int x = 0; x < m && regular; ++x) regular = inst.conflict().degree(x) == m - 2;
  if (!regular) fail(ErrorKind::Routing, "NOT_NEAR_COMPLETE", "nearcomplete_u needs every job to have degree m - 2");
  require_uniform(inst, "nearcomplete_u");

  SolveReport report;
  report.algorithm = "nearcomplete_u";
  const int n = inst.agent_count();
  if (n == 0) {
    report.feasible = true;
    report.certificate = Allocation{};
    return report;
  }

  const auto split = split_by_utility(inst);
  report.counters["high_utility_jobs"] = split.high.size();
  std::vector<char> low(static_cast<std::size_t>(m), 0);
  for (int x : split.low) low[x] = 1;

  std::vector<std::pair<int, int>> pairs;
  if (inst.effective_cap() >= 2) {
    for (int x = 0; x < m; ++x)
      for (int y = x + 1; y < m; ++y)
        if (!inst.conflict().adjacent(x, y) && low[x] && low[y] &&
            inst.utility(0, x) + inst.utility(0, y) >= inst.eta())
          pairs.emplace_back(x, y);
  }
  report.counters["qualifying_pairs"] = pairs.size();

  if (split.high.size() + pairs.size() >= static_cast<std::size_t>(n))
    report = assemble_uniform(inst, split, pairs, std::move(report));
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

}  // namespace cffa
