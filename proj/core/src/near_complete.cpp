#include "cffa/near_complete.hpp"

#include <algorithm>
#include <functional>

#include "cffa/error.hpp"
#include "cffa/graph_classes.hpp"
#include "cffa/structured.hpp"
#include "stopwatch.hpp"

namespace cffa {

int ceil_sqrt(std::uint64_t t) {
  std::uint64_t r = 0;
  while (r * r < t) ++r;
  return static_cast<int>(r);
}

ComplementView complement_view(const ConflictGraph& g) {
  ComplementView view;
  view.vertex_count = g.vertex_count();
  const auto complement = g.complement();
  view.complement_edges = complement.edges();
  for (int v = 0; v < g.vertex_count(); ++v)
    if (complement.degree(v) > 0) view.non_isolated.push_back(v);

  const auto local = complement.induced(view.non_isolated);
  const auto order = degeneracy_order(local);
  view.degeneracy = order.degeneracy;
  for (int i : order.order) view.degeneracy_order.push_back(view.non_isolated[i]);
  return view;
}

std::vector<std::vector<int>> enumerate_nontrivial_independent_sets(const ConflictGraph& g,
                                                                    std::uint64_t max_missing_edges) {
  const std::uint64_t t = g.missing_edge_count();
  if (t > max_missing_edges)
    fail(ErrorKind::Capacity, "T_LIMIT", "too many non-conflicting pairs (t = " + std::to_string(t) + ")");

  const auto view = complement_view(g);
  std::vector<int> position(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t p = 0; p < view.degeneracy_order.size(); ++p) position[view.degeneracy_order[p]] = static_cast<int>(p);

  std::vector<std::vector<int>> out;
  std::vector<int> clique;
  for (int v : view.degeneracy_order) {
    // Each independent set is produced once, from its earliest vertex in the order.
    std::vector<int> forward;
    for (int u : view.non_isolated)
      if (u != v && position[u] > position[v] && !g.adjacent(u, v)) forward.push_back(u);

    clique.assign(1, v);
    std::function<void(std::size_t)> extend = [&](std::size_t from) {
      for (std::size_t i = from; i < forward.size(); ++i) {
        const int u = forward[i];
        if (std::any_of(clique.begin() + 1, clique.end(), [&](int c) { return g.adjacent(c, u); })) continue;
        clique.push_back(u);
        auto sorted = clique;
        std::sort(sorted.begin(), sorted.end());
        out.push_back(std::move(sorted));
        extend(i + 1);
        clique.pop_back();
      }
    };
    extend(0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

SolveReport delegate_complete(const Instance& inst, const char* name) {
  auto report = solve_complete_graph(inst);
  report.algorithm = name;
  return report;
}

}  // namespace

SolveReport solve_guess_per_agent(const Instance& inst, const NearCompleteOptions& options) {
  detail::Stopwatch clock;
  if (inst.conflict().is_complete()) return delegate_complete(inst, "guess_tn");

  const int n = inst.agent_count();
  const int m = inst.job_count();
  const auto sets = enumerate_nontrivial_independent_sets(inst.conflict());

  // Candidate sets per agent: those that fit the cap and reach eta for that agent.
  std::vector<std::vector<const std::vector<int>*>> candidates(static_cast<std::size_t>(n));
  std::uint64_t space = 1;
  for (int a = 0; a < n; ++a) {
    for (const auto& s : sets)
      if (static_cast<int>(s.size()) <= inst.effective_cap() && bundle_utility(inst, a, std::span<const int>(s)) >= inst.eta())
        candidates[a].push_back(&s);
    const std::uint64_t choices = candidates[a].size() + 1;
    if (space > options.guess_budget / choices)
      fail(ErrorKind::Capacity, "GUESS_BUDGET", "guess space exceeds the budget; try partition_t");
    space *= choices;
  }

  SolveReport report;
  report.algorithm = "guess_tn";
  std::vector<char> used(static_cast<std::size_t>(m), 0);
  std::vector<const std::vector<int>*> guess(static_cast<std::size_t>(n), nullptr);
  std::uint64_t guesses = 0;

  // Choice order per agent: singleton first, then candidate sets in lexicographic order.
  std::function<bool(int)> search = [&](int a) -> bool {
    if (a == n) {
      ++guesses;
      std::vector<int> rest_agents, rest_jobs;
      for (int b = 0; b < n; ++b)
        if (!guess[b]) rest_agents.push_back(b);
      for (int x = 0; x < m; ++x)
        if (!used[x]) rest_jobs.push_back(x);
      const auto singles = match_singletons(inst, rest_agents, rest_jobs);
      if (!singles) return false;
      Allocation alloc;
      alloc.bundles.resize(static_cast<std::size_t>(n));
      for (int b = 0; b < n; ++b)
        if (guess[b]) alloc.bundles[b] = *guess[b];
      for (std::size_t i = 0; i < rest_agents.size(); ++i) alloc.bundles[rest_agents[i]] = {(*singles)[i]};
      report.feasible = true;
      report.certificate = std::move(alloc);
      return true;
    }
    guess[a] = nullptr;
    if (search(a + 1)) return true;
    for (const auto* s : candidates[a]) {
      if (std::any_of(s->begin(), s->end(), [&](int x) { return used[x] != 0; })) continue;
      for (int x : *s) used[x] = 1;
      guess[a] = s;
      if (search(a + 1)) return true;
      for (int x : *s) used[x] = 0;
      guess[a] = nullptr;
    }
    return false;
  };
  search(0);

  report.counters["nontrivial_independent_sets"] = sets.size();
  report.counters["guesses"] = guesses;
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

SolveReport solve_partition_contract(const Instance& inst, const NearCompleteOptions& options) {
  detail::Stopwatch clock;
  const std::uint64_t t = inst.conflict().missing_edge_count();
  if (t > options.max_missing_edges)
    fail(ErrorKind::Capacity, "T_LIMIT", "partition_t is capped at t = " + std::to_string(options.max_missing_edges));
  if (t == 0) return delegate_complete(inst, "partition_t");

  const int n = inst.agent_count();
  const int m = inst.job_count();
  const auto& g = inst.conflict();
  const auto view = complement_view(g);
  const auto& pool = view.non_isolated;
  const int cap = inst.effective_cap();

  SolveReport report;
  report.algorithm = "partition_t";
  std::vector<std::vector<int>> classes;          // Large_1 .. Large_l
  std::uint64_t labelings = 0;
  std::uint64_t valid = 0;

  auto try_labeling = [&]() -> bool {
    ++valid;
    // Contracted jobs: one per class, then every job outside the classes.
    std::vector<std::vector<int>> super_jobs = classes;
    std::vector<char> grouped(static_cast<std::size_t>(m), 0);
    for (const auto& c : classes)
      for (int x : c) grouped[x] = 1;
    for (int x = 0; x < m; ++x)
      if (!grouped[x]) super_jobs.push_back({x});

    BipartiteGraphView bg;
    bg.left_count = n;
    bg.right_count = static_cast<int>(super_jobs.size());
    for (int a = 0; a < n; ++a)
      for (std::size_t j = 0; j < super_jobs.size(); ++j)
        if (bundle_utility(inst, a, std::span<const int>(super_jobs[j])) >= inst.eta())
          bg.edges.emplace_back(a, static_cast<int>(j));
    const auto matching = max_bipartite_matching(bg);
    if (static_cast<int>(matching.size()) < n) return false;

    Allocation alloc;
    alloc.bundles.resize(static_cast<std::size_t>(n));
    for (auto [a, j] : matching) alloc.bundles[a] = super_jobs[j];
    report.feasible = true;
    report.certificate = std::move(alloc);
    return true;
  };

  // Restricted growth strings: a vertex joins notLarge, an open class, or
  // opens the next class. Classes stay independent and within the cap.
  std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
    if (i == pool.size()) {
      ++labelings;
      if (std::any_of(classes.begin(), classes.end(), [](const auto& c) { return c.size() < 2; })) return false;
      return try_labeling();
    }
    const int v = pool[i];
    if (assign(i + 1)) return true;
    for (std::size_t c = 0; c < classes.size(); ++c) {
      auto& members = classes[c];
      if (static_cast<int>(members.size()) >= cap) continue;
      if (std::any_of(members.begin(), members.end(), [&](int x) { return g.adjacent(x, v); })) continue;
      members.push_back(v);
      if (assign(i + 1)) return true;
      members.pop_back();
    }
    if (classes.size() < t && cap >= 2) {
      classes.push_back({v});
      if (assign(i + 1)) return true;
      classes.pop_back();
    }
    return false;
  };
  assign(0);

  report.counters["labelings"] = labelings;
  report.counters["valid_labelings"] = valid;
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

}  // namespace cffa
