#include "cffa/oracle.hpp"

#include <algorithm>

#include "cffa/error.hpp"
#include "stopwatch.hpp"

namespace cffa {

void SbMwisInstance::validate() const {
  if (static_cast<int>(weights.size()) != graph.vertex_count())
    fail(ErrorKind::Contract, "DIM_MISMATCH", "weight count differs from vertex count");
  if (size_cap < 1 || size_cap > std::max(1, graph.vertex_count()))
    fail(ErrorKind::Contract, "CAP_RANGE", "size cap must lie in [1, vertex count]");
}

namespace {

struct BruteForceSearch {
  const Instance& inst;
  int n;
  int m;
  std::vector<JobMask> bundles;
  std::vector<JobMask> neighbors;
  std::uint64_t leaves = 0;

  bool leaf_feasible() const {
    for (int a = 0; a < n; ++a) {
      if (bundle_utility(inst, a, bundles[a]) < inst.eta()) return false;
      if (inst.bundle_cap() && popcount(bundles[a]) > *inst.bundle_cap()) return false;
    }
    return true;
  }

  // Conflict edges are rejected while descending; the enumeration order of
  // the surviving leaves is unchanged.
  bool descend(int job) {
    if (job == m) {
      ++leaves;
      return leaf_feasible();
    }
    const JobMask bit = JobMask{1} << job;
    for (int target = 0; target < n; ++target) {
      if (neighbors[job] & bundles[target]) continue;
      bundles[target] |= bit;
      if (descend(job + 1)) return true;
      bundles[target] &= ~bit;
    }
    return descend(job + 1);  // unassigned
  }
};

}  // namespace

SolveReport brute_force_cffa(const Instance& inst) {
  detail::Stopwatch clock;
  if (inst.job_count() > 64) fail(ErrorKind::Capacity, "MASK_WIDTH", "brute force supports at most 64 jobs");

  BruteForceSearch search{inst, inst.agent_count(), inst.job_count(),
                          std::vector<JobMask>(inst.agent_count(), 0), {}, 0};
  for (int x = 0; x < inst.job_count(); ++x) search.neighbors.push_back(inst.conflict().neighbor_mask(x));

  SolveReport report;
  report.algorithm = "brute";
  report.feasible = search.descend(0);
  if (report.feasible) {
    Allocation alloc;
    for (JobMask b : search.bundles) alloc.bundles.push_back(elements_of(b));
    report.certificate = std::move(alloc);
  }
  report.counters["assignments_tried"] = search.leaves;
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

SbMwisResult brute_force_sbmwis(const SbMwisInstance& inst) {
  inst.validate();
  const int v = inst.graph.vertex_count();
  if (v > 30) fail(ErrorKind::Capacity, "VERTEX_LIMIT", "brute-force Sb-MWIS supports at most 30 vertices");

  std::vector<JobMask> nbr(static_cast<std::size_t>(v));
  for (int i = 0; i < v; ++i) nbr[i] = inst.graph.neighbor_mask(i);

  bool have_best = false;
  Utility best_weight = 0;
  std::vector<int> best;
  const JobMask limit = JobMask{1} << v;
  for (JobMask s = 0; s < limit; ++s) {
    if (popcount(s) > inst.size_cap) continue;
    bool independent = true;
    Utility weight = 0;
    for (JobMask rest = s; rest != 0 && independent; rest &= rest - 1) {
      const int x = std::countr_zero(rest);
      independent = (nbr[x] & s) == 0;
      weight += inst.weights[x];
    }
    if (!independent) continue;
    if (!have_best || weight > best_weight) {
      have_best = true;
      best_weight = weight;
      best = elements_of(s);
    } else if (weight == best_weight) {
      auto candidate = elements_of(s);
      if (candidate < best) best = std::move(candidate);
    }
  }

  SbMwisResult result;
  result.feasible = static_cast<std::int64_t>(best_weight) >= inst.target;
  if (result.feasible) result.witness = std::move(best);
  result.nodes = limit;
  return result;
}

SolveReport subset_dp_cffa(const Instance& inst) {
  detail::Stopwatch clock;
  const int n = inst.agent_count();
  const int m = inst.job_count();
  if (m > 62) fail(ErrorKind::Capacity, "MASK_WIDTH", "subset DP supports at most 62 jobs");
  if (m > 26) fail(ErrorKind::Capacity, "DP_TABLE", "subset DP table would exceed 2^26 entries");

  SolveReport report;
  report.algorithm = "subsetdp";
  if (n == 0) {
    report.feasible = true;
    report.certificate = Allocation{};
    report.elapsed_ms = clock.elapsed_ms();
    return report;
  }

  const std::size_t size = std::size_t{1} << m;
  const JobMask full = size - 1;
  const auto cap = inst.effective_cap();

  // independent[B] and per-agent utility[B], both built from B minus its lowest bit.
  std::vector<char> independent(size, 1);
  for (std::size_t b = 1; b < size; ++b) {
    const int low = std::countr_zero(b);
    const JobMask rest = b & (b - 1);
    independent[b] = independent[rest] && (inst.conflict().neighbor_mask(low) & rest) == 0;
  }
  auto feasible_table = [&](int agent) {
    std::vector<char> feasible(size, 0);
    std::vector<Utility> utility(size, 0);
    for (std::size_t b = 1; b < size; ++b) {
      const int low = std::countr_zero(b);
      utility[b] = utility[b & (b - 1)] + inst.utility(agent, low);
      feasible[b] = independent[b] && utility[b] >= inst.eta() && popcount(b) <= cap;
    }
    return feasible;
  };

  // pred[i][M]: bundle given to agent i when layer i+1 holds at M (0 = unreachable).
  std::vector<std::vector<JobMask>> pred(static_cast<std::size_t>(n));
  std::vector<char> previous(size, 1);  // zero agents are served from any mask
  std::uint64_t cells = 0;
  for (int i = 0; i < n; ++i) {
    const auto feasible = feasible_table(i);
    const bool last = i + 1 == n;
    std::vector<char> current(size, 0);
    pred[i].assign(size, 0);
    // The layer is monotone in M, so the final layer is only needed at the full mask.
    for (JobMask mask = last ? full : 0; mask <= full; ++mask) {
      ++cells;
      for (JobMask b = mask; b != 0; b = (b - 1) & mask) {
        if (feasible[b] && previous[mask ^ b]) {
          current[mask] = 1;
          pred[i][mask] = b;
          break;
        }
      }
    }
    previous = std::move(current);
  }

  report.counters["dp_cells"] = cells;
  report.feasible = previous[full] != 0;
  if (report.feasible) {
    Allocation alloc;
    alloc.bundles.resize(static_cast<std::size_t>(n));
    JobMask mask = full;
    for (int i = n - 1; i >= 0; --i) {
      const JobMask b = pred[i][mask];
      alloc.bundles[i] = elements_of(b);
      mask ^= b;
    }
    report.certificate = std::move(alloc);
  }
  report.elapsed_ms = clock.elapsed_ms();
  return report;
}

}  // namespace cffa
