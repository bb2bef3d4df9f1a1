#include "cffa/sbmwis.hpp"

#include <algorithm>
#include <numeric>

#include "cffa/error.hpp"
#include "cffa/graph_classes.hpp"
#include "cffa/oracle.hpp"

namespace cffa {

namespace {

constexpr std::uint64_t kHuge = std::uint64_t{1} << 62;

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t c = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    // c * (n - r + i) / i stays integral at every step.
    const std::uint64_t g = std::gcd(c, i);
    const std::uint64_t num = (n - r + i) / (i / g);
    const std::uint64_t cc = c / g;
    if (num != 0 && cc > kHuge / num) return kHuge;
    c = cc * num;
  }
  return c;
}

}  // namespace

IndependenceFriendlyProfile IndependenceFriendlyProfile::bipartite() { return {GraphClass::Bipartite, 0}; }
IndependenceFriendlyProfile IndependenceFriendlyProfile::triangle_free() { return {GraphClass::TriangleFree, 0}; }
IndependenceFriendlyProfile IndependenceFriendlyProfile::planar() { return {GraphClass::Planar, 0}; }

IndependenceFriendlyProfile IndependenceFriendlyProfile::degenerate(int d) {
  if (d < 0) fail(ErrorKind::Contract, "PROFILE", "degeneracy must be non-negative");
  return {GraphClass::Degenerate, d};
}

IndependenceFriendlyProfile IndependenceFriendlyProfile::clique_free(int l) {
  if (l < 2) fail(ErrorKind::Contract, "PROFILE", "clique-free profile needs l >= 2");
  return {GraphClass::CliqueFree, l};
}

std::string IndependenceFriendlyProfile::name() const {
  switch (class_) {
    case GraphClass::Bipartite: return "bipartite";
    case GraphClass::TriangleFree: return "triangle_free";
    case GraphClass::Planar: return "planar";
    case GraphClass::Degenerate: return "degenerate(" + std::to_string(parameter_) + ")";
    case GraphClass::CliqueFree: return "clique_free(" + std::to_string(parameter_) + ")";
  }
  return "unknown";
}

std::uint64_t IndependenceFriendlyProfile::f(std::uint64_t n) const {
  switch (class_) {
    case GraphClass::Bipartite: return n / 2;
    case GraphClass::TriangleFree: {
      std::uint64_t k = 0;
      while (4 * (k + 1) * (k + 1) <= n) ++k;
      return k;
    }
    case GraphClass::Planar: return n / 4;
    case GraphClass::Degenerate: return n / (static_cast<std::uint64_t>(parameter_) + 1);
    case GraphClass::CliqueFree: {
      const auto l = static_cast<std::uint64_t>(parameter_);
      std::uint64_t k = 0;
      while (binomial(l + k - 1, l - 1) <= n) ++k;  // C(l + (k+1) - 2, l - 1)
      return k;
    }
  }
  return 0;
}

std::uint64_t IndependenceFriendlyProfile::f_inverse_at(int k) const {
  if (k <= 0) return 0;
  const auto kk = static_cast<std::uint64_t>(k);
  switch (class_) {
    case GraphClass::Bipartite: return 2 * kk;
    case GraphClass::TriangleFree: return 4 * kk * kk;
    case GraphClass::Planar: return 4 * kk;
    case GraphClass::Degenerate: return kk * (static_cast<std::uint64_t>(parameter_) + 1);
    case GraphClass::CliqueFree: {
      const auto l = static_cast<std::uint64_t>(parameter_);
      return binomial(l + kk - 2, l - 1);
    }
  }
  return 0;
}

void IndependenceFriendlyProfile::check_membership(const ConflictGraph& g) const {
  auto violation = [&](const std::string& why) {
    fail(ErrorKind::ClassViolation, "CLASS_VIOLATION", "graph is not " + name() + ": " + why);
  };
  switch (class_) {
    case GraphClass::Bipartite:
      if (!two_coloring(g)) violation("odd cycle found");
      break;
    case GraphClass::TriangleFree:
      if (has_triangle(g)) violation("triangle found");
      break;
    case GraphClass::Planar:
      if (degeneracy_order(g).degeneracy > 5) violation("degeneracy above 5");
      break;
    case GraphClass::Degenerate:
      if (degeneracy_order(g).degeneracy > parameter_) violation("degeneracy too large");
      break;
    case GraphClass::CliqueFree:
      if (has_clique(g, parameter_)) violation("forbidden clique found");
      break;
  }
}

// ---------------------------------------------------------------------------
// Branching

namespace {

class Branching {
 public:
  Branching(const SbMwisInstance& inst, const IndependenceFriendlyProfile& profile)
      : inst_(inst), profile_(profile) {
    for (int v = 0; v < inst.graph.vertex_count(); ++v) closed_.push_back(inst.graph.neighbor_mask(v) | (JobMask{1} << v));
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

  // Returns the solution mask, or nullopt.
  std::optional<JobMask> solve(JobMask alive, int k, std::int64_t rho) {
    ++nodes_;
    if (rho <= 0) return JobMask{0};
    if (k == 0) return std::nullopt;

    const auto threshold = static_cast<Utility>((rho + k - 1) / k);
    std::vector<int> heavy;
    for (JobMask rest = alive; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (inst_.weights[v] >= threshold) heavy.push_back(v);
    }
    if (heavy.empty()) return std::nullopt;

    if (profile_.f(heavy.size()) >= static_cast<std::uint64_t>(k)) {
      const auto x_size = static_cast<std::size_t>(profile_.f_inverse_at(k));
      const std::vector<int> pool(heavy.begin(), heavy.begin() + static_cast<std::ptrdiff_t>(std::min(x_size, heavy.size())));
      if (auto found = first_independent_subset(pool, k)) return found;
      // Only reachable when the graph is outside the declared class.
    }

    for (int v : heavy) {
      if (auto sub = solve(alive & ~closed_[v], k - 1, rho - static_cast<std::int64_t>(inst_.weights[v])))
        return *sub | (JobMask{1} << v);
    }
    return std::nullopt;
  }

 private:
  // k-subsets of pool in lexicographic order.
  std::optional<JobMask> first_independent_subset(const std::vector<int>& pool, int k) const {
    const int size = static_cast<int>(pool.size());
    if (k > size) return std::nullopt;
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      JobMask mask = 0;
      for (int i : idx) mask |= JobMask{1} << pool[i];
      if (inst_.graph.independent_mask(mask)) return mask;
      int pos = k - 1;
      while (pos >= 0 && idx[pos] == size - k + pos) --pos;
      if (pos < 0) return std::nullopt;
      ++idx[pos];
      for (int j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }

  const SbMwisInstance& inst_;
  const IndependenceFriendlyProfile& profile_;
  std::vector<JobMask> closed_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

SbMwisResult solve_ifc_branching(const SbMwisInstance& inst, const IndependenceFriendlyProfile& profile) {
  inst.validate();
  if (inst.graph.vertex_count() > 64)
    fail(ErrorKind::Capacity, "VERTEX_LIMIT", "branching supports at most 64 vertices");
  profile.check_membership(inst.graph);

  Branching search(inst, profile);
  const int v = inst.graph.vertex_count();
  const JobMask all = v == 64 ? ~JobMask{0} : (JobMask{1} << v) - 1;
  const auto found = search.solve(all, inst.size_cap, inst.target);

  SbMwisResult result;
  result.nodes = search.nodes();
  result.feasible = found.has_value();
  if (found) result.witness = elements_of(*found);
  return result;
}

// ---------------------------------------------------------------------------
// Cluster graphs

SbMwisResult solve_sbmwis_cluster(const SbMwisInstance& inst, const std::vector<std::vector<int>>& cliques) {
  inst.validate();
  const int v = inst.graph.vertex_count();
  std::vector<int> part(static_cast<std::size_t>(v), -1);
  for (std::size_t p = 0; p < cliques.size(); ++p)
    for (int x : cliques[p]) {
      if (x < 0 || x >= v || part[x] >= 0)
        fail(ErrorKind::Contract, "PARTITION", "cliques must partition the vertex set");
      part[x] = static_cast<int>(p);
    }
  if (std::find(part.begin(), part.end(), -1) != part.end())
    fail(ErrorKind::Contract, "PARTITION", "cliques must cover every vertex");
  for (int x = 0; x < v; ++x)
    for (int y = x + 1; y < v; ++y)
      if (inst.graph.adjacent(x, y) != (part[x] == part[y]))
        fail(ErrorKind::Contract, "PARTITION", "edges do not match the clique partition");

  std::vector<int> reps;
  for (const auto& clique : cliques) {
    if (clique.empty()) continue;
    int best = clique.front();
    for (int x : clique)
      if (inst.weights[x] > inst.weights[best] || (inst.weights[x] == inst.weights[best] && x < best)) best = x;
    reps.push_back(best);
  }
  std::sort(reps.begin(), reps.end(), [&](int a, int b) {
    return inst.weights[a] != inst.weights[b] ? inst.weights[a] > inst.weights[b] : a < b;
  });
  if (static_cast<int>(reps.size()) > inst.size_cap) reps.resize(static_cast<std::size_t>(inst.size_cap));

  Utility total = 0;
  for (int x : reps) total += inst.weights[x];
  std::sort(reps.begin(), reps.end());

  SbMwisResult result;
  result.feasible = static_cast<std::int64_t>(total) >= inst.target;
  if (result.feasible) result.witness = std::move(reps);
  result.nodes = 1;
  return result;
}

// ---------------------------------------------------------------------------
// Routing

SbMwisSolver route_sbmwis_solver(const ConflictGraph& g, std::string* chosen) {
  auto note = [&](const char* name) {
    if (chosen) *chosen = name;
  };
  const auto report = detect_class(g);
  if (report.cluster) {
    note("cluster");
    return [](const SbMwisInstance& inst) {
      return solve_sbmwis_cluster(inst, *cluster_partition(inst.graph));
    };
  }
  if (g.vertex_count() <= 64 && report.bipartition) {
    note("bipartite");
    return [](const SbMwisInstance& inst) {
      return solve_ifc_branching(inst, IndependenceFriendlyProfile::bipartite());
    };
  }
  if (g.vertex_count() <= 64 && report.degeneracy.degeneracy <= 3) {
    note("degenerate");
    const int d = report.degeneracy.degeneracy;
    return [d](const SbMwisInstance& inst) {
      return solve_ifc_branching(inst, IndependenceFriendlyProfile::degenerate(d));
    };
  }
  note("brute");
  return [](const SbMwisInstance& inst) { return brute_force_sbmwis(inst); };
}

}  // namespace cffa
