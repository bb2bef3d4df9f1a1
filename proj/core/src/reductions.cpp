#include "cffa/reductions.hpp"

#include <numeric>

#include "cffa/error.hpp"
#include "cffa/rng.hpp"

namespace cffa {

namespace {

[[noreturn]] void source_violation(const std::string& what) {
  fail(ErrorKind::Contract, "SOURCE_INVARIANT", what);
}

std::vector<std::string> numbered(const std::string& prefix, std::size_t count, std::size_t offset = 0) {
  std::vector<std::string> names(count);
  for (std::size_t i = 0; i < count; ++i) names[i] = prefix + std::to_string(i + offset);
  return names;
}

}  // namespace

void ThreePartitionInstance::validate() const {
  if (sizes.empty() || sizes.size() % 3 != 0) source_violation("3-Partition needs 3m' > 0 elements");
  if (bound == 0) source_violation("bound must be positive");
  const Utility total = std::accumulate(sizes.begin(), sizes.end(), Utility{0});
  if (total != bound * (sizes.size() / 3)) source_violation("element sizes must sum to m' * B");
  for (Utility s : sizes)
    if (!(4 * s > bound && 2 * s < bound)) source_violation("every size must lie strictly between B/4 and B/2");
}

void Numerical3DMInstance::validate() const {
  if (sizes_x.empty() || sizes_x.size() != sizes_y.size() || sizes_x.size() != sizes_z.size())
    source_violation("the three lists must have the same positive length");
  if (bound == 0) source_violation("bound must be positive");
  Utility total = 0;
  for (const auto* list : {&sizes_x, &sizes_y, &sizes_z})
    for (Utility s : *list) {
      if (s == 0) source_violation("sizes must be positive");
      total += s;
    }
  if (total != bound * sizes_x.size()) source_violation("sizes must sum to m' * B");
}

Instance from_3partition(const ThreePartitionInstance& src) {
  src.validate();
  const std::size_t groups = src.sizes.size() / 3;
  std::vector<Utility> row;
  for (Utility s : src.sizes) row.push_back(src.bound - s);
  std::vector<std::vector<Utility>> utilities(groups, row);
  return Instance(numbered("a", groups), numbered("x", src.sizes.size()), std::move(utilities),
                  ConflictGraph(static_cast<int>(src.sizes.size())), 2 * src.bound);
}

Instance from_numerical_3dm(const Numerical3DMInstance& src) {
  src.validate();
  const int k = static_cast<int>(src.sizes_x.size());
  std::vector<std::pair<int, int>> edges;
  for (int block = 0; block < 3; ++block)
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) edges.emplace_back(block * k + i, block * k + j);

  std::vector<Utility> row;
  for (const auto* list : {&src.sizes_x, &src.sizes_y, &src.sizes_z}) row.insert(row.end(), list->begin(), list->end());
  std::vector<std::string> jobs = numbered("x", static_cast<std::size_t>(k));
  for (auto& name : numbered("y", static_cast<std::size_t>(k))) jobs.push_back(name);
  for (auto& name : numbered("z", static_cast<std::size_t>(k))) jobs.push_back(name);

  return Instance(numbered("a", static_cast<std::size_t>(k)), std::move(jobs),
                  std::vector<std::vector<Utility>>(static_cast<std::size_t>(k), row),
                  ConflictGraph(3 * k, std::move(edges)), src.bound);
}

Instance from_independent_set(const ConflictGraph& g, int k) {
  if (k < 1 || k > g.vertex_count()) fail(ErrorKind::Contract, "CAP_RANGE", "k must lie in [1, vertex count]");
  std::vector<std::vector<Utility>> utilities(1, std::vector<Utility>(static_cast<std::size_t>(g.vertex_count()), 1));
  return Instance::with_default_names(std::move(utilities), g, static_cast<Utility>(k), k);
}

Instance from_sbmwis(const SbMwisInstance& src, EtaPolicy policy, std::vector<std::string>* warnings) {
  src.validate();
  std::int64_t target = src.target;
  if (target < 1) {
    if (policy == EtaPolicy::Strict)
      fail(ErrorKind::Contract, "ETA_RANGE", "target below 1 cannot be encoded (eta >= 1)");
    if (warnings) warnings->push_back("Sb-MWIS target " + std::to_string(target) + " raised to 1");
    target = 1;
  }
  return Instance::with_default_names({src.weights}, src.graph, static_cast<Utility>(target), src.size_cap);
}

// ---------------------------------------------------------------------------
// Generators

namespace {

std::vector<std::vector<Utility>> draw_utilities(Rng& rng, int jobs, const GeneratorOptions& options) {
  if (options.agents < 0) fail(ErrorKind::Contract, "GEN_PARAM", "agent count must be non-negative");
  const auto draw_row = [&] {
    std::vector<Utility> row(static_cast<std::size_t>(jobs));
    for (auto& u : row) u = rng.below(options.u_max + 1);
    return row;
  };
  std::vector<std::vector<Utility>> utilities;
  if (options.uniform) {
    const auto row = draw_row();
    utilities.assign(static_cast<std::size_t>(options.agents), row);
  } else {
    for (int a = 0; a < options.agents; ++a) utilities.push_back(draw_row());
  }
  return utilities;
}

Instance assemble(Rng& rng, ConflictGraph graph, const GeneratorOptions& options) {
  const int jobs = graph.vertex_count();
  auto utilities = draw_utilities(rng, jobs, options);
  return Instance::with_default_names(std::move(utilities), std::move(graph), options.eta, options.bundle_cap);
}

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) fail(ErrorKind::Contract, "GEN_PARAM", "edge probability must lie in [0, 1]");
}

ConflictGraph draw_graph(Rng& rng, int vertices, double edge_prob) {
  check_probability(edge_prob);
  if (vertices < 0) fail(ErrorKind::Contract, "GEN_PARAM", "vertex count must be non-negative");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < vertices; ++u)
    for (int v = u + 1; v < vertices; ++v)
      if (rng.chance(edge_prob)) edges.emplace_back(u, v);
  return ConflictGraph(vertices, std::move(edges));
}

}  // namespace

Instance gen_random(int jobs, double edge_prob, const GeneratorOptions& options) {
  Rng rng(options.seed);
  auto graph = draw_graph(rng, jobs, edge_prob);
  return assemble(rng, std::move(graph), options);
}

ClusterInstance gen_cluster(const std::vector<int>& clique_sizes, const GeneratorOptions& options) {
  Rng rng(options.seed);
  std::vector<std::vector<int>> cliques;
  std::vector<std::pair<int, int>> edges;
  int next = 0;
  for (int size : clique_sizes) {
    if (size < 1) fail(ErrorKind::Contract, "GEN_PARAM", "clique sizes must be positive");
    std::vector<int> clique(static_cast<std::size_t>(size));
    std::iota(clique.begin(), clique.end(), next);
    for (int i = 0; i < size; ++i)
      for (int j = i + 1; j < size; ++j) edges.emplace_back(next + i, next + j);
    next += size;
    cliques.push_back(std::move(clique));
  }
  auto instance = assemble(rng, ConflictGraph(next, std::move(edges)), options);
  return {std::move(instance), std::move(cliques)};
}

Instance gen_near_complete(int jobs, std::uint64_t t, const GeneratorOptions& options) {
  if (jobs < 0) fail(ErrorKind::Contract, "GEN_PARAM", "job count must be non-negative");
  Rng rng(options.seed);
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < jobs; ++u)
    for (int v = u + 1; v < jobs; ++v) pairs.emplace_back(u, v);
  if (t > pairs.size()) fail(ErrorKind::Contract, "GEN_PARAM", "t exceeds C(m, 2)");
  // Partial Fisher-Yates: the first t slots become the removed pairs.
  for (std::size_t i = 0; i < t; ++i) std::swap(pairs[i], pairs[i + rng.below(pairs.size() - i)]);
  std::vector<std::pair<int, int>> kept(pairs.begin() + static_cast<std::ptrdiff_t>(t), pairs.end());
  return assemble(rng, ConflictGraph(jobs, std::move(kept)), options);
}

Instance gen_near_complete_regular(int jobs, const GeneratorOptions& options) {
  if (jobs < 2 || jobs % 2 != 0) fail(ErrorKind::Contract, "GEN_PARAM", "need an even job count >= 2");
  Rng rng(options.seed);
  std::vector<int> order(static_cast<std::size_t>(jobs));
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  std::vector<int> partner(static_cast<std::size_t>(jobs));
  for (int i = 0; i < jobs; i += 2) {
    partner[order[i]] = order[i + 1];
    partner[order[i + 1]] = order[i];
  }
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < jobs; ++u)
    for (int v = u + 1; v < jobs; ++v)
      if (partner[u] != v) edges.emplace_back(u, v);
  return assemble(rng, ConflictGraph(jobs, std::move(edges)), options);
}

ConflictGraph random_graph(int vertices, double edge_prob, std::uint64_t seed) {
  Rng rng(seed);
  return draw_graph(rng, vertices, edge_prob);
}

ConflictGraph random_bipartite_graph(int vertices, double edge_prob, std::uint64_t seed) {
  check_probability(edge_prob);
  Rng rng(seed);
  std::vector<int> side(static_cast<std::size_t>(vertices));
  for (auto& s : side) s = static_cast<int>(rng.below(2));
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < vertices; ++u)
    for (int v = u + 1; v < vertices; ++v)
      if (side[u] != side[v] && rng.chance(edge_prob)) edges.emplace_back(u, v);
  return ConflictGraph(vertices, std::move(edges));
}

ConflictGraph random_degenerate_graph(int vertices, int d, std::uint64_t seed) {
  if (d < 0) fail(ErrorKind::Contract, "GEN_PARAM", "degeneracy must be non-negative");
  Rng rng(seed);
  std::vector<int> order(static_cast<std::size_t>(vertices));
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < vertices; ++i) {
    std::vector<int> earlier(order.begin(), order.begin() + i);
    rng.shuffle(earlier);
    const auto links = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(std::min(d, i)) + 1));
    for (std::size_t j = 0; j < links; ++j) edges.emplace_back(order[i], earlier[j]);
  }
  return ConflictGraph(vertices, std::move(edges));
}

}  // namespace cffa
