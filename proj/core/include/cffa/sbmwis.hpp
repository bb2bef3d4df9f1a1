#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cffa/sbmwis_types.hpp"

namespace cffa {

enum class GraphClass { Bipartite, TriangleFree, Planar, Degenerate, CliqueFree };

// An independence-friendly graph class: hereditary, and every member on n
// vertices has an independent set of size f(n).
//
//   bipartite        f(n) = floor(n / 2)           f^-1(k) = 2k
//   triangle-free    f(n) = floor(sqrt(n) / 2)     f^-1(k) = 4k^2
//   planar           f(n) = floor(n / 4)           f^-1(k) = 4k
//   d-degenerate     f(n) = floor(n / (d + 1))     f^-1(k) = k(d + 1)
//   K_l-free         f(n) = max k with C(l+k-2, l-1) <= n  (Ramsey bound)
class IndependenceFriendlyProfile {
 public:
  static IndependenceFriendlyProfile bipartite();
  static IndependenceFriendlyProfile triangle_free();
  static IndependenceFriendlyProfile planar();
  static IndependenceFriendlyProfile degenerate(int d);
  static IndependenceFriendlyProfile clique_free(int l);

  GraphClass graph_class() const noexcept { return class_; }
  int parameter() const noexcept { return parameter_; }
  std::string name() const;

  std::uint64_t f(std::uint64_t n) const;
  // Least n' with f(n') >= k.
  std::uint64_t f_inverse_at(int k) const;

  // Throws Error(ClassViolation) if g is visibly outside the class. Planar
  // graphs are only checked for degeneracy <= 5.
  void check_membership(const ConflictGraph& g) const;

 private:
  IndependenceFriendlyProfile(GraphClass c, int parameter) : class_(c), parameter_(parameter) {}

  GraphClass class_;
  int parameter_;
};

// Branching on heavy vertices. With threshold ceil(rho / k), a solution must
// contain a heavy vertex; once the heavy set reaches f^-1(k) vertices any
// independent k-subset of it is a solution. `nodes` counts recursive calls.
// Graphs are limited to 64 vertices.
SbMwisResult solve_ifc_branching(const SbMwisInstance& inst, const IndependenceFriendlyProfile& profile);

// Cluster graphs: the best representative of each clique, then the k heaviest
// representatives. Ties go to lower vertex indices.
SbMwisResult solve_sbmwis_cluster(const SbMwisInstance& inst, const std::vector<std::vector<int>>& cliques);

using SbMwisSolver = std::function<SbMwisResult(const SbMwisInstance&)>;

// Picks a solver for `g` and all of its induced subgraphs: cluster graphs get
// the greedy solver, bipartite graphs and graphs of degeneracy <= 3 get
// branching, anything else exhaustive search.
SbMwisSolver route_sbmwis_solver(const ConflictGraph& g, std::string* chosen = nullptr);

}  // namespace cffa
