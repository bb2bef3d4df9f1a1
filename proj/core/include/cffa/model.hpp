#pragma once

// Instance and certificate data model for conflict-free fair allocation:
// agents receive pairwise-disjoint bundles of jobs, each bundle must be an
// independent set of the conflict graph and worth at least `eta` to its agent,
// and optionally contain at most `bundle_cap` jobs.
//
// Agents and jobs are dense 0-based indices internally; their external string
// identifiers are kept on the Instance for serialization. Job index i is bit i
// of every job mask in the suite.

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cffa {

using JobMask = std::uint64_t;
using Utility = std::uint64_t;

// Utilities and eta are bounded so that any bundle sum fits comfortably in 64 bits.
inline constexpr Utility kMaxUtility = Utility{1} << 40;

inline int popcount(JobMask mask) { return std::popcount(mask); }

JobMask mask_of(std::span<const int> elements);
std::vector<int> elements_of(JobMask mask);

class ConflictGraph {
 public:
  ConflictGraph() = default;
  explicit ConflictGraph(int vertex_count);
  // Throws Error(Contract) on out-of-range endpoints, self-loops or duplicates.
  ConflictGraph(int vertex_count, std::vector<std::pair<int, int>> edges);

  static ConflictGraph complete(int vertex_count);

  int vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  // Canonical form: each edge once as (u, v) with u < v, sorted.
  const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }

  bool adjacent(int u, int v) const;
  const std::vector<int>& neighbors(int v) const { return adjacency_.at(v); }
  int degree(int v) const { return static_cast<int>(adjacency_.at(v).size()); }
  // Only valid for graphs with at most 64 vertices.
  JobMask neighbor_mask(int v) const;

  bool is_complete() const noexcept;
  // Number of vertex pairs that are not edges.
  std::uint64_t missing_edge_count() const noexcept;

  ConflictGraph complement() const;
  // Subgraph induced on `vertices`; vertex i of the result is vertices[i].
  ConflictGraph induced(std::span<const int> vertices) const;

  bool independent_mask(JobMask mask) const;

  friend bool operator==(const ConflictGraph& a, const ConflictGraph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  int vertex_count_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::uint64_t> matrix_;  // row-major bit matrix
  std::size_t row_words_ = 0;
};

bool is_independent(const ConflictGraph& g, std::span<const int> vertices);

class Instance {
 public:
  Instance() = default;
  // Validates every invariant; violations throw Error(Contract) with a code
  // matching the parser's (DIM_MISMATCH, ETA_RANGE, CAP_RANGE, ...).
  Instance(std::vector<std::string> agents, std::vector<std::string> jobs,
           std::vector<std::vector<Utility>> utilities, ConflictGraph conflict,
           Utility eta, std::optional<int> bundle_cap = std::nullopt);

  // Agents named a0, a1, ... and jobs named x0, x1, ...
  static Instance with_default_names(std::vector<std::vector<Utility>> utilities,
                                     ConflictGraph conflict, Utility eta,
                                     std::optional<int> bundle_cap = std::nullopt);

  int agent_count() const noexcept { return static_cast<int>(agents_.size()); }
  int job_count() const noexcept { return static_cast<int>(jobs_.size()); }
  const std::vector<std::string>& agents() const noexcept { return agents_; }
  const std::vector<std::string>& jobs() const noexcept { return jobs_; }
  const std::vector<std::vector<Utility>>& utilities() const noexcept { return utilities_; }
  Utility utility(int agent, int job) const { return utilities_.at(agent).at(job); }
  const ConflictGraph& conflict() const noexcept { return conflict_; }
  Utility eta() const noexcept { return eta_; }
  const std::optional<int>& bundle_cap() const noexcept { return bundle_cap_; }

  // All agents share one utility row.
  bool uniform_utilities() const noexcept;
  // Bundle size limit, with "no cap" expressed as the job count.
  int effective_cap() const noexcept { return bundle_cap_.value_or(job_count()); }

  std::optional<int> agent_index(const std::string& name) const;
  std::optional<int> job_index(const std::string& name) const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  std::vector<std::string> agents_;
  std::vector<std::string> jobs_;
  std::vector<std::vector<Utility>> utilities_;
  ConflictGraph conflict_;
  Utility eta_ = 1;
  std::optional<int> bundle_cap_;
};

// bundles[a] is the job set given to agent a.
struct Allocation {
  std::vector<std::vector<int>> bundles;

  friend bool operator==(const Allocation&, const Allocation&) = default;
};

Utility bundle_utility(const Instance& inst, int agent, std::span<const int> jobs);
Utility bundle_utility(const Instance& inst, int agent, JobMask jobs);

// True iff the allocation is feasible. Structural problems (wrong agent count,
// unknown or repeated job indices) throw Error(MalformedCertificate) instead.
bool verify_allocation(const Instance& inst, const Allocation& alloc);

struct SolveReport {
  bool feasible = false;
  std::optional<Allocation> certificate;
  std::string algorithm;
  std::map<std::string, std::uint64_t> counters;
  double elapsed_ms = 0.0;
};

}  // namespace cffa
