#include "cffa/model.hpp"

#include <algorithm>
#include <set>

#include "cffa/error.hpp"

namespace cffa {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Parse: return "parse";
    case ErrorKind::MalformedCertificate: return "malformed-certificate";
    case ErrorKind::Capacity: return "capacity";
    case ErrorKind::Routing: return "routing";
    case ErrorKind::Contract: return "contract";
    case ErrorKind::ClassViolation: return "class-violation";
    case ErrorKind::Internal: return "internal";
  }
  return "unknown";
}

JobMask mask_of(std::span<const int> elements) {
  JobMask mask = 0;
  for (int e : elements) {
    if (e < 0 || e >= 64) fail(ErrorKind::Capacity, "MASK_WIDTH", "element does not fit a 64-bit mask");
    mask |= JobMask{1} << e;
  }
  return mask;
}

std::vector<int> elements_of(JobMask mask) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(std::popcount(mask)));
  while (mask != 0) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// ConflictGraph

ConflictGraph::ConflictGraph(int vertex_count) : ConflictGraph(vertex_count, {}) {}

ConflictGraph::ConflictGraph(int vertex_count, std::vector<std::pair<int, int>> edges)
    : vertex_count_(vertex_count) {
  if (vertex_count < 0) fail(ErrorKind::Contract, "VERTEX_COUNT", "negative vertex count");
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
      fail(ErrorKind::Contract, "EDGE_RANGE", "edge endpoint out of range");
    if (u == v) fail(ErrorKind::Contract, "SELF_LOOP", "self-loop on vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    fail(ErrorKind::Contract, "DUPLICATE_EDGE", "duplicate edge");
  edges_ = std::move(edges);

  adjacency_.assign(static_cast<std::size_t>(vertex_count), {});
  row_words_ = (static_cast<std::size_t>(vertex_count) + 63) / 64;
  matrix_.assign(row_words_ * static_cast<std::size_t>(vertex_count), 0);
  for (auto [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
    matrix_[u * row_words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    matrix_[v * row_words_ + u / 64] |= std::uint64_t{1} << (u % 64);
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
}

ConflictGraph ConflictGraph::complete(int vertex_count) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < vertex_count; ++u)
    for (int v = u + 1; v < vertex_count; ++v) edges.emplace_back(u, v);
  return ConflictGraph(vertex_count, std::move(edges));
}

bool ConflictGraph::adjacent(int u, int v) const {
  if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_)
    fail(ErrorKind::Contract, "VERTEX_RANGE", "vertex index out of range");
  return (matrix_[u * row_words_ + v / 64] >> (v % 64)) & 1U;
}

JobMask ConflictGraph::neighbor_mask(int v) const {
  if (vertex_count_ > 64) fail(ErrorKind::Capacity, "MASK_WIDTH", "graph has more than 64 vertices");
  if (v < 0 || v >= vertex_count_) fail(ErrorKind::Contract, "VERTEX_RANGE", "vertex index out of range");
  return matrix_[v * row_words_];
}

bool ConflictGraph::is_complete() const noexcept { return missing_edge_count() == 0; }

std::uint64_t ConflictGraph::missing_edge_count() const noexcept {
  const auto m = static_cast<std::uint64_t>(vertex_count_);
  return m * (m - (m > 0 ? 1 : 0)) / 2 - edges_.size();
}

ConflictGraph ConflictGraph::complement() const {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < vertex_count_; ++u)
    for (int v = u + 1; v < vertex_count_; ++v)
      if (!adjacent(u, v)) edges.emplace_back(u, v);
  return ConflictGraph(vertex_count_, std::move(edges));
}

ConflictGraph ConflictGraph::induced(std::span<const int> vertices) const {
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (adjacent(vertices[i], vertices[j]))
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return ConflictGraph(static_cast<int>(vertices.size()), std::move(edges));
}

bool ConflictGraph::independent_mask(JobMask mask) const {
  for (JobMask rest = mask; rest != 0; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    if (neighbor_mask(v) & mask) return false;
  }
  return true;
}

bool is_independent(const ConflictGraph& g, std::span<const int> vertices) {
  for (int v : vertices)
    if (v < 0 || v >= g.vertex_count())
      fail(ErrorKind::Contract, "VERTEX_RANGE", "vertex index out of range");
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (vertices[i] != vertices[j] && g.adjacent(vertices[i], vertices[j])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Instance

namespace {

void check_unique(const std::vector<std::string>& names, const char* what) {
  std::set<std::string> seen;
  for (const auto& n : names)
    if (!seen.insert(n).second)
      fail(ErrorKind::Contract, "DUPLICATE_ID", std::string("duplicate ") + what + " identifier '" + n + "'");
}

}  // namespace

Instance::Instance(std::vector<std::string> agents, std::vector<std::string> jobs,
                   std::vector<std::vector<Utility>> utilities, ConflictGraph conflict,
                   Utility eta, std::optional<int> bundle_cap)
    : agents_(std::move(agents)),
      jobs_(std::move(jobs)),
      utilities_(std::move(utilities)),
      conflict_(std::move(conflict)),
      eta_(eta),
      bundle_cap_(bundle_cap) {
  check_unique(agents_, "agent");
  check_unique(jobs_, "job");
  if (utilities_.size() != agents_.size())
    fail(ErrorKind::Contract, "DIM_MISMATCH", "utility row count differs from agent count");
  for (const auto& row : utilities_) {
    if (row.size() != jobs_.size())
      fail(ErrorKind::Contract, "DIM_MISMATCH", "utility row length differs from job count");
    for (Utility u : row)
      if (u > kMaxUtility) fail(ErrorKind::Contract, "UTILITY_RANGE", "utility exceeds 2^40");
  }
  if (conflict_.vertex_count() != job_count())
    fail(ErrorKind::Contract, "DIM_MISMATCH", "conflict graph vertex count differs from job count");
  if (eta_ < 1 || eta_ > kMaxUtility) fail(ErrorKind::Contract, "ETA_RANGE", "eta must lie in [1, 2^40]");
  if (bundle_cap_ && (*bundle_cap_ < 1 || *bundle_cap_ > job_count()))
    fail(ErrorKind::Contract, "CAP_RANGE", "bundle_cap must lie in [1, job count]");
}

Instance Instance::with_default_names(std::vector<std::vector<Utility>> utilities,
                                      ConflictGraph conflict, Utility eta,
                                      std::optional<int> bundle_cap) {
  std::vector<std::string> agents(utilities.size());
  for (std::size_t a = 0; a < agents.size(); ++a) agents[a] = "a" + std::to_string(a);
  std::vector<std::string> jobs(static_cast<std::size_t>(conflict.vertex_count()));
  for (std::size_t x = 0; x < jobs.size(); ++x) jobs[x] = "x" + std::to_string(x);
  return Instance(std::move(agents), std::move(jobs), std::move(utilities), std::move(conflict),
                  eta, bundle_cap);
}

bool Instance::uniform_utilities() const noexcept {
  return std::all_of(utilities_.begin(), utilities_.end(),
                     [&](const auto& row) { return row == utilities_.front(); });
}

std::optional<int> Instance::agent_index(const std::string& name) const {
  auto it = std::find(agents_.begin(), agents_.end(), name);
  if (it == agents_.end()) return std::nullopt;
  return static_cast<int>(it - agents_.begin());
}

std::optional<int> Instance::job_index(const std::string& name) const {
  auto it = std::find(jobs_.begin(), jobs_.end(), name);
  if (it == jobs_.end()) return std::nullopt;
  return static_cast<int>(it - jobs_.begin());
}

// ---------------------------------------------------------------------------
// Verification

Utility bundle_utility(const Instance& inst, int agent, std::span<const int> jobs) {
  if (agent < 0 || agent >= inst.agent_count())
    fail(ErrorKind::MalformedCertificate, "UNKNOWN_AGENT", "agent index out of range");
  Utility total = 0;
  for (int x : jobs) {
    if (x < 0 || x >= inst.job_count())
      fail(ErrorKind::MalformedCertificate, "UNKNOWN_JOB", "job index out of range");
    total += inst.utility(agent, x);
  }
  return total;
}

Utility bundle_utility(const Instance& inst, int agent, JobMask jobs) {
  const auto list = elements_of(jobs);
  return bundle_utility(inst, agent, std::span<const int>(list));
}

bool verify_allocation(const Instance& inst, const Allocation& alloc) {
  if (static_cast<int>(alloc.bundles.size()) != inst.agent_count())
    fail(ErrorKind::MalformedCertificate, "AGENT_COUNT", "allocation must list every agent exactly once");

  std::vector<char> used(static_cast<std::size_t>(inst.job_count()), 0);
  bool feasible = true;
  for (int a = 0; a < inst.agent_count(); ++a) {
    const auto& bundle = alloc.bundles[a];
    for (int x : bundle) {
      if (x < 0 || x >= inst.job_count())
        fail(ErrorKind::MalformedCertificate, "UNKNOWN_JOB", "job index out of range");
    }
    std::vector<int> sorted = bundle;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail(ErrorKind::MalformedCertificate, "REPEATED_JOB", "job listed twice in one bundle");

    for (int x : sorted) {
      if (used[x]) feasible = false;
      used[x] = 1;
    }
    if (!is_independent(inst.conflict(), sorted)) feasible = false;
    if (bundle_utility(inst, a, std::span<const int>(sorted)) < inst.eta()) feasible = false;
    if (inst.bundle_cap() && static_cast<int>(sorted.size()) > *inst.bundle_cap()) feasible = false;
  }
  return feasible;
}

}  // namespace cffa
