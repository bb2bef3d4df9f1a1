#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cffa/model.hpp"

namespace cffa {

// Size-bounded maximum-weight independent set: is there an independent set of
// at most `size_cap` vertices whose weight reaches `target`?
struct SbMwisInstance {
  ConflictGraph graph;
  std::vector<Utility> weights;
  int size_cap = 1;
  std::int64_t target = 0;

  // Throws Error(Contract) unless weights match the graph and 1 <= size_cap <= |V|.
  void validate() const;
};

struct SbMwisResult {
  bool feasible = false;
  std::optional<std::vector<int>> witness;  // sorted vertex indices
  std::uint64_t nodes = 0;                  // search nodes expanded, where meaningful
};

}  // namespace cffa
