#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tlsra/greedy.hpp"
#include "tlsra/instance.hpp"

namespace tlsra {

// Published regression bound: a complete fast3 run performs at most
// kOpCountFactor * (s_min + s_max) union/find operations.
inline constexpr std::uint64_t kOpCountFactor = 3;

struct Fast3Options {
  // Order in which step 2 visits candidate centers; a permutation of
  // 0..n-1. Defaults to ascending ids.
  std::optional<std::vector<NodeId>> scan_order;
};

struct Fast3Result {
  Solution solution;                     // algorithm "fast3", k = 3
  std::uint64_t op_count = 0;            // union + find calls, all steps
  std::size_t three_mergings = 0;        // leading trace entries with phase_k 3
  ComponentLabeling after_three_phase;   // working components when step 2 ends
};

// Almost-linear Approx2LSRA_3 on a union-find over min-power components:
//   1. seed the sets with E_min(V) (two finds and one union per edge);
//   2. for each center v, scan its max-power neighbors, hold the first one in
//      a foreign component and emit {v, held, u'} as soon as a neighbor u'
//      lies in a third component; the held slot is cleared after every
//      emission and the scan of v continues;
//   3. join the remaining components with single max-power edges.
// A step is skipped when it starts with a single component. Throws InvalidInstance, or
// std::invalid_argument for a scan order that is not a permutation.
Fast3Result fast3_solve(const Instance& inst, const Fast3Options& opts = {});
Fast3Result fast3_solve(const PowerGraph& graph, const Fast3Options& opts = {});

inline std::uint64_t op_count(const Fast3Result& run) { return run.op_count; }

}  // namespace tlsra
