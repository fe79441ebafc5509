#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tlsra/instance.hpp"

namespace tlsra {

class InvalidSchedule : public Error {
 public:
  using Error::Error;
};

// A k'-merging as recorded in a solver trace. `nodes` is sorted.
struct Merging {
  std::vector<NodeId> nodes;
  std::size_t phase_k = 0;
  std::size_t step_index = 0;

  friend bool operator==(const Merging&, const Merging&) = default;
};

struct Solution {
  std::vector<NodeId> u_set;  // sorted
  std::vector<Merging> trace;
  std::string algorithm;
  std::size_t k = 0;
  std::string instance_digest;  // filled by callers that know the file bytes

  std::size_t size() const { return u_set.size(); }
  friend bool operator==(const Solution&, const Solution&) = default;
};

// Which k'-merging the generic solver takes when several exist.
//
// lexicographic: the smallest sorted id tuple.
// permutation:   lexicographic after relabeling nodes by a seeded random
//                permutation (rank[v] is v's position).
// schedule:      replay the given mergings in order; see approx_2lsra_k.
class MergingOrder {
 public:
  enum class Mode { lexicographic, permutation, schedule };

  static MergingOrder lexicographic() { return MergingOrder(Mode::lexicographic); }
  static MergingOrder permutation(std::uint64_t seed);
  static MergingOrder explicit_schedule(std::vector<std::vector<NodeId>> mergings);

  Mode mode() const { return mode_; }
  std::uint64_t seed() const { return seed_; }
  const std::vector<std::vector<NodeId>>& schedule() const { return schedule_; }

  // Priority rank of every node for the search; identity unless permuted.
  std::vector<NodeId> ranks(std::size_t n) const;

 private:
  explicit MergingOrder(Mode mode) : mode_(mode) {}

  Mode mode_;
  std::uint64_t seed_ = 0;
  std::vector<std::vector<NodeId>> schedule_;
};

// True iff E_max restricted to m is connected and the members of m carry
// pairwise-distinct labels. Members must be distinct ids < graph.n.
bool is_k_merging(std::span<const NodeId> m, const ComponentLabeling& labeling,
                  const PowerGraph& graph);

// First k-merging under `order`, or nullopt if none exists. Candidates are
// grown as connected subsets of E_max (each enumerated once), skipping any
// node whose label is already used; among them the smallest tuple of sorted
// ranks wins. Schedule mode searches lexicographically. Requires k >= 2.
std::optional<std::vector<NodeId>> find_k_merging(std::size_t k,
                                                  const ComponentLabeling& labeling,
                                                  const PowerGraph& graph,
                                                  const MergingOrder& order);

// Rank-based overload; rank[v] orders nodes, must be a permutation of 0..n-1.
std::optional<std::vector<NodeId>> find_k_merging(std::size_t k,
                                                  const ComponentLabeling& labeling,
                                                  const PowerGraph& graph,
                                                  std::span<const NodeId> rank);

// Generic greedy: start from E_min(V) and U = {}; for k' = k down to 2 take
// k'-mergings while any exists, adding all of E_max(M) to the working graph.
//
// In schedule mode every entry must be a k'-merging of the working graph at
// its turn, sizes must be non-increasing and at most k, and no merging of a
// size between consecutive entry sizes may remain when the size drops. When
// the schedule runs out before the graph is connected the remaining phases
// run lexicographically. Throws InvalidInstance or InvalidSchedule.
Solution approx_2lsra_k(const Instance& inst, std::size_t k,
                        const MergingOrder& order = MergingOrder::lexicographic());
Solution approx_2lsra_k(const PowerGraph& graph, std::size_t k,
                        const MergingOrder& order = MergingOrder::lexicographic());

// Kruskal over the components of G({}): scan E_max in canonical order and
// keep every edge that joins two different components.
Solution spanning_tree_baseline(const Instance& inst);
Solution spanning_tree_baseline(const PowerGraph& graph);

// |CC(G({}))| if it exceeds 1, else 0.
std::size_t lower_bound_cc(const Instance& inst);
std::size_t lower_bound_cc(const PowerGraph& graph);

}  // namespace tlsra
