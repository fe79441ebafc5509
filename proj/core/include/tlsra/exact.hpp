#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "tlsra/instance.hpp"

namespace tlsra {

// Raised when every subset up to the budget size was exhausted without a
// feasible one. Distinct from infeasibility: a valid instance always has one.
class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(std::size_t budget);
  std::size_t budget() const { return budget_; }

 private:
  std::size_t budget_;
};

struct ExactOptions {
  std::optional<std::size_t> budget;  // largest subset size to try
  // Only test subsets with a node in every min-power component. Turning it
  // off exists to cross-check the filter; sizes then start at 0.
  bool component_pruning = true;
};

struct ExactResult {
  std::vector<NodeId> u_opt;  // lexicographically first optimum
  std::size_t size = 0;
  std::uint64_t nodes_explored = 0;  // subsets tested for feasibility
};

// Brute-force optimum: sizes ascending, subsets of each size in
// lexicographic order, first feasible subset wins. Every smaller size is
// exhausted before a result is returned. Practical up to n ~ 20.
ExactResult solve_exact(const Instance& inst, const ExactOptions& opts = {});
ExactResult solve_exact(const PowerGraph& graph, const ExactOptions& opts = {});

// {"size", "u_opt", "nodes_explored", "proof": "exhausted sizes < size"}
nlohmann::json to_json(const ExactResult& result);

}  // namespace tlsra
