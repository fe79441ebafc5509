#include "tlsra/exact.hpp"

#include <stdexcept>
#include <string>

#include "tlsra/disjoint_sets.hpp"

namespace tlsra {

BudgetExceeded::BudgetExceeded(std::size_t budget)
    : Error("exact: no solution of size <= " + std::to_string(budget)), budget_(budget) {}

namespace {

class SubsetSearch {
 public:
  SubsetSearch(const PowerGraph& graph, bool pruning)
      : graph_(graph),
        labels_(components(graph.n, graph.e_min)),
        pruning_(pruning && labels_.count > 1),
        in_subset_(graph.n, false),
        cover_(labels_.count, 0) {}

  std::size_t component_count() const { return labels_.count; }
  std::uint64_t explored() const { return explored_; }

  // Lexicographically first feasible subset of exactly `size` nodes.
  std::optional<std::vector<NodeId>> first_feasible(std::size_t size) {
    target_ = size;
    chosen_.clear();
    uncovered_ = labels_.count;
    if (descend(0)) return chosen_;
    return std::nullopt;
  }

 private:
  bool descend(NodeId next) {
    const auto slots = target_ - chosen_.size();
    if (slots == 0) {
      if (pruning_ && uncovered_ > 0) return false;
      ++explored_;
      return feasible();
    }
    if (pruning_ && uncovered_ > slots) return false;
    for (NodeId v = next; v + slots <= graph_.n; ++v) {
      add(v);
      bool found = descend(v + 1);
      if (found) return true;
      remove(v);
    }
    return false;
  }

  void add(NodeId v) {
    chosen_.push_back(v);
    in_subset_[v] = true;
    if (cover_[labels_.label[v]]++ == 0) --uncovered_;
  }

  void remove(NodeId v) {
    chosen_.pop_back();
    in_subset_[v] = false;
    if (--cover_[labels_.label[v]] == 0) ++uncovered_;
  }

  // G(chosen) is connected iff the min-power components are joined by the
  // max edges inside the subset.
  bool feasible() {
    DisjointSets sets(labels_.count);
    for (NodeId u : chosen_) {
      for (NodeId v : graph_.adj_max.neighbors(u)) {
        if (v > u && in_subset_[v]) sets.unite(labels_.label[u], labels_.label[v]);
      }
    }
    return sets.set_count() == 1;
  }

  const PowerGraph& graph_;
  ComponentLabeling labels_;
  bool pruning_;
  std::vector<bool> in_subset_;
  std::vector<std::uint32_t> cover_;
  std::vector<NodeId> chosen_;
  std::size_t target_ = 0;
  std::size_t uncovered_ = 0;
  std::uint64_t explored_ = 0;
};

}  // namespace

ExactResult solve_exact(const PowerGraph& graph, const ExactOptions& opts) {
  SubsetSearch search(graph, opts.component_pruning);
  std::size_t start = 0;
  if (opts.component_pruning && search.component_count() > 1) start = search.component_count();
  for (std::size_t size = start; size <= graph.n; ++size) {
    if (opts.budget && size > *opts.budget) throw BudgetExceeded(*opts.budget);
    if (auto found = search.first_feasible(size)) {
      return {std::move(*found), size, search.explored()};
    }
  }
  throw std::logic_error("exact: no feasible subset; the max-power graph is disconnected");
}

ExactResult solve_exact(const Instance& inst, const ExactOptions& opts) {
  return solve_exact(derive_edges(inst), opts);
}

nlohmann::json to_json(const ExactResult& result) {
  return {{"size", result.size},
          {"u_opt", result.u_opt},
          {"nodes_explored", result.nodes_explored},
          {"proof", "exhausted sizes < size"}};
}

}  // namespace tlsra
