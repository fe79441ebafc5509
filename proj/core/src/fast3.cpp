#include "tlsra/fast3.hpp"

#include <algorithm>
#include <stdexcept>

#include "tlsra/disjoint_sets.hpp"

namespace tlsra {

namespace {

std::vector<NodeId> checked_scan_order(const Fast3Options& opts, std::size_t n) {
  if (!opts.scan_order) return {};
  const auto& order = *opts.scan_order;
  if (order.size() != n) {
    throw std::invalid_argument("fast3: scan order has " + std::to_string(order.size()) +
                                " entries, expected " + std::to_string(n));
  }
  std::vector<bool> seen(n, false);
  for (NodeId v : order) {
    if (v >= n || seen[v]) throw std::invalid_argument("fast3: scan order is not a permutation");
    seen[v] = true;
  }
  return order;
}

}  // namespace

Fast3Result fast3_solve(const PowerGraph& graph, const Fast3Options& opts) {
  const auto n = graph.n;
  auto scan = checked_scan_order(opts, n);

  Fast3Result out;
  Solution& sol = out.solution;
  sol.algorithm = "fast3";
  sol.k = 3;
  std::vector<bool> in_u(n, false);
  auto emit = [&](std::vector<NodeId> nodes, std::size_t phase) {
    for (NodeId v : nodes) in_u[v] = true;
    std::sort(nodes.begin(), nodes.end());
    sol.trace.push_back({std::move(nodes), phase, sol.trace.size()});
  };

  DisjointSets sets(n);

  // Step 1: min-power components.
  for (const auto& [u, v] : graph.e_min) {
    NodeId ru = sets.find(u);
    NodeId rv = sets.find(v);
    sets.unite(ru, rv);
  }

  // Step 2: 3-mergings centered at each node.
  const bool step2 = sets.set_count() > 1;
  for (std::size_t i = 0; step2 && i < n; ++i) {
    const NodeId v = scan.empty() ? static_cast<NodeId>(i) : scan[i];
    NodeId cv = sets.find(v);
    bool holding = false;
    NodeId held = 0;
    NodeId held_root = 0;
    for (NodeId u : graph.adj_max.neighbors(v)) {
      NodeId cu = sets.find(u);
      if (cu == cv) continue;
      if (!holding) {
        holding = true;
        held = u;
        held_root = cu;
        continue;
      }
      if (cu == held_root) continue;
      NodeId root = sets.unite(cv, held_root);
      cv = sets.unite(root, cu);
      emit({v, held, u}, 3);
      holding = false;
    }
  }
  out.three_mergings = sol.trace.size();
  out.after_three_phase = sets.labeling();

  // Step 3: remaining 2-mergings.
  if (sets.set_count() > 1) {
    for (const auto& [u, v] : graph.e_max) {
      NodeId ru = sets.find(u);
      NodeId rv = sets.find(v);
      if (ru != rv) {
        sets.unite(ru, rv);
        emit({u, v}, 2);
      }
    }
  }
  if (sets.set_count() > 1) {
    throw std::logic_error("fast3: max-power graph is disconnected");
  }

  for (NodeId v = 0; v < n; ++v) {
    if (in_u[v]) sol.u_set.push_back(v);
  }
  out.op_count = sets.op_count();
  return out;
}

Fast3Result fast3_solve(const Instance& inst, const Fast3Options& opts) {
  return fast3_solve(derive_edges(inst), opts);
}

}  // namespace tlsra
