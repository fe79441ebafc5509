#include "tlsra/greedy.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "tlsra/disjoint_sets.hpp"
#include "tlsra/random.hpp"

namespace tlsra {

namespace {

bool has_max_edge(const PowerGraph& graph, NodeId u, NodeId v) {
  auto nb = graph.adj_max.neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::string ids_to_string(std::span<const NodeId> ids) {
  std::string s = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(ids[i]);
  }
  return s + "}";
}

// Enumerates connected subsets of E_max with pairwise-distinct labels whose
// minimum-rank member is `anchor` (ESU: every connected subset is reached
// exactly once via exclusive neighborhoods). Keeps the smallest rank tuple.
class MergingSearch {
 public:
  MergingSearch(std::size_t k, const ComponentLabeling& labeling, const PowerGraph& graph,
                std::span<const NodeId> rank)
      : k_(k),
        labeling_(labeling),
        graph_(graph),
        rank_(rank),
        mark_(graph.n, 0),
        label_used_(labeling.count, false) {}

  std::optional<std::vector<NodeId>> run() {
    std::vector<NodeId> by_rank(graph_.n);
    for (NodeId v = 0; v < graph_.n; ++v) by_rank[rank_[v]] = v;
    for (NodeId anchor : by_rank) {
      if (graph_.adj_max.degree(anchor) == 0) continue;
      anchor_rank_ = rank_[anchor];
      sub_.assign(1, anchor);
      label_used_[labeling_.label[anchor]] = true;
      bump(anchor, +1);
      std::vector<NodeId> ext;
      for (NodeId u : graph_.adj_max.neighbors(anchor)) {
        if (rank_[u] > anchor_rank_) ext.push_back(u);
      }
      extend(ext);
      bump(anchor, -1);
      label_used_[labeling_.label[anchor]] = false;
      if (best_) {
        std::vector<NodeId> nodes(*best_);
        std::sort(nodes.begin(), nodes.end());
        return nodes;
      }
    }
    return std::nullopt;
  }

 private:
  void bump(NodeId v, int delta) {
    mark_[v] += delta;
    for (NodeId u : graph_.adj_max.neighbors(v)) mark_[u] += delta;
  }

  void record() {
    std::vector<NodeId> key(sub_.size());
    std::transform(sub_.begin(), sub_.end(), key.begin(), [&](NodeId v) { return rank_[v]; });
    std::sort(key.begin(), key.end());
    if (!best_key_ || key < *best_key_) {
      best_key_ = std::move(key);
      best_ = sub_;
    }
  }

  void extend(const std::vector<NodeId>& ext) {
    if (sub_.size() == k_) {
      record();
      return;
    }
    for (std::size_t i = 0; i < ext.size(); ++i) {
      NodeId w = ext[i];
      if (label_used_[labeling_.label[w]]) continue;
      std::vector<NodeId> next(ext.begin() + static_cast<std::ptrdiff_t>(i) + 1, ext.end());
      for (NodeId u : graph_.adj_max.neighbors(w)) {
        if (rank_[u] > anchor_rank_ && mark_[u] == 0) next.push_back(u);
      }
      sub_.push_back(w);
      label_used_[labeling_.label[w]] = true;
      bump(w, +1);
      extend(next);
      bump(w, -1);
      label_used_[labeling_.label[w]] = false;
      sub_.pop_back();
    }
  }

  std::size_t k_;
  const ComponentLabeling& labeling_;
  const PowerGraph& graph_;
  std::span<const NodeId> rank_;
  std::vector<int> mark_;
  std::vector<bool> label_used_;
  std::vector<NodeId> sub_;
  NodeId anchor_rank_ = 0;
  std::optional<std::vector<NodeId>> best_key_;
  std::optional<std::vector<NodeId>> best_;
};

// Mutable state of one greedy run: union-find over the working graph plus
// the growing solution.
class GreedyState {
 public:
  GreedyState(const PowerGraph& graph, std::string algorithm, std::size_t k)
      : graph_(graph), sets_(graph.n), in_u_(graph.n, false) {
    for (const auto& [u, v] : graph.e_min) sets_.unite(u, v);
    solution_.algorithm = std::move(algorithm);
    solution_.k = k;
  }

  bool connected() const { return sets_.set_count() <= 1; }
  ComponentLabeling labeling() { return sets_.labeling(); }
  bool joined(NodeId u, NodeId v) { return sets_.same(u, v); }

  void take(std::vector<NodeId> nodes, std::size_t phase) {
    std::sort(nodes.begin(), nodes.end());
    const auto before = sets_.set_count();
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      for (std::size_t j = i + 1; j < nodes.size(); ++j) {
        if (has_max_edge(graph_, nodes[i], nodes[j])) sets_.unite(nodes[i], nodes[j]);
      }
      in_u_[nodes[i]] = true;
    }
    if (before - sets_.set_count() != nodes.size() - 1) {
      throw std::logic_error("merging " + ids_to_string(nodes) +
                             " did not reduce the component count by |M|-1");
    }
    solution_.trace.push_back({std::move(nodes), phase, solution_.trace.size()});
  }

  Solution finish() {
    if (!connected()) {
      throw std::logic_error("greedy run ended with a disconnected working graph");
    }
    for (NodeId v = 0; v < graph_.n; ++v) {
      if (in_u_[v]) solution_.u_set.push_back(v);
    }
    return std::move(solution_);
  }

 private:
  const PowerGraph& graph_;
  DisjointSets sets_;
  std::vector<bool> in_u_;
  Solution solution_;
};

// Greedy phases from `from_k` down to 2.
void run_phases(GreedyState& state, const PowerGraph& graph, std::size_t from_k,
                std::span<const NodeId> rank) {
  for (std::size_t kp = from_k; kp >= 3 && !state.connected(); --kp) {
    while (!state.connected()) {
      auto m = find_k_merging(kp, state.labeling(), graph, rank);
      if (!m) break;
      state.take(std::move(*m), kp);
    }
  }
  if (state.connected()) return;

  // Every cross-component max edge is a 2-merging, and merges never make an
  // already-joined pair separate again, so one pass in rank order takes them
  // in exactly the order repeated searches would.
  std::vector<Edge> order(graph.e_max);
  auto key = [&](const Edge& e) {
    auto a = rank[e.first], b = rank[e.second];
    return a < b ? std::pair{a, b} : std::pair{b, a};
  };
  std::sort(order.begin(), order.end(),
            [&](const Edge& x, const Edge& y) { return key(x) < key(y); });
  for (const auto& [u, v] : order) {
    if (state.connected()) break;
    if (!state.joined(u, v)) state.take({u, v}, 2);
  }
}

void replay_schedule(GreedyState& state, const PowerGraph& graph, std::size_t k,
                     const std::vector<std::vector<NodeId>>& schedule,
                     std::span<const NodeId> rank, std::size_t& phase) {
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    const auto& entry = schedule[i];
    const auto where = "schedule entry " + std::to_string(i) + " " + ids_to_string(entry);
    if (entry.size() < 2 || entry.size() > phase) {
      throw InvalidSchedule(where + ": size must be in [2, " + std::to_string(phase) +
                            "] (non-increasing, at most k = " + std::to_string(k) + ")");
    }
    for (NodeId v : entry) {
      if (v >= graph.n) throw InvalidSchedule(where + ": node id out of range");
    }
    std::vector<NodeId> sorted(entry);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InvalidSchedule(where + ": repeated node id");
    }
    auto labeling = state.labeling();
    for (std::size_t kp = phase; kp > entry.size(); --kp) {
      if (auto left = find_k_merging(kp, labeling, graph, rank)) {
        throw InvalidSchedule(where + ": drops to size " + std::to_string(entry.size()) +
                              " while the " + std::to_string(kp) + "-merging " +
                              ids_to_string(*left) + " is still available");
      }
    }
    phase = entry.size();
    if (!is_k_merging(sorted, labeling, graph)) {
      throw InvalidSchedule(where + ": not a " + std::to_string(phase) +
                            "-merging of the working graph");
    }
    state.take(std::move(sorted), phase);
  }
}

}  // namespace

MergingOrder MergingOrder::permutation(std::uint64_t seed) {
  MergingOrder order(Mode::permutation);
  order.seed_ = seed;
  return order;
}

MergingOrder MergingOrder::explicit_schedule(std::vector<std::vector<NodeId>> mergings) {
  MergingOrder order(Mode::schedule);
  order.schedule_ = std::move(mergings);
  return order;
}

std::vector<NodeId> MergingOrder::ranks(std::size_t n) const {
  std::vector<NodeId> rank(n);
  if (mode_ != Mode::permutation) {
    std::iota(rank.begin(), rank.end(), NodeId{0});
    return rank;
  }
  auto perm = random_permutation(n, seed_);
  for (NodeId pos = 0; pos < n; ++pos) rank[perm[pos]] = pos;
  return rank;
}

bool is_k_merging(std::span<const NodeId> m, const ComponentLabeling& labeling,
                  const PowerGraph& graph) {
  if (m.empty()) return false;
  std::vector<NodeId> nodes(m.begin(), m.end());
  std::sort(nodes.begin(), nodes.end());
  if (std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end()) return false;

  std::vector<std::uint32_t> labels;
  for (NodeId v : nodes) labels.push_back(labeling.label.at(v));
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) return false;

  std::vector<bool> reached(nodes.size(), false);
  std::vector<std::size_t> stack{0};
  reached[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    NodeId v = nodes[stack.back()];
    stack.pop_back();
    for (NodeId u : graph.adj_max.neighbors(v)) {
      auto it = std::lower_bound(nodes.begin(), nodes.end(), u);
      if (it == nodes.end() || *it != u) continue;
      auto idx = static_cast<std::size_t>(it - nodes.begin());
      if (!reached[idx]) {
        reached[idx] = true;
        ++count;
        stack.push_back(idx);
      }
    }
  }
  return count == nodes.size();
}

std::optional<std::vector<NodeId>> find_k_merging(std::size_t k,
                                                  const ComponentLabeling& labeling,
                                                  const PowerGraph& graph,
                                                  std::span<const NodeId> rank) {
  if (k < 2) throw std::invalid_argument("find_k_merging: k must be at least 2");
  if (rank.size() != graph.n) throw std::invalid_argument("find_k_merging: rank size != n");
  if (labeling.count < k) return std::nullopt;
  return MergingSearch(k, labeling, graph, rank).run();
}

std::optional<std::vector<NodeId>> find_k_merging(std::size_t k,
                                                  const ComponentLabeling& labeling,
                                                  const PowerGraph& graph,
                                                  const MergingOrder& order) {
  auto rank = order.ranks(graph.n);
  return find_k_merging(k, labeling, graph, rank);
}

Solution approx_2lsra_k(const PowerGraph& graph, std::size_t k, const MergingOrder& order) {
  if (k < 2) throw std::invalid_argument("approx_2lsra_k: k must be at least 2");
  GreedyState state(graph, "greedy-k", k);
  const auto rank = order.ranks(graph.n);
  std::size_t phase = k;
  if (order.mode() == MergingOrder::Mode::schedule) {
    replay_schedule(state, graph, k, order.schedule(), rank, phase);
  }
  run_phases(state, graph, phase, rank);
  return state.finish();
}

Solution approx_2lsra_k(const Instance& inst, std::size_t k, const MergingOrder& order) {
  return approx_2lsra_k(derive_edges(inst), k, order);
}

Solution spanning_tree_baseline(const PowerGraph& graph) {
  GreedyState state(graph, "spanning-tree", 2);
  for (const auto& [u, v] : graph.e_max) {
    if (state.connected()) break;
    if (!state.joined(u, v)) state.take({u, v}, 2);
  }
  return state.finish();
}

Solution spanning_tree_baseline(const Instance& inst) {
  return spanning_tree_baseline(derive_edges(inst));
}

std::size_t lower_bound_cc(const PowerGraph& graph) {
  auto count = components(graph.n, graph.e_min).count;
  return count > 1 ? count : 0;
}

std::size_t lower_bound_cc(const Instance& inst) { return lower_bound_cc(derive_edges(inst)); }

}  // namespace tlsra
