#include "tlsra/instance.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

#include "tlsra/disjoint_sets.hpp"

namespace tlsra {

namespace {

bool strictly_ascending(const std::vector<NodeId>& list) {
  return std::adjacent_find(list.begin(), list.end(),
                            [](NodeId a, NodeId b) { return a >= b; }) == list.end();
}

std::vector<Edge> mutual_pairs(const std::vector<std::vector<NodeId>>& rel) {
  std::vector<Edge> edges;
  for (NodeId v = 0; v < rel.size(); ++v) {
    const auto& out = rel[v];
    for (auto it = std::upper_bound(out.begin(), out.end(), v); it != out.end(); ++it) {
      const auto& back = rel[*it];
      if (std::binary_search(back.begin(), back.end(), v)) edges.emplace_back(v, *it);
    }
  }
  return edges;
}

void check_ids(const PowerGraph& graph, std::span<const NodeId> ids) {
  for (NodeId v : ids) {
    if (v >= graph.n) {
      throw std::out_of_range("node id " + std::to_string(v) + " >= n = " +
                              std::to_string(graph.n));
    }
  }
}

}  // namespace

const char* to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::empty: return "empty";
    case Violation::Kind::shape: return "shape";
    case Violation::Kind::out_of_range: return "out_of_range";
    case Violation::Kind::self_loop: return "self_loop";
    case Violation::Kind::not_canonical: return "not_canonical";
    case Violation::Kind::containment: return "containment";
    case Violation::Kind::disconnected: return "disconnected";
  }
  return "unknown";
}

std::vector<Violation> validate(const Instance& inst) {
  using Kind = Violation::Kind;
  std::vector<Violation> out;
  if (inst.n == 0) {
    out.push_back({Kind::empty, {}, "instance has no nodes"});
    return out;
  }
  if (inst.dmin.size() != inst.n || inst.dmax.size() != inst.n) {
    std::ostringstream msg;
    msg << "expected " << inst.n << " rows in dmin and dmax, got " << inst.dmin.size()
        << " and " << inst.dmax.size();
    out.push_back({Kind::shape, {}, msg.str()});
    return out;
  }

  bool ids_ok = true;
  bool sorted_ok = true;
  auto scan = [&](const char* name, NodeId v, const std::vector<NodeId>& list) {
    bool row_ok = true;
    for (NodeId u : list) {
      if (u >= inst.n) {
        out.push_back({Kind::out_of_range, {v, u},
                       std::string(name) + "(" + std::to_string(v) + ") contains " +
                           std::to_string(u) + " >= n"});
        ids_ok = false;
        row_ok = false;
      } else if (u == v) {
        out.push_back({Kind::self_loop, {v},
                       std::string(name) + "(" + std::to_string(v) + ") contains itself"});
      }
    }
    if (!strictly_ascending(list)) {
      out.push_back({Kind::not_canonical, {v},
                     std::string(name) + "(" + std::to_string(v) +
                         ") is not sorted ascending without duplicates"});
      sorted_ok = false;
      row_ok = false;
    }
    return row_ok;
  };

  for (NodeId v = 0; v < inst.n; ++v) {
    bool min_ok = scan("dmin", v, inst.dmin[v]);
    bool max_ok = scan("dmax", v, inst.dmax[v]);
    if (min_ok && max_ok &&
        !std::includes(inst.dmax[v].begin(), inst.dmax[v].end(), inst.dmin[v].begin(),
                       inst.dmin[v].end())) {
      out.push_back({Kind::containment, {v},
                     "dmin(" + std::to_string(v) + ") is not a subset of dmax(" +
                         std::to_string(v) + ")"});
    }
  }

  if (ids_ok && sorted_ok) {
    auto labeling = components(inst.n, mutual_pairs(inst.dmax));
    if (labeling.count > 1) {
      Violation viol{Kind::disconnected, {}, {}};
      std::vector<bool> seen(labeling.count, false);
      seen[labeling.label[0]] = true;
      for (NodeId v = 0; v < inst.n && viol.nodes.size() < 16; ++v) {
        if (!seen[labeling.label[v]]) {
          seen[labeling.label[v]] = true;
          viol.nodes.push_back(v);
        }
      }
      viol.message = "max-power graph G(V) has " + std::to_string(labeling.count) +
                     " connected components";
      out.push_back(std::move(viol));
    }
  }
  return out;
}

void require_valid(const Instance& inst) {
  auto violations = validate(inst);
  if (violations.empty()) return;
  std::ostringstream msg;
  msg << "invalid instance (" << violations.size() << " violation"
      << (violations.size() == 1 ? "" : "s") << ")";
  for (std::size_t i = 0; i < violations.size() && i < 5; ++i) {
    msg << "; " << violations[i].message;
  }
  throw InvalidInstance(msg.str());
}

CanonicalizeReport canonicalize(Instance& inst, const CanonicalizeOptions& opts) {
  CanonicalizeReport report;
  auto tidy = [&](NodeId v, std::vector<NodeId>& list) {
    std::sort(list.begin(), list.end());
    auto before = list.size();
    list.erase(std::unique(list.begin(), list.end()), list.end());
    report.duplicates_dropped += before - list.size();
    auto self = std::lower_bound(list.begin(), list.end(), v);
    if (self != list.end() && *self == v) {
      list.erase(self);
      ++report.self_loops_stripped;
    }
  };
  for (NodeId v = 0; v < inst.dmin.size(); ++v) tidy(v, inst.dmin[v]);
  for (NodeId v = 0; v < inst.dmax.size(); ++v) tidy(v, inst.dmax[v]);

  if (opts.repair_containment) {
    auto rows = std::min(inst.dmin.size(), inst.dmax.size());
    for (std::size_t v = 0; v < rows; ++v) {
      auto& mx = inst.dmax[v];
      const auto& mn = inst.dmin[v];
      if (std::includes(mx.begin(), mx.end(), mn.begin(), mn.end())) continue;
      std::vector<NodeId> merged;
      std::set_union(mx.begin(), mx.end(), mn.begin(), mn.end(), std::back_inserter(merged));
      report.containment_repaired += merged.size() - mx.size();
      mx = std::move(merged);
    }
  }
  return report;
}

std::size_t relation_size_min(const Instance& inst) {
  std::size_t s = inst.n;
  for (const auto& list : inst.dmin) s += list.size();
  return s;
}

std::size_t relation_size_max(const Instance& inst) {
  std::size_t s = inst.n;
  for (const auto& list : inst.dmax) s += list.size();
  return s;
}

Adjacency::Adjacency(std::size_t n, std::span<const Edge> edges) : offsets_(n + 1, 0) {
  for (const auto& [u, v] : edges) {
    ++offsets_[u + 1];
    ++offsets_[v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] += offsets_[i];
  targets_.resize(offsets_[n]);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  // Sorted input edges fill every list in ascending order.
  for (const auto& [u, v] : edges) {
    targets_[cursor[u]++] = v;
    targets_[cursor[v]++] = u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto first = targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
    auto last = targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
    if (!std::is_sorted(first, last)) std::sort(first, last);
  }
}

PowerGraph derive_edges_unchecked(const Instance& inst) {
  PowerGraph graph;
  graph.n = inst.n;
  graph.e_min = mutual_pairs(inst.dmin);
  graph.e_max = mutual_pairs(inst.dmax);
  graph.adj_min = Adjacency(inst.n, graph.e_min);
  graph.adj_max = Adjacency(inst.n, graph.e_max);
  return graph;
}

PowerGraph derive_edges(const Instance& inst) {
  require_valid(inst);
  return derive_edges_unchecked(inst);
}

ComponentLabeling components(std::size_t n, std::span<const Edge> edges) {
  DisjointSets sets(n);
  for (const auto& [u, v] : edges) sets.unite(u, v);
  return sets.labeling();
}

std::vector<Edge> min_max_edges(const PowerGraph& graph, std::span<const NodeId> u_set) {
  check_ids(graph, u_set);
  std::vector<bool> in_u(graph.n, false);
  for (NodeId v : u_set) in_u[v] = true;
  std::vector<Edge> max_part;
  for (const auto& e : graph.e_max) {
    if (in_u[e.first] && in_u[e.second]) max_part.push_back(e);
  }
  std::vector<Edge> out;
  out.reserve(graph.e_min.size() + max_part.size());
  std::set_union(graph.e_min.begin(), graph.e_min.end(), max_part.begin(), max_part.end(),
                 std::back_inserter(out));
  return out;
}

std::size_t min_max_component_count(const PowerGraph& graph, std::span<const NodeId> u_set) {
  check_ids(graph, u_set);
  std::vector<bool> in_u(graph.n, false);
  for (NodeId v : u_set) in_u[v] = true;
  DisjointSets sets(graph.n);
  for (const auto& [u, v] : graph.e_min) sets.unite(u, v);
  for (const auto& [u, v] : graph.e_max) {
    if (in_u[u] && in_u[v]) sets.unite(u, v);
  }
  return sets.set_count();
}

bool is_feasible(const PowerGraph& graph, std::span<const NodeId> u_set) {
  return min_max_component_count(graph, u_set) == 1;
}

bool is_feasible(const Instance& inst, std::span<const NodeId> u_set) {
  return is_feasible(derive_edges(inst), u_set);
}

}  // namespace tlsra
