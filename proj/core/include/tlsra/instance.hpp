#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace tlsra {

// Dense node index in [0, n).
using NodeId = std::uint32_t;

// Undirected edge, stored canonically with first < second.
using Edge = std::pair<NodeId, NodeId>;

inline Edge make_edge(NodeId u, NodeId v) { return u < v ? Edge{u, v} : Edge{v, u}; }

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInstance : public Error {
 public:
  using Error::Error;
};

// Problem input: n nodes and two directed reachability relations.
//
// Canonical form (checked by validate): every list is sorted ascending, has
// no duplicates and no self entries. Generators and load() always produce
// canonical instances.
struct Instance {
  std::size_t n = 0;
  std::vector<std::vector<NodeId>> dmin;
  std::vector<std::vector<NodeId>> dmax;
  nlohmann::json meta = nlohmann::json::object();

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.n == b.n && a.dmin == b.dmin && a.dmax == b.dmax && a.meta == b.meta;
  }
};

struct Violation {
  enum class Kind {
    empty,         // n == 0
    shape,         // dmin/dmax do not have n rows
    out_of_range,  // neighbor id >= n
    self_loop,     // v in d(v)
    not_canonical, // unsorted or duplicated entries
    containment,   // dmin(v) not a subset of dmax(v)
    disconnected,  // max-power graph G(V) is disconnected
  };
  Kind kind;
  std::vector<NodeId> nodes;
  std::string message;
};

const char* to_string(Violation::Kind kind);

// Empty result iff every Instance invariant holds.
std::vector<Violation> validate(const Instance& inst);

// Throws InvalidInstance carrying the first few violations.
void require_valid(const Instance& inst);

struct CanonicalizeOptions {
  // Replace dmax(v) with dmax(v) | dmin(v) instead of reporting containment.
  bool repair_containment = false;
};

struct CanonicalizeReport {
  std::size_t self_loops_stripped = 0;
  std::size_t duplicates_dropped = 0;
  std::size_t containment_repaired = 0;
};

// Sorts every list, drops duplicates and self entries. Out-of-range ids are
// left in place for validate to report.
CanonicalizeReport canonicalize(Instance& inst, const CanonicalizeOptions& opts = {});

// |V| + sum |dmin(v)| and |V| + sum |dmax(v)|.
std::size_t relation_size_min(const Instance& inst);
std::size_t relation_size_max(const Instance& inst);

// Compressed sparse row adjacency.
class Adjacency {
 public:
  Adjacency() = default;
  Adjacency(std::size_t n, std::span<const Edge> edges);

  std::span<const NodeId> neighbors(NodeId v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t node_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> targets_;
};

// Symmetric edge sets E_min(V) and E_max(V) of an instance.
struct PowerGraph {
  std::size_t n = 0;
  std::vector<Edge> e_min;  // sorted, canonical
  std::vector<Edge> e_max;  // sorted, canonical
  Adjacency adj_min;        // neighbor lists ascending
  Adjacency adj_max;
};

// Keeps {u,v} iff u in d(v) and v in d(u). Throws InvalidInstance.
PowerGraph derive_edges(const Instance& inst);

// Same, without re-running validate. The caller guarantees a canonical,
// in-range instance.
PowerGraph derive_edges_unchecked(const Instance& inst);

struct ComponentLabeling {
  std::vector<std::uint32_t> label;  // dense in [0, count), numbered by first node
  std::size_t count = 0;
};

ComponentLabeling components(std::size_t n, std::span<const Edge> edges);

// E_min(V) | E_max(U), sorted canonical. Throws std::out_of_range on ids >= n.
std::vector<Edge> min_max_edges(const PowerGraph& graph, std::span<const NodeId> u_set);

// Number of connected components of G(U).
std::size_t min_max_component_count(const PowerGraph& graph, std::span<const NodeId> u_set);

bool is_feasible(const PowerGraph& graph, std::span<const NodeId> u_set);
bool is_feasible(const Instance& inst, std::span<const NodeId> u_set);

}  // namespace tlsra
