#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tlsra/instance.hpp"

namespace tlsra {

// Union-find with path compression and union by size.
//
// Every public find() and unite() call bumps op_count(); internal root
// lookups performed by unite() are not counted separately.
class DisjointSets {
 public:
  DisjointSets() = default;
  explicit DisjointSets(std::size_t n);

  NodeId find(NodeId x);

  // Merges the sets of a and b and returns the surviving root. If they are
  // already joined the common root is returned and set_count() is unchanged.
  NodeId unite(NodeId a, NodeId b);

  bool same(NodeId a, NodeId b) { return find(a) == find(b); }

  std::size_t size() const { return parent_.size(); }
  std::size_t set_count() const { return sets_; }
  std::size_t set_size(NodeId x);
  std::uint64_t op_count() const { return ops_; }

  // Dense labels numbered by first node; does not touch op_count().
  ComponentLabeling labeling();

 private:
  NodeId root_of(NodeId x);
  void check(NodeId x) const;

  std::vector<NodeId> parent_;
  std::vector<std::uint32_t> size_;
  std::size_t sets_ = 0;
  std::uint64_t ops_ = 0;
};

}  // namespace tlsra
