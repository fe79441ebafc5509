#include "tlsra/disjoint_sets.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace tlsra {

DisjointSets::DisjointSets(std::size_t n) : parent_(n), size_(n, 1), sets_(n) {
  std::iota(parent_.begin(), parent_.end(), NodeId{0});
}

void DisjointSets::check(NodeId x) const {
  if (x >= parent_.size()) {
    throw std::out_of_range("DisjointSets: id " + std::to_string(x) + " >= " +
                            std::to_string(parent_.size()));
  }
}

NodeId DisjointSets::root_of(NodeId x) {
  NodeId root = x;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[x] != root) {
    NodeId next = parent_[x];
    parent_[x] = root;
    x = next;
  }
  return root;
}

NodeId DisjointSets::find(NodeId x) {
  check(x);
  ++ops_;
  return root_of(x);
}

NodeId DisjointSets::unite(NodeId a, NodeId b) {
  check(a);
  check(b);
  ++ops_;
  NodeId ra = root_of(a);
  NodeId rb = root_of(b);
  if (ra == rb) return ra;
  if (size_[ra] < size_[rb]) std::swap(ra, rb);
  parent_[rb] = ra;
  size_[ra] += size_[rb];
  --sets_;
  return ra;
}

ComponentLabeling DisjointSets::labeling() {
  ComponentLabeling out;
  const auto n = parent_.size();
  out.label.assign(n, 0);
  std::vector<std::uint32_t> root_label(n, UINT32_MAX);
  for (NodeId v = 0; v < n; ++v) {
    NodeId root = root_of(v);
    if (root_label[root] == UINT32_MAX) {
      root_label[root] = static_cast<std::uint32_t>(out.count++);
    }
    out.label[v] = root_label[root];
  }
  return out;
}

std::size_t DisjointSets::set_size(NodeId x) {
  check(x);
  return size_[root_of(x)];
}

}  // namespace tlsra
