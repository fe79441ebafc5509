#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "tlsra/instance.hpp"

namespace tlsra {

class GenerationFailed : public Error {
 public:
  using Error::Error;
};

// Connectivity retries before a random generator gives up.
inline constexpr int kGeneratorAttempts = 100;

struct WorstCaseParams {
  std::size_t k = 3;  // >= 3
  std::size_t t = 1;  // >= 1
};

// (d, r, c) label of a node in the worst-case family.
using TripleLabel = std::array<std::uint32_t, 3>;

// Worst-case family I_t for Approx2LSRA_k. Node ids are the positions of
// the labels in lexicographic order, (0,0,0) first:
//   (0,0,0) < (d,1,c) < (d,2,c) < (d,3,0) < (d,3,c)   for each d in turn.
// The bijection is also written to meta.labels.
struct WorstCase {
  Instance instance;
  std::vector<TripleLabel> labels;                // id -> label
  std::vector<std::vector<NodeId>> schedule;      // adversarial merging order
  std::vector<NodeId> fast3_scan_order;           // centers (d,3,1) first; k = 3 only
  std::vector<NodeId> optimal_set;                // {(0,0,0)} + all (d,r,c), r in {1,2}
  std::size_t expected_greedy_size = 0;           // kt + 2(k-1)t
  std::size_t expected_opt_size = 0;              // 1 + 2(k-1)t

  NodeId id_of(std::uint32_t d, std::uint32_t r, std::uint32_t c) const;
};

// Throws std::invalid_argument for k < 3 or t < 1.
WorstCase gen_worst_case(const WorstCaseParams& params);

struct GeometricParams {
  std::size_t n = 0;
  double r_min = 0.0;  // 0 < r_min <= r_max
  double r_max = 0.0;
  double side = 1.0;   // points uniform in [0, side)^2
  std::uint64_t seed = 0;
  bool store_points = true;  // write coordinates to meta.points
};

// Two-radius unit-disk instance: u in d(v) iff |uv| <= r (closed ball).
// Redraws all points until G(V) is connected. Throws std::invalid_argument
// or GenerationFailed after kGeneratorAttempts tries.
Instance gen_geometric(const GeometricParams& params);

struct RandomAbstractParams {
  std::size_t n = 0;
  double min_density = 0.0;  // P(u in dmin(v))
  double max_density = 0.0;  // P(u in dmax(v)); dmin(v) is always added
  std::uint64_t seed = 0;
};

// Independent directed reachability draws, generally asymmetric.
Instance gen_random_abstract(const RandomAbstractParams& params);

}  // namespace tlsra
