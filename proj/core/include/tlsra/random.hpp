#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "tlsra/instance.hpp"

namespace tlsra {

// Platform-independent draws on top of std::mt19937_64. The standard
// distributions are implementation-defined, so generators use these instead
// to keep seeded output bit-identical everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform in [0, bound); bound > 0. Rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

// Uniformly random permutation of 0..n-1 (Fisher-Yates).
std::vector<NodeId> random_permutation(std::size_t n, std::uint64_t seed);

}  // namespace tlsra
