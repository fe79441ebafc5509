#pragma once

#include <string>
#include <vector>

#include "tlsra/generators.hpp"
#include "tlsra/random.hpp"

namespace testing_corpus {

struct Entry {
  std::string name;
  tlsra::Instance instance;
};

// Seed-pinned desk-scale corpus: `per_family` geometric and `per_family`
// abstract instances with 4 <= n <= 12.
inline std::vector<Entry> small_corpus(std::size_t per_family = 300) {
  std::vector<Entry> out;
  tlsra::Rng params(20240601);
  for (std::size_t i = 0; i < per_family; ++i) {
    tlsra::GeometricParams p;
    p.n = 4 + i % 9;
    p.r_max = 0.35 + 0.35 * params.unit();
    p.r_min = p.r_max * (0.2 + 0.5 * params.unit());
    p.seed = 1000 + i;
    out.push_back({"geometric-" + std::to_string(i), tlsra::gen_geometric(p)});
  }
  for (std::size_t i = 0; i < per_family; ++i) {
    tlsra::RandomAbstractParams p;
    p.n = 4 + i % 9;
    p.min_density = 0.4 * params.unit();
    p.max_density = 0.5 + 0.45 * params.unit();
    p.seed = 5000 + i;
    out.push_back({"random-" + std::to_string(i), tlsra::gen_random_abstract(p)});
  }
  return out;
}

}  // namespace testing_corpus
