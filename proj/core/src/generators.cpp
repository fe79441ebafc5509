#include "tlsra/generators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tlsra/disjoint_sets.hpp"
#include "tlsra/random.hpp"

namespace tlsra {

namespace {

bool max_graph_connected(const Instance& inst) {
  DisjointSets sets(inst.n);
  for (NodeId v = 0; v < inst.n; ++v) {
    for (NodeId u : inst.dmax[v]) {
      if (u <= v) continue;
      const auto& back = inst.dmax[u];
      if (std::binary_search(back.begin(), back.end(), v)) sets.unite(u, v);
    }
  }
  return sets.set_count() == 1;
}

void add_symmetric(std::vector<std::vector<NodeId>>& rel, NodeId u, NodeId v) {
  rel[u].push_back(v);
  rel[v].push_back(u);
}

}  // namespace

NodeId WorstCase::id_of(std::uint32_t d, std::uint32_t r, std::uint32_t c) const {
  const TripleLabel key{d, r, c};
  auto it = std::lower_bound(labels.begin(), labels.end(), key);
  if (it == labels.end() || *it != key) {
    throw std::out_of_range("no node labeled (" + std::to_string(d) + "," + std::to_string(r) +
                            "," + std::to_string(c) + ")");
  }
  return static_cast<NodeId>(it - labels.begin());
}

WorstCase gen_worst_case(const WorstCaseParams& params) {
  if (params.k < 3) throw std::invalid_argument("worst-case family needs k >= 3");
  if (params.t < 1) throw std::invalid_argument("worst-case family needs t >= 1");
  const auto k = static_cast<std::uint32_t>(params.k);
  const auto t = static_cast<std::uint32_t>(params.t);

  WorstCase wc;
  wc.labels.push_back({0, 0, 0});
  for (std::uint32_t d = 1; d <= t; ++d) {
    wc.labels.push_back({d, 3, 0});
    for (std::uint32_t r = 1; r <= 3; ++r) {
      for (std::uint32_t c = 1; c < k; ++c) wc.labels.push_back({d, r, c});
    }
  }
  std::sort(wc.labels.begin(), wc.labels.end());

  const std::size_t n = wc.labels.size();
  Instance& inst = wc.instance;
  inst.n = n;
  inst.dmin.assign(n, {});
  inst.dmax.assign(n, {});
  auto id = [&](std::uint32_t d, std::uint32_t r, std::uint32_t c) { return wc.id_of(d, r, c); };
  auto both = [&](NodeId u, NodeId v) {
    add_symmetric(inst.dmin, u, v);
    add_symmetric(inst.dmax, u, v);
  };

  const NodeId root = id(0, 0, 0);
  for (std::uint32_t d = 1; d <= t; ++d) {
    both(root, id(d, 3, 0));
    for (std::uint32_t c = 1; c < k; ++c) both(id(d, 2, c), id(d, 3, c));
    add_symmetric(inst.dmax, root, id(d, 2, 1));
    for (std::uint32_t r = 2; r <= 3; ++r) {
      for (std::uint32_t c = 1; c + 1 < k; ++c) add_symmetric(inst.dmax, id(d, r, c), id(d, r, c + 1));
    }
    add_symmetric(inst.dmax, id(d, 3, 0), id(d, 3, 1));
    for (std::uint32_t c = 1; c < k; ++c) add_symmetric(inst.dmax, id(d, 1, c), id(d, 2, c));
  }
  canonicalize(inst);

  nlohmann::json labels = nlohmann::json::array();
  for (const auto& l : wc.labels) labels.push_back(l);
  inst.meta = {{"generator", "worst-case"}, {"k", params.k}, {"t", params.t},
               {"labels", std::move(labels)}};

  for (std::uint32_t d = 1; d <= t; ++d) {
    std::vector<NodeId> m;
    for (std::uint32_t c = 0; c < k; ++c) m.push_back(id(d, 3, c));
    std::sort(m.begin(), m.end());
    wc.schedule.push_back(std::move(m));
  }
  for (std::uint32_t d = 1; d <= t; ++d) {
    for (std::uint32_t c = 1; c < k; ++c) wc.schedule.push_back({id(d, 1, c), id(d, 2, c)});
  }

  std::vector<bool> is_center(n, false);
  for (std::uint32_t d = 1; d <= t; ++d) {
    wc.fast3_scan_order.push_back(id(d, 3, 1));
    is_center[id(d, 3, 1)] = true;
  }
  for (NodeId v = 0; v < n; ++v) {
    if (!is_center[v]) wc.fast3_scan_order.push_back(v);
  }

  wc.optimal_set.push_back(root);
  for (std::uint32_t d = 1; d <= t; ++d) {
    for (std::uint32_t r = 1; r <= 2; ++r) {
      for (std::uint32_t c = 1; c < k; ++c) wc.optimal_set.push_back(id(d, r, c));
    }
  }
  std::sort(wc.optimal_set.begin(), wc.optimal_set.end());

  wc.expected_greedy_size = params.k * params.t + 2 * (params.k - 1) * params.t;
  wc.expected_opt_size = 1 + 2 * (params.k - 1) * params.t;
  return wc;
}

Instance gen_geometric(const GeometricParams& p) {
  if (p.n == 0) throw std::invalid_argument("geometric: n must be positive");
  if (!(p.r_min > 0.0) || !(p.r_max >= p.r_min) || !std::isfinite(p.r_max)) {
    throw std::invalid_argument("geometric: need 0 < r_min <= r_max");
  }
  if (!(p.side > 0.0) || !std::isfinite(p.side)) {
    throw std::invalid_argument("geometric: side must be positive");
  }

  const double rmin2 = p.r_min * p.r_min;
  const double rmax2 = p.r_max * p.r_max;
  // Cells are at least r_max wide, so neighbors lie in the 3x3 block.
  const auto cap = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(p.n)))) + 1;
  const std::size_t cells =
      std::clamp<std::size_t>(static_cast<std::size_t>(p.side / p.r_max), 1, cap);
  const double cell_size = p.side / static_cast<double>(cells);

  Rng rng(p.seed);
  std::vector<std::array<double, 2>> pts(p.n);
  std::vector<std::size_t> cell_of(p.n);
  std::vector<std::size_t> start(cells * cells + 1);
  std::vector<NodeId> bucket(p.n);

  for (int attempt = 0; attempt < kGeneratorAttempts; ++attempt) {
    std::fill(start.begin(), start.end(), 0);
    for (std::size_t v = 0; v < p.n; ++v) {
      pts[v] = {rng.unit() * p.side, rng.unit() * p.side};
      auto cx = std::min(cells - 1, static_cast<std::size_t>(pts[v][0] / cell_size));
      auto cy = std::min(cells - 1, static_cast<std::size_t>(pts[v][1] / cell_size));
      cell_of[v] = cy * cells + cx;
      ++start[cell_of[v] + 1];
    }
    for (std::size_t c = 0; c < cells * cells; ++c) start[c + 1] += start[c];
    {
      std::vector<std::size_t> fill(start.begin(), start.end() - 1);
      for (std::size_t v = 0; v < p.n; ++v) bucket[fill[cell_of[v]]++] = static_cast<NodeId>(v);
    }

    Instance inst;
    inst.n = p.n;
    inst.dmin.assign(p.n, {});
    inst.dmax.assign(p.n, {});
    for (std::size_t v = 0; v < p.n; ++v) {
      const auto cx = cell_of[v] % cells;
      const auto cy = cell_of[v] / cells;
      for (std::size_t y = (cy ? cy - 1 : 0); y <= std::min(cells - 1, cy + 1); ++y) {
        for (std::size_t x = (cx ? cx - 1 : 0); x <= std::min(cells - 1, cx + 1); ++x) {
          const auto c = y * cells + x;
          for (std::size_t i = start[c]; i < start[c + 1]; ++i) {
            const NodeId u = bucket[i];
            if (u == v) continue;
            const double dx = pts[u][0] - pts[v][0];
            const double dy = pts[u][1] - pts[v][1];
            const double d2 = dx * dx + dy * dy;
            if (d2 <= rmax2) inst.dmax[v].push_back(u);
            if (d2 <= rmin2) inst.dmin[v].push_back(u);
          }
        }
      }
      std::sort(inst.dmax[v].begin(), inst.dmax[v].end());
      std::sort(inst.dmin[v].begin(), inst.dmin[v].end());
    }
    if (!max_graph_connected(inst)) continue;

    inst.meta = {{"generator", "geometric"}, {"n", p.n},        {"r_min", p.r_min},
                 {"r_max", p.r_max},         {"side", p.side},  {"seed", p.seed},
                 {"attempt", attempt}};
    if (p.store_points) {
      nlohmann::json points = nlohmann::json::array();
      for (const auto& pt : pts) points.push_back({pt[0], pt[1]});
      inst.meta["points"] = std::move(points);
    }
    return inst;
  }
  throw GenerationFailed("geometric: max-power graph still disconnected after " +
                         std::to_string(kGeneratorAttempts) + " attempts");
}

Instance gen_random_abstract(const RandomAbstractParams& p) {
  if (p.n == 0) throw std::invalid_argument("random: n must be positive");
  auto in_unit = [](double x) { return x >= 0.0 && x <= 1.0; };
  if (!in_unit(p.min_density) || !in_unit(p.max_density)) {
    throw std::invalid_argument("random: densities must lie in [0, 1]");
  }
  Rng rng(p.seed);
  for (int attempt = 0; attempt < kGeneratorAttempts; ++attempt) {
    Instance inst;
    inst.n = p.n;
    inst.dmin.assign(p.n, {});
    inst.dmax.assign(p.n, {});
    for (NodeId v = 0; v < p.n; ++v) {
      for (NodeId u = 0; u < p.n; ++u) {
        if (u == v) continue;
        const double x = rng.unit();
        const bool in_min = x < p.min_density;
        if (in_min) inst.dmin[v].push_back(u);
        if (in_min || x < p.max_density) inst.dmax[v].push_back(u);
      }
    }
    if (!max_graph_connected(inst)) continue;
    inst.meta = {{"generator", "random"},     {"n", p.n},       {"min_density", p.min_density},
                 {"max_density", p.max_density}, {"seed", p.seed}, {"attempt", attempt}};
    return inst;
  }
  throw GenerationFailed("random: max-power graph still disconnected after " +
                         std::to_string(kGeneratorAttempts) + " attempts");
}

}  // namespace tlsra
