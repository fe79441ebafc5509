#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "corpus.hpp"
#include "oracles.hpp"
#include "tlsra/generators.hpp"
#include "tlsra/instance.hpp"
#include "tlsra/random.hpp"

using namespace tlsra;

namespace {

Instance make(std::size_t n, std::vector<std::vector<NodeId>> dmin,
              std::vector<std::vector<NodeId>> dmax) {
  Instance inst;
  inst.n = n;
  inst.dmin = std::move(dmin);
  inst.dmax = std::move(dmax);
  return inst;
}

bool has_kind(const std::vector<Violation>& vs, Violation::Kind kind) {
  return std::any_of(vs.begin(), vs.end(), [&](const Violation& v) { return v.kind == kind; });
}

}  // namespace

TEST_CASE("validate accepts the minimal two-node instance") {
  CHECK(validate(make(2, {{1}, {0}}, {{1}, {0}})).empty());
}

TEST_CASE("validate reports broken containment at the offending node") {
  auto vs = validate(make(2, {{1}, {}}, {{}, {0}}));
  REQUIRE_FALSE(vs.empty());
  CHECK(vs.front().kind == Violation::Kind::containment);
  CHECK(vs.front().nodes == std::vector<NodeId>{0});
  // no mutual max pair either
  CHECK(has_kind(vs, Violation::Kind::disconnected));
}

TEST_CASE("validate reports a disconnected max-power graph") {
  auto vs = validate(make(3, {{}, {}, {}}, {{1}, {0}, {}}));
  REQUIRE(vs.size() == 1);
  CHECK(vs[0].kind == Violation::Kind::disconnected);
  CHECK(vs[0].nodes == std::vector<NodeId>{2});
  CHECK(vs[0].message.find("2 connected components") != std::string::npos);
}

TEST_CASE("validate flags shape, range, self loops and ordering") {
  CHECK(validate(Instance{}).front().kind == Violation::Kind::empty);
  CHECK(validate(make(2, {{1}}, {{1}, {0}})).front().kind == Violation::Kind::shape);
  CHECK(has_kind(validate(make(2, {{}, {}}, {{5}, {0}})), Violation::Kind::out_of_range));
  CHECK(has_kind(validate(make(2, {{}, {}}, {{0, 1}, {0}})), Violation::Kind::self_loop));
  CHECK(has_kind(validate(make(3, {{}, {}, {}}, {{2, 1}, {0}, {0}})),
                 Violation::Kind::not_canonical));
}

TEST_CASE("canonicalize strips self loops and can repair containment") {
  auto inst = make(3, {{2, 0}, {}, {0}}, {{1, 1, 0}, {0, 2}, {1}});
  auto report = canonicalize(inst);
  CHECK(report.self_loops_stripped == 2);
  CHECK(report.duplicates_dropped == 1);
  CHECK(inst.dmin[0] == std::vector<NodeId>{2});
  CHECK(has_kind(validate(inst), Violation::Kind::containment));

  auto repaired = canonicalize(inst, {.repair_containment = true});
  CHECK(repaired.containment_repaired == 2);
  CHECK(inst.dmax[0] == std::vector<NodeId>{1, 2});
  CHECK(inst.dmax[2] == std::vector<NodeId>{0, 1});
  CHECK(validate(inst).empty());
}

TEST_CASE("derive_edges keeps only mutual pairs") {
  SUBCASE("asymmetric link yields no edge") {
    auto g = derive_edges_unchecked(make(2, {{}, {}}, {{1}, {}}));
    CHECK(g.e_max.empty());
  }
  SUBCASE("symmetric link") {
    auto g = derive_edges(make(2, {{}, {}}, {{1}, {0}}));
    CHECK(g.e_max == std::vector<Edge>{{0, 1}});
    CHECK(g.e_min.empty());
  }
  SUBCASE("invalid instance is rejected") {
    CHECK_THROWS_AS(derive_edges(make(3, {{}, {}, {}}, {{1}, {0}, {}})), InvalidInstance);
  }
}

TEST_CASE("worst-case I_1 (k=3) edge counts match an independent expansion") {
  auto wc = gen_worst_case({3, 1});
  // Expand the set definitions over labels, independent of the generator's
  // own construction.
  const auto& L = wc.labels;
  auto is_min = [](const TripleLabel& a, const TripleLabel& b) {
    auto star = [](const TripleLabel& x, const TripleLabel& y) {
      return x == TripleLabel{0, 0, 0} && y[1] == 3 && y[2] == 0;
    };
    auto pair = [](const TripleLabel& x, const TripleLabel& y) {
      return x[0] == y[0] && x[1] == 2 && y[1] == 3 && x[2] == y[2] && x[2] >= 1;
    };
    return star(a, b) || star(b, a) || pair(a, b) || pair(b, a);
  };
  auto is_max = [&](const TripleLabel& a, const TripleLabel& b) {
    if (is_min(a, b)) return true;
    auto root_to_21 = [](const TripleLabel& x, const TripleLabel& y) {
      return x == TripleLabel{0, 0, 0} && y[1] == 2 && y[2] == 1;
    };
    auto chain = [](const TripleLabel& x, const TripleLabel& y) {
      return x[0] == y[0] && x[0] >= 1 && x[1] == y[1] && (x[1] == 2 || x[1] == 3) &&
             x[2] >= 1 && y[2] == x[2] + 1 && y[2] <= 2;  // 1 <= c < k-1
    };
    auto link30 = [](const TripleLabel& x, const TripleLabel& y) {
      return x[0] == y[0] && x[0] >= 1 && x[1] == 3 && y[1] == 3 && x[2] == 0 && y[2] == 1;
    };
    auto spoke = [](const TripleLabel& x, const TripleLabel& y) {
      return x[0] == y[0] && x[0] >= 1 && x[1] == 1 && y[1] == 2 && x[2] == y[2];
    };
    return root_to_21(a, b) || root_to_21(b, a) || chain(a, b) || chain(b, a) ||
           link30(a, b) || link30(b, a) || spoke(a, b) || spoke(b, a);
  };
  std::size_t n_min = 0, n_max = 0;
  for (std::size_t i = 0; i < L.size(); ++i) {
    for (std::size_t j = i + 1; j < L.size(); ++j) {
      n_min += is_min(L[i], L[j]);
      n_max += is_max(L[i], L[j]);
    }
  }
  REQUIRE(n_min == 3);
  REQUIRE(n_max == 9);

  auto g = derive_edges(wc.instance);
  CHECK(g.e_min.size() == n_min);
  CHECK(g.e_max.size() == n_max);
}

TEST_CASE("components examples") {
  CHECK(components(4, {}).count == 4);
  std::vector<Edge> two{{0, 1}, {2, 3}};
  auto lab = components(4, two);
  CHECK(lab.count == 2);
  CHECK(lab.label == std::vector<std::uint32_t>{0, 0, 1, 1});

  for (std::size_t t : {1u, 2u, 5u}) {
    auto wc = gen_worst_case({3, t});
    auto g = derive_edges(wc.instance);
    CHECK(components(g.n, g.e_min).count == 1 + 2 * (3 - 1) * t);
    auto bfs = oracle::bfs_labels(wc.instance.n, oracle::pairs_where(wc.instance, false));
    CHECK(oracle::count_labels(bfs) == static_cast<int>(1 + 4 * t));
  }
}

TEST_CASE("components agrees with an independent BFS on random graphs") {
  Rng rng(7);
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = 1 + rng.below(40);
    std::set<std::pair<NodeId, NodeId>> edge_set;
    const auto m = rng.below(2 * n + 1);
    for (std::uint64_t i = 0; i < m; ++i) {
      auto u = static_cast<NodeId>(rng.below(n));
      auto v = static_cast<NodeId>(rng.below(n));
      if (u != v) edge_set.insert({std::min(u, v), std::max(u, v)});
    }
    std::vector<Edge> edges(edge_set.begin(), edge_set.end());
    auto lab = components(n, edges);
    auto bfs = oracle::bfs_labels(n, edge_set);
    REQUIRE(lab.count == static_cast<std::size_t>(oracle::count_labels(bfs)));
    for (NodeId v = 0; v < n; ++v) CHECK(lab.label[v] == static_cast<std::uint32_t>(bfs[v]));
  }
}

TEST_CASE("min_max_edges") {
  auto wc = gen_worst_case({3, 1});
  auto g = derive_edges(wc.instance);
  CHECK(min_max_edges(g, {}) == g.e_min);
  std::vector<NodeId> all(g.n);
  std::iota(all.begin(), all.end(), NodeId{0});
  CHECK(min_max_edges(g, all) == g.e_max);

  const NodeId a = wc.id_of(1, 3, 0), b = wc.id_of(1, 3, 1), c = wc.id_of(1, 3, 2);
  std::vector<NodeId> u{a, b, c};
  auto expect = g.e_min;
  expect.push_back(make_edge(a, b));
  expect.push_back(make_edge(b, c));
  std::sort(expect.begin(), expect.end());
  CHECK(min_max_edges(g, u) == expect);

  std::vector<NodeId> bad{99};
  CHECK_THROWS_AS(min_max_edges(g, bad), std::out_of_range);
}

TEST_CASE("is_feasible examples") {
  auto wc = gen_worst_case({3, 1});
  auto g = derive_edges(wc.instance);
  std::vector<NodeId> all(g.n);
  std::iota(all.begin(), all.end(), NodeId{0});
  CHECK(is_feasible(g, all));
  CHECK(is_feasible(wc.instance, wc.optimal_set));
  CHECK_FALSE(is_feasible(g, {}));
  CHECK(min_max_component_count(g, {}) == 5);
}

TEST_CASE("edge-set properties over the small corpus") {
  auto corpus = testing_corpus::small_corpus(60);
  Rng rng(99);
  for (const auto& [name, inst] : corpus) {
    CAPTURE(name);
    REQUIRE(validate(inst).empty());
    auto g = derive_edges(inst);

    // symmetry and containment
    for (const auto& [u, v] : g.e_max) {
      CHECK(oracle::max_link(inst, u, v));
    }
    CHECK(std::includes(g.e_max.begin(), g.e_max.end(), g.e_min.begin(), g.e_min.end()));
    CHECK(g.e_max.size() == oracle::pairs_where(inst, true).size());
    CHECK(g.e_min.size() == oracle::pairs_where(inst, false).size());

    // G(U) monotone in U, and feasibility agrees with the oracle
    std::vector<NodeId> small, big;
    for (NodeId v = 0; v < inst.n; ++v) {
      auto x = rng.below(3);
      if (x == 0) small.push_back(v);
      if (x <= 1) big.push_back(v);
    }
    auto es = min_max_edges(g, small);
    auto eb = min_max_edges(g, big);
    CHECK(std::includes(eb.begin(), eb.end(), es.begin(), es.end()));
    if (is_feasible(g, small)) CHECK(is_feasible(g, big));
    CHECK(is_feasible(g, big) == oracle::feasible(inst, big));
    CHECK(static_cast<int>(min_max_component_count(g, small)) ==
          oracle::components_of_g(inst, small));
  }
}
