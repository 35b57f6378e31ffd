#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "kdelta/decomposition.hpp"
#include "kdelta/oracle.hpp"
#include "test_graphs.hpp"

namespace kdelta {
namespace {

using testing::edge_id;
using testing::key;
using testing::toy_graph;

std::set<testing::EdgeKey> keys_with_value(const TemporalGraph& g,
                                           const DecompositionResult& r,
                                           Weight value) {
  std::set<testing::EdgeKey> out;
  for (const auto& e : g.edges())
    if (r.values[e.id] == value)
      out.insert(key(g.node_token(e.u), g.node_token(e.v), e.t));
  return out;
}

TEST(DeltaDegree, ToyExamples) {
  auto g = toy_graph();
  auto live = EdgeSet::all(g.edge_count());
  EXPECT_EQ(delta_degree(g, edge_id(g, "a", "b", 1), live, 5), 3);
  EXPECT_EQ(delta_degree(g, edge_id(g, "a", "d", 4), live, 2), 1);
  auto single = parse_graph("x y 3\n");
  auto one = EdgeSet::all(1);
  for (Timestamp d : {0, 1, 1000}) EXPECT_EQ(delta_degree(single, 0, one, d), 1);
}

TEST(DeltaDegree, RejectsEdgesOutsideLiveSet) {
  auto g = toy_graph();
  auto live = EdgeSet::all(g.edge_count());
  live.erase(3);
  EXPECT_THROW(delta_degree(g, 3, live, 2), Error);
  EXPECT_THROW(delta_support(g, 3, live, 2), Error);
}

TEST(DeltaSupport, ToyExamples) {
  auto g = toy_graph();
  auto live = EdgeSet::all(g.edge_count());
  EXPECT_EQ(delta_support(g, edge_id(g, "a", "b", 1), live, 5), 2);

  auto path = parse_graph("a b 1\nb c 1\nc d 1\nd e 2\n");
  auto all = EdgeSet::all(path.edge_count());
  for (EdgeId e = 0; e < path.edge_count(); ++e)
    EXPECT_EQ(delta_support(path, e, all, 100), 0);

  auto tri = parse_graph("a b 1\na c 1\nb c 1\n");
  EXPECT_EQ(delta_support(tri, 0, EdgeSet::all(3), 0), 1);
}

TEST(DeltaSupport, ParallelEdgesFormDistinctPairs) {
  // Two a-c edges close two triangles with a-b; the parallel a-b edge is
  // not a triangle partner.
  auto g = parse_graph("a b 1\na c 1\na c 2\nb c 1\na b 2\n");
  EXPECT_EQ(delta_support(g, 0, EdgeSet::all(5), 5), 2);
}

TEST(WeightMonotonicity, RandomSubsets) {
  std::mt19937_64 rng(21);
  for (int round = 0; round < 40; ++round) {
    auto g = testing::random_instance(rng, 12, 60);
    const Timestamp delta = testing::random_delta(rng, g);
    auto big = EdgeSet::all(g.edge_count());
    auto small = EdgeSet::all(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (rng() % 3 == 0) small.erase(e);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (!small.contains(e)) continue;
      ASSERT_LE(delta_degree(g, e, small, delta), delta_degree(g, e, big, delta));
      ASSERT_LE(delta_support(g, e, small, delta),
                delta_support(g, e, big, delta));
    }
  }
}

TEST(KdCore, ToyDeltaTwo) {
  auto g = toy_graph();
  auto r = kd_core_decompose(g, 2);
  EXPECT_EQ(r.kind, DecompositionKind::kCore);
  EXPECT_EQ(keys_with_value(g, r, 2),
            (std::set<testing::EdgeKey>{key("a", "b", 1), key("a", "c", 1),
                                        key("b", "c", 3), key("b", "c", 8),
                                        key("c", "d", 6), key("b", "d", 6)}));
  EXPECT_EQ(keys_with_value(g, r, 1).size(), 6u);
}

TEST(KdCore, ToyDeltaFive) {
  auto g = toy_graph();
  auto r = kd_core_decompose(g, 5);
  EXPECT_EQ(keys_with_value(g, r, 3),
            (std::set<testing::EdgeKey>{key("a", "b", 1), key("a", "c", 1),
                                        key("b", "c", 3), key("a", "d", 4),
                                        key("c", "d", 6), key("b", "d", 6),
                                        key("b", "c", 8)}));
  EXPECT_EQ(keys_with_value(g, r, 2),
            (std::set<testing::EdgeKey>{key("a", "b", 20), key("c", "d", 20),
                                        key("a", "c", 22), key("b", "d", 23)}));
  EXPECT_EQ(keys_with_value(g, r, 1),
            (std::set<testing::EdgeKey>{key("a", "d", 10)}));
}

TEST(KdTruss, ToyDeltaFive) {
  auto g = toy_graph();
  auto r = kd_truss_decompose(g, 5);
  EXPECT_EQ(r.kind, DecompositionKind::kTruss);
  const std::set<testing::EdgeKey> truss{key("a", "b", 1), key("a", "c", 1),
                                         key("b", "c", 3), key("a", "d", 4),
                                         key("c", "d", 6), key("b", "d", 6)};
  EXPECT_EQ(keys_with_value(g, r, 2), truss);
  for (const auto& e : g.edges()) EXPECT_LE(r.values[e.id], 2);
}

TEST(KdTruss, TriangleFreeGraphIsAllZero) {
  auto g = parse_graph("a b 1\nb c 2\nc d 3\nd a 4\na b 5\n");
  for (Timestamp d : {0, 3, 100})
    for (Weight v : kd_truss_decompose(g, d).values) EXPECT_EQ(v, 0);
}

TEST(KdCore, EmptyGraph) {
  auto g = parse_graph("");
  EXPECT_TRUE(kd_core_decompose(g, 3).values.empty());
  EXPECT_TRUE(kd_truss_decompose(g, 3).values.empty());
  EXPECT_THROW(kd_core_decompose(g, -1), Error);
}

TEST(GenericDecompose, MatchesSpecialisedPeeling) {
  auto g = toy_graph();
  for (Timestamp d : {0, 2, 5, 22}) {
    EXPECT_EQ(generic_decompose(g, delta_degree_weight(g, d),
                                DecompositionKind::kCore, d)
                  .values,
              kd_core_decompose(g, d).values);
    EXPECT_EQ(generic_decompose(g, delta_support_weight(g, d),
                                DecompositionKind::kTruss, d)
                  .values,
              kd_truss_decompose(g, d).values);
  }
}

TEST(GenericDecompose, ConstantWeight) {
  auto g = toy_graph();
  EdgeWeightFunction one{[](EdgeId, const EdgeSet&) { return Weight{1}; },
                         [](EdgeId, const EdgeSet&) { return std::vector<EdgeId>{}; }};
  for (Weight v : generic_decompose(g, one, DecompositionKind::kCore).values)
    EXPECT_EQ(v, 1);
}

TEST(GenericDecompose, StaticDegreeOnMultigraph) {
  // a-b twice, b-c, c-a, c-d.
  auto g = parse_graph("a b 1\na b 9\nb c 4\nc a 2\nc d 7\n");
  EdgeWeightFunction static_degree;
  static_degree.evaluate = [&g](EdgeId e, const EdgeSet& live) {
    Weight at_u = 0, at_v = 0;
    for (const auto& f : g.edges()) {
      if (!live.contains(f.id)) continue;
      if (f.u == g.edge(e).u || f.v == g.edge(e).u) ++at_u;
      if (f.u == g.edge(e).v || f.v == g.edge(e).v) ++at_v;
    }
    return std::min(at_u, at_v);
  };
  static_degree.affected = [&g](EdgeId removed, const EdgeSet& live) {
    std::vector<EdgeId> out;
    const auto& r = g.edge(removed);
    for (const auto& f : g.edges())
      if (live.contains(f.id) &&
          (f.u == r.u || f.v == r.u || f.u == r.v || f.v == r.v))
        out.push_back(f.id);
    return out;
  };
  auto values =
      generic_decompose(g, static_degree, DecompositionKind::kCore).values;
  EXPECT_EQ(values, oracle::static_edge_core_numbers(g));
  // Frozen from the fixpoint oracle: c has only two triangle edges, so the
  // triangle with the doubled a-b edge is a 2-core; c-d hangs off at 1.
  EXPECT_EQ(values, (std::vector<Weight>{2, 2, 2, 2, 1}));
}

TEST(ExtractSubgraph, ToyCoresAndShells) {
  auto g = toy_graph();
  auto r2 = kd_core_decompose(g, 2);
  auto core = extract_subgraph(g, r2, 2);
  EXPECT_EQ(testing::edge_keys(core),
            (std::multiset<testing::EdgeKey>{
                key("a", "b", 1), key("a", "c", 1), key("b", "c", 3),
                key("b", "c", 8), key("c", "d", 6), key("b", "d", 6)}));
  EXPECT_EQ(core.node_count(), 4u);
  for (const auto& e : core.edges()) {
    const auto& src = g.edge(core.original_edge(e.id));
    EXPECT_EQ(src.t, e.t);
    EXPECT_EQ(g.node_token(src.u), core.node_token(e.u));
  }

  EXPECT_EQ(extract_subgraph(g, r2, 1).edge_count(), g.edge_count());
  EXPECT_EQ(extract_subgraph(g, r2, 3).edge_count(), 0u);

  auto shell = extract_subgraph(g, kd_core_decompose(g, 5), 2,
                                ExtractMode::kExactly);
  EXPECT_EQ(testing::edge_keys(shell),
            (std::multiset<testing::EdgeKey>{key("a", "b", 20),
                                             key("c", "d", 20),
                                             key("a", "c", 22),
                                             key("b", "d", 23)}));
}

TEST(DecompositionProperties, CoreValuesAreAtLeastOne) {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 30; ++round) {
    auto g = testing::random_instance(rng);
    auto r = kd_core_decompose(g, testing::random_delta(rng, g));
    for (Weight v : r.values) ASSERT_GE(v, 1);
  }
}

TEST(DecompositionProperties, CoresAndTrussesSatisfyTheirBoundAndAreMaximal) {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 25; ++round) {
    auto g = testing::random_instance(rng, 12, 50);
    const Timestamp delta = testing::random_delta(rng, g);
    for (auto kind : {DecompositionKind::kCore, DecompositionKind::kTruss}) {
      auto r = decompose(g, kind, delta);
      for (Weight k = 1; k <= r.max_value() + 1; ++k) {
        auto members = EdgeSet::none(g.edge_count());
        std::vector<EdgeId> ids;
        for (EdgeId e = 0; e < g.edge_count(); ++e)
          if (r.values[e] >= k) {
            members.insert(e);
            ids.push_back(e);
          }
        for (EdgeId e : ids) {
          const Weight w = kind == DecompositionKind::kCore
                               ? delta_degree(g, e, members, delta)
                               : delta_support(g, e, members, delta);
          ASSERT_GE(w, k);
        }
        const auto maximal = kind == DecompositionKind::kCore
                                 ? oracle::fixpoint_core(g, delta, k)
                                 : oracle::fixpoint_truss(g, delta, k);
        ASSERT_EQ(ids, maximal);
      }
    }
  }
}

TEST(DecompositionProperties, MonotoneInDelta) {
  std::mt19937_64 rng(1234);
  for (int round = 0; round < 30; ++round) {
    auto g = testing::random_instance(rng);
    Timestamp small = testing::random_delta(rng, g);
    Timestamp large = testing::random_delta(rng, g);
    if (small > large) std::swap(small, large);
    for (auto kind : {DecompositionKind::kCore, DecompositionKind::kTruss}) {
      auto lo = decompose(g, kind, small);
      auto hi = decompose(g, kind, large);
      for (EdgeId e = 0; e < g.edge_count(); ++e)
        ASSERT_LE(lo.values[e], hi.values[e]);
    }
  }
}

TEST(DecompositionProperties, InputOrderDoesNotMatter) {
  std::mt19937_64 rng(77);
  auto g = testing::random_instance(rng, 15, 100);
  std::ostringstream text;
  write_graph(text, g);
  std::vector<std::string> lines;
  std::istringstream in(text.str());
  for (std::string line; std::getline(in, line);) lines.push_back(line);

  auto value_map = [](const TemporalGraph& h, const DecompositionResult& r) {
    std::multiset<std::pair<testing::EdgeKey, Weight>> out;
    for (const auto& e : h.edges())
      out.emplace(key(h.node_token(e.u), h.node_token(e.v), e.t),
                  r.values[e.id]);
    return out;
  };
  const Timestamp delta = 7;
  const auto core = value_map(g, kd_core_decompose(g, delta));
  const auto truss = value_map(g, kd_truss_decompose(g, delta));
  for (int round = 0; round < 10; ++round) {
    std::shuffle(lines.begin(), lines.end(), rng);
    std::string joined;
    for (const auto& l : lines) joined += l + "\n";
    auto h = parse_graph(joined);
    EXPECT_EQ(value_map(h, kd_core_decompose(h, delta)), core);
    EXPECT_EQ(value_map(h, kd_truss_decompose(h, delta)), truss);
  }
}

}  // namespace
}  // namespace kdelta
