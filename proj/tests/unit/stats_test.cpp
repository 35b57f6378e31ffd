#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "kdelta/oracle.hpp"
#include "kdelta/stats.hpp"
#include "test_graphs.hpp"

namespace kdelta {
namespace {

using testing::toy_graph;

// Gaps between sorted timestamps per node, straight from the edge array.
std::vector<Timestamp> brute_iets(const TemporalGraph& g) {
  std::map<NodeId, std::vector<Timestamp>> times;
  for (const auto& e : g.edges()) {
    times[e.u].push_back(e.t);
    times[e.v].push_back(e.t);
  }
  std::vector<Timestamp> out;
  for (auto& [node, ts] : times) {
    std::sort(ts.begin(), ts.end());
    for (std::size_t i = 1; i < ts.size(); ++i) out.push_back(ts[i] - ts[i - 1]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Timestamp brute_rank(const std::vector<Timestamp>& sorted, int percent) {
  // Smallest value with at least percent% of the sample at or below it.
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (100 * (i + 1) >= static_cast<std::size_t>(percent) * sorted.size())
      return sorted[i];
  return sorted.back();
}

TEST(IetPercentiles, ThreeEdgeStar) {
  auto g = parse_graph("a b 0\na c 10\na d 30\n");
  auto s = iet_percentiles(g, {0.5});
  EXPECT_EQ(s.iets, (std::vector<Timestamp>{10, 20}));
  EXPECT_EQ(s.percentiles.at(0.5), 10);
}

TEST(IetPercentiles, ToyGraph) {
  auto s = iet_percentiles(toy_graph());
  std::vector<Timestamp> expected{0, 3, 6, 10, 2, 2, 3, 2, 12, 3,
                                  2, 3, 2, 12, 2, 2, 0, 4, 10, 3};
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(s.iets, expected);
  EXPECT_EQ(s.percentiles.at(0.10), 0);
  EXPECT_EQ(s.percentiles.at(0.25), 2);
  EXPECT_EQ(s.percentiles.at(0.50), 3);
  EXPECT_EQ(s.percentiles.at(0.75), 4);
}

TEST(IetPercentiles, ConstantGapGivesEqualPercentiles) {
  auto g = parse_graph("a b 0\na c 7\na d 14\na e 21\n");
  auto s = iet_percentiles(g);
  EXPECT_EQ(s.iets.front(), s.iets.back());
  for (const auto& [p, v] : s.percentiles) EXPECT_EQ(v, 7);
}

TEST(IetPercentiles, SimultaneousEdgesGiveZeroGaps) {
  auto s = iet_percentiles(parse_graph("a b 5\na c 5\n"));
  EXPECT_EQ(s.iets, (std::vector<Timestamp>{0}));
}

TEST(IetPercentiles, Errors) {
  EXPECT_THROW(iet_percentiles(parse_graph("a b 1\nc d 2\n")), Error);
  EXPECT_THROW(nearest_rank({1, 2}, 0.0), Error);
  EXPECT_THROW(nearest_rank({1, 2}, 1.5), Error);
  EXPECT_THROW(nearest_rank({}, 0.5), Error);
}

TEST(IetPercentiles, MatchBruteForce) {
  std::mt19937_64 rng(43);
  for (int round = 0; round < 50; ++round) {
    auto g = testing::random_instance(rng);
    auto brute = brute_iets(g);
    if (brute.empty()) continue;
    auto s = iet_percentiles(g, {0.1, 0.25, 0.5, 0.75, 1.0});
    ASSERT_EQ(s.iets, brute);
    ASSERT_EQ(s.percentiles.at(0.1), brute_rank(brute, 10));
    ASSERT_EQ(s.percentiles.at(0.25), brute_rank(brute, 25));
    ASSERT_EQ(s.percentiles.at(0.5), brute_rank(brute, 50));
    ASSERT_EQ(s.percentiles.at(0.75), brute_rank(brute, 75));
    ASSERT_EQ(s.percentiles.at(1.0), brute.back());
    Timestamp previous = 0;
    for (const auto& [p, v] : s.percentiles) {
      ASSERT_GE(v, previous);
      previous = v;
    }
  }
}

TEST(DeltaStats, Examples) {
  auto g = toy_graph();
  // (c,d,6) sees four edges at either endpoint within 5, although no edge
  // survives in a (4,5)-core.
  EXPECT_EQ(delta_stats(g, 5).max_degree, 4);
  EXPECT_EQ(kd_core_decompose(g, 5).max_value(), 3);

  auto single = delta_stats(parse_graph("a b 3\n"), 4);
  EXPECT_EQ(single.avg_degree, 1.0);
  EXPECT_EQ(single.max_degree, 1);
  EXPECT_EQ(single.avg_support, 0.0);
  EXPECT_EQ(single.max_support, 0);
  EXPECT_EQ(single.xi, 1);

  // Per-edge brute force at delta 2: degrees sum to 19, supports to 6.
  auto s = delta_stats(g, 2);
  EXPECT_EQ(s.delta, 2);
  EXPECT_DOUBLE_EQ(s.avg_degree, 19.0 / 12.0);
  EXPECT_EQ(s.max_degree, 2);
  EXPECT_DOUBLE_EQ(s.avg_support, 6.0 / 12.0);
  EXPECT_EQ(s.max_support, 1);
  EXPECT_EQ(s.xi, 4);
}

TEST(DeltaStats, MatchesBruteForce) {
  std::mt19937_64 rng(47);
  for (int round = 0; round < 30; ++round) {
    auto g = testing::random_instance(rng);
    const Timestamp delta = testing::random_delta(rng, g);
    std::vector<std::uint8_t> live(g.edge_count(), 1);
    Weight sum_d = 0, sum_s = 0, max_d = 0, max_s = 0, xi = 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const Weight d = oracle::brute_degree(g, e, live, delta);
      const Weight s = oracle::brute_support(g, e, live, delta);
      sum_d += d;
      sum_s += s;
      max_d = std::max(max_d, d);
      max_s = std::max(max_s, s);
      const auto& a = g.edge(e);
      Weight near = 0;
      for (const auto& b : g.edges())
        if ((b.u == a.u || b.v == a.u || b.u == a.v || b.v == a.v) &&
            std::abs(b.t - a.t) <= delta)
          ++near;
      xi = std::max(xi, near);
    }
    auto stats = delta_stats(g, delta);
    const double m = static_cast<double>(g.edge_count());
    ASSERT_DOUBLE_EQ(stats.avg_degree, sum_d / m);
    ASSERT_DOUBLE_EQ(stats.avg_support, sum_s / m);
    ASSERT_EQ(stats.max_degree, max_d);
    ASSERT_EQ(stats.max_support, max_s);
    ASSERT_EQ(stats.xi, xi);
    ASSERT_GE(stats.xi, stats.max_degree);
    ASSERT_GE(stats.avg_degree, 1.0);
  }
}

TEST(DeltaStats, NondecreasingInDelta) {
  std::mt19937_64 rng(53);
  for (int round = 0; round < 10; ++round) {
    auto g = testing::random_instance(rng);
    DeltaStats previous;
    for (Timestamp d = 0; d <= max_delta(g); ++d) {
      auto s = delta_stats(g, d);
      ASSERT_GE(s.avg_degree, previous.avg_degree);
      ASSERT_GE(s.max_degree, previous.max_degree);
      ASSERT_GE(s.avg_support, previous.avg_support);
      ASSERT_GE(s.max_support, previous.max_support);
      ASSERT_GE(s.xi, previous.xi);
      previous = s;
    }
  }
}

TEST(LabelReport, Examples) {
  LoadOptions labeled;
  labeled.labeled = true;
  auto claims = parse_graph("a b 0 0\nb c 10 0\n", labeled);
  auto r = component_label_report(claims, delta_connected_components(claims, 10));
  ASSERT_EQ(r.components.size(), 1u);
  EXPECT_EQ(r.components[0].homophily, Homophily::kClaimsOnly);
  EXPECT_DOUBLE_EQ(r.components[0].frequency, 0.1);
  EXPECT_EQ(r.components[0].nodes, 3u);
  EXPECT_EQ(r.claims_only, 1u);
  EXPECT_DOUBLE_EQ(r.mean_frequency_claims, 0.1);

  auto two = parse_graph("a b 0 1\nb c 3 0\nx y 100 1\n", labeled);
  auto split = component_label_report(two, delta_connected_components(two, 5));
  ASSERT_EQ(split.components.size(), 2u);
  EXPECT_EQ(split.components[0].homophily, Homophily::kMixed);
  EXPECT_EQ(split.components[1].homophily, Homophily::kFactsOnly);
  EXPECT_EQ(split.components[1].frequency, 0.0);
  EXPECT_EQ(split.mixed, 1u);
  EXPECT_EQ(split.facts_only, 1u);

  auto same_time = parse_graph("a b 4 1\nb c 4 1\n", labeled);
  auto flat = component_label_report(same_time,
                                     delta_connected_components(same_time, 0));
  EXPECT_EQ(flat.components[0].frequency, 0.0);
}

TEST(LabelReport, Errors) {
  auto plain = parse_graph("a b 0\n");
  EXPECT_THROW(component_label_report(plain, delta_connected_components(plain, 1)),
               Error);
  LoadOptions labeled;
  labeled.labeled = true;
  auto odd = parse_graph("a b 0 7\n", labeled);
  EXPECT_THROW(component_label_report(odd, delta_connected_components(odd, 1)),
               Error);
  LabelClasses custom{7, 8};
  EXPECT_NO_THROW(
      component_label_report(odd, delta_connected_components(odd, 1), custom));
}

TEST(LabelReport, PlantedMixedComponent) {
  auto planted = synthetic::planted_labeled_graph(3, 2, 1, 5);
  auto r = component_label_report(
      planted.graph, delta_connected_components(planted.graph, planted.delta));
  EXPECT_EQ(r.mixed, 1u);
  EXPECT_EQ(r.claims_only, 3u);
  EXPECT_EQ(r.facts_only, 2u);
  std::size_t total = 0;
  for (const auto& c : r.components)
    for (const auto& [label, count] : c.census) total += count;
  EXPECT_EQ(total, planted.graph.edge_count());
}

TEST(Clustering, Examples) {
  EXPECT_DOUBLE_EQ(clustering_coefficient(parse_graph("a b 1\nb c 2\na c 3\n")), 1.0);
  EXPECT_DOUBLE_EQ(clustering_coefficient(parse_graph("h a 1\nh b 2\nh c 3\n")), 0.0);
  EXPECT_DOUBLE_EQ(clustering_coefficient(parse_graph("a b 1\n")), 0.0);
  // Parallel edges collapse.
  EXPECT_DOUBLE_EQ(
      clustering_coefficient(parse_graph("a b 1\na b 9\nb c 2\na c 3\n")), 1.0);

  // The (2,2)-core spans a-b, a-c, b-c, c-d, b-d: 2 triangles, 8 triples.
  auto g = toy_graph();
  auto core = extract_subgraph(g, kd_core_decompose(g, 2), 2);
  EXPECT_DOUBLE_EQ(clustering_coefficient(core), 0.75);
}

TEST(HierarchySweep, ToyCoreAtDeltaFive) {
  auto g = toy_graph();
  auto rows = hierarchy_sweep(g, kd_core_decompose(g, 5));
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].k, 1);
  EXPECT_EQ(rows[0].edges, 12u);
  EXPECT_EQ(rows[1].edges, 11u);
  EXPECT_EQ(rows[2].edges, 7u);
  EXPECT_EQ(rows[2].nodes, 4u);
  EXPECT_FALSE(rows[0].labels.has_value());
  for (std::size_t i = 1; i < rows.size(); ++i)
    EXPECT_LE(rows[i].edges, rows[i - 1].edges);
}

// Every distinct |t1 - t2| over pairs of edges sharing a node.
std::vector<Timestamp> same_node_differences(const TemporalGraph& g) {
  std::vector<Timestamp> out;
  for (const auto& a : g.edges())
    for (const auto& b : g.edges())
      if (a.id < b.id &&
          (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v))
        out.push_back(std::abs(a.t - b.t));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TEST(Plateau, DeltaBetweenConsecutiveDifferencesGivesSameResult) {
  std::mt19937_64 rng(59);
  for (int round = 0; round < 20; ++round) {
    synthetic::RandomGraphParams p;
    p.nodes = 8;
    p.edges = 40;
    p.t_max = 1000;
    auto g = synthetic::random_temporal_graph(p, rng());
    auto diffs = same_node_differences(g);
    for (std::size_t i = 1; i < diffs.size(); ++i) {
      if (diffs[i] - diffs[i - 1] < 3) continue;
      const Timestamp lo = diffs[i - 1] + 1;
      const Timestamp hi = diffs[i] - 1;
      ASSERT_EQ(kd_core_decompose(g, lo).values, kd_core_decompose(g, hi).values);
      ASSERT_EQ(kd_truss_decompose(g, lo).values, kd_truss_decompose(g, hi).values);
      ASSERT_EQ(delta_connected_components(g, lo).components,
                delta_connected_components(g, hi).components);
    }
  }
}

TEST(Plateau, ConsecutiveGapsAloneDoNotFixTheResult) {
  // Gaps are {3, 3, 3, 3, 10}, yet the first and last a-b edge are 6 apart.
  auto g = parse_graph("a b 0\na b 3\na b 6\nx y 100\nx z 110\n");
  auto distinct = iet_percentiles(g, {0.5}).iets;
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  EXPECT_EQ(distinct, (std::vector<Timestamp>{3, 10}));
  EXPECT_EQ(kd_core_decompose(g, 4).values, (std::vector<Weight>{2, 2, 2, 1, 1}));
  EXPECT_EQ(kd_core_decompose(g, 9).values, (std::vector<Weight>{3, 3, 3, 1, 1}));
}

}  // namespace
}  // namespace kdelta
