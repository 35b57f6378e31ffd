#include "kdelta/synthetic.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace kdelta::synthetic {

TemporalGraph random_temporal_graph(const RandomGraphParams& params,
                                    std::uint64_t seed) {
  if (params.nodes < 2) throw Error("random graph needs at least two nodes");
  if (params.t_min > params.t_max) throw Error("empty timestamp range");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> node(0, params.nodes - 1);
  std::uniform_int_distribution<Timestamp> time(params.t_min, params.t_max);
  std::bernoulli_distribution fact(std::max(params.fact_fraction, 0.0));
  const bool labeled = params.fact_fraction >= 0.0;

  GraphBuilder builder;
  while (builder.edge_count() < params.edges) {
    const std::size_t u = node(rng);
    const std::size_t v = node(rng);
    if (u == v) continue;
    const Timestamp t = time(rng);
    std::optional<Label> label;
    if (labeled) label = fact(rng) ? 1 : 0;
    builder.add_edge(std::to_string(u), std::to_string(v), t, label);
  }
  return std::move(builder).build();
}

TemporalGraph path_graph(std::size_t edges) {
  GraphBuilder builder;
  for (std::size_t i = 0; i < edges; ++i)
    builder.add_edge(std::to_string(i), std::to_string(i + 1),
                     static_cast<Timestamp>(i));
  return std::move(builder).build();
}

PlantedGraph planted_labeled_graph(std::size_t claims_only,
                                   std::size_t facts_only, std::size_t mixed,
                                   std::uint64_t seed, LabelClasses classes) {
  constexpr Timestamp kDelta = 10;
  constexpr std::size_t kGroupNodes = 8;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> edges_per_group(4, 30);
  std::uniform_int_distribution<Timestamp> step(0, kDelta);
  std::uniform_int_distribution<std::size_t> member(0, kGroupNodes - 1);

  std::vector<Homophily> kinds;
  kinds.insert(kinds.end(), claims_only, Homophily::kClaimsOnly);
  kinds.insert(kinds.end(), facts_only, Homophily::kFactsOnly);
  kinds.insert(kinds.end(), mixed, Homophily::kMixed);
  std::shuffle(kinds.begin(), kinds.end(), rng);

  PlantedGraph planted;
  planted.delta = kDelta;
  GraphBuilder builder;
  Timestamp t = 0;
  for (std::size_t c = 0; c < kinds.size(); ++c) {
    PlantedComponent component{kinds[c], {}};
    const std::size_t count = edges_per_group(rng);
    auto token = [c](std::size_t i) {
      return "g" + std::to_string(c) + "_" + std::to_string(i);
    };
    std::size_t previous = member(rng);
    for (std::size_t i = 0; i < count; ++i) {
      std::size_t next = member(rng);
      while (next == previous) next = member(rng);
      Label label = classes.claim;
      if (kinds[c] == Homophily::kFactsOnly) label = classes.fact;
      if (kinds[c] == Homophily::kMixed)
        label = (i == 0 || (i > 1 && rng() % 2 == 0)) ? classes.claim
                                                       : classes.fact;
      component.edges.push_back(static_cast<EdgeId>(builder.edge_count()));
      builder.add_edge(token(previous), token(next), t, label);
      // Either endpoint continues the chain.
      if (rng() % 2 == 0) previous = next;
      t += step(rng);
    }
    planted.components.push_back(std::move(component));
    t += 10 * kDelta;
  }
  planted.graph = std::move(builder).build();
  return planted;
}

}  // namespace kdelta::synthetic
