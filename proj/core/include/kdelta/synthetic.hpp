#pragma once

#include <cstdint>
#include <vector>

#include "kdelta/graph.hpp"
#include "kdelta/stats.hpp"

namespace kdelta::synthetic {

struct RandomGraphParams {
  std::size_t nodes = 10;
  std::size_t edges = 40;
  Timestamp t_min = 0;
  Timestamp t_max = 100;
  // Fraction of edges labeled with the fact-checking label; negative means
  // unlabeled.
  double fact_fraction = -1.0;
};

// Uniform endpoints (u != v) and uniform timestamps. Node tokens are the
// decimal node indices. Requires nodes >= 2.
TemporalGraph random_temporal_graph(const RandomGraphParams& params,
                                    std::uint64_t seed);

// Edge i joins node i and i + 1 at time i.
TemporalGraph path_graph(std::size_t edges);

struct PlantedComponent {
  Homophily expected;
  std::vector<EdgeId> edges;  // ascending
};

struct PlantedGraph {
  TemporalGraph graph;
  Timestamp delta = 0;
  std::vector<PlantedComponent> components;
};

// Disjoint groups of nodes, each producing a chain of edges whose
// consecutive timestamps differ by at most delta and share an endpoint; the
// groups are separated in time by more than delta. Labels are uniform inside
// claims-only / facts-only groups and contain both classes in mixed ones.
PlantedGraph planted_labeled_graph(std::size_t claims_only,
                                   std::size_t facts_only, std::size_t mixed,
                                   std::uint64_t seed, LabelClasses classes = {});

}  // namespace kdelta::synthetic
