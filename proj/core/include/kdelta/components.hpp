#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "kdelta/decomposition.hpp"
#include "kdelta/graph.hpp"

namespace kdelta {

using TimeNodeId = std::uint32_t;

struct TimeNode {
  NodeId node;
  Timestamp t;

  friend bool operator==(const TimeNode&, const TimeNode&) = default;
};

// Static graph over time-nodes (u, t). Warp edges link consecutive
// time-nodes of one node whose gap is at most delta; edge edges link the
// two time-nodes of each temporal edge.
struct StaticDeltaRepresentation {
  Timestamp delta = 0;
  // Sorted by (node, t).
  std::vector<TimeNode> time_nodes;
  std::vector<std::pair<TimeNodeId, TimeNodeId>> warp_edges;
  // Indexed by temporal edge id: (time-node of u, time-node of v).
  std::vector<std::pair<TimeNodeId, TimeNodeId>> edge_edges;
};

// Partition of a graph's edge ids into delta-connected components.
// Components are ordered by their smallest edge id; ids inside a component
// are ascending.
struct EdgePartition {
  Timestamp delta = 0;
  std::vector<std::vector<EdgeId>> components;
  std::vector<std::uint32_t> component_of;

  std::size_t size() const { return components.size(); }
};

StaticDeltaRepresentation build_static_representation(const TemporalGraph& g,
                                                      Timestamp delta);

EdgePartition delta_connected_components(const TemporalGraph& g,
                                         Timestamp delta);

// True iff every component, taken alone, gives each of its edges a
// delta-degree (core results) or delta-support (truss results) of at least
// k. `g` is the graph the partition was computed on.
bool component_core_check(const TemporalGraph& g,
                          const EdgePartition& partition,
                          const DecompositionResult& result, Weight k);

// Canonical ordering applied to any grouping of edge ids.
EdgePartition make_partition(std::vector<std::vector<EdgeId>> groups,
                             std::size_t edge_count, Timestamp delta);

}  // namespace kdelta
