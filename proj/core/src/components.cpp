#include "kdelta/components.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "kdelta/union_find.hpp"

namespace kdelta {

StaticDeltaRepresentation build_static_representation(const TemporalGraph& g,
                                                      Timestamp delta) {
  if (delta < 0) throw Error("delta must be non-negative");
  StaticDeltaRepresentation rep;
  rep.delta = delta;
  rep.edge_edges.resize(g.edge_count());
  rep.time_nodes.reserve(2 * g.edge_count());

  for (NodeId u = 0; u < g.node_count(); ++u) {
    bool have_previous = false;
    Timestamp previous = 0;
    TimeNodeId current = 0;
    for (const Incidence& inc : g.incidence(u)) {
      if (!have_previous || inc.t != previous) {
        current = static_cast<TimeNodeId>(rep.time_nodes.size());
        rep.time_nodes.push_back({u, inc.t});
        if (have_previous && inc.t - previous <= delta)
          rep.warp_edges.emplace_back(current - 1, current);
        previous = inc.t;
        have_previous = true;
      }
      auto& slots = rep.edge_edges[inc.edge];
      if (g.edge(inc.edge).u == u)
        slots.first = current;
      else
        slots.second = current;
    }
  }
  return rep;
}

EdgePartition delta_connected_components(const TemporalGraph& g,
                                         Timestamp delta) {
  const StaticDeltaRepresentation rep = build_static_representation(g, delta);
  UnionFind sets(static_cast<std::uint32_t>(rep.time_nodes.size()));
  for (const auto& [a, b] : rep.warp_edges) sets.unite(a, b);
  for (const auto& [a, b] : rep.edge_edges) sets.unite(a, b);

  EdgePartition partition;
  partition.delta = delta;
  partition.component_of.resize(g.edge_count());
  constexpr std::uint32_t kUnassigned = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> index_of_root(rep.time_nodes.size(), kUnassigned);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const std::uint32_t root = sets.find(rep.edge_edges[e].first);
    if (index_of_root[root] == kUnassigned) {
      index_of_root[root] = static_cast<std::uint32_t>(partition.components.size());
      partition.components.emplace_back();
    }
    partition.component_of[e] = index_of_root[root];
    partition.components[index_of_root[root]].push_back(e);
  }
  // Every time-node stems from an edge, so no component of S_delta lacks an
  // edge edge.
  if (partition.components.size() != sets.set_count())
    throw std::logic_error("static representation has an edgeless component");
  return partition;
}

EdgePartition make_partition(std::vector<std::vector<EdgeId>> groups,
                             std::size_t edge_count, Timestamp delta) {
  EdgePartition p;
  p.delta = delta;
  for (auto& group : groups) {
    if (group.empty()) throw Error("partition contains an empty component");
    std::sort(group.begin(), group.end());
  }
  std::sort(groups.begin(), groups.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  constexpr std::uint32_t kUnassigned = std::numeric_limits<std::uint32_t>::max();
  p.component_of.assign(edge_count, kUnassigned);
  for (std::uint32_t c = 0; c < groups.size(); ++c) {
    for (EdgeId e : groups[c]) {
      if (e >= edge_count || p.component_of[e] != kUnassigned)
        throw Error("partition groups are not disjoint edge ids of the graph");
      p.component_of[e] = c;
    }
  }
  if (std::find(p.component_of.begin(), p.component_of.end(), kUnassigned) !=
      p.component_of.end())
    throw Error("partition does not cover every edge");
  p.components = std::move(groups);
  return p;
}

bool component_core_check(const TemporalGraph& g,
                          const EdgePartition& partition,
                          const DecompositionResult& result, Weight k) {
  if (partition.delta != result.delta)
    throw Error("partition and decomposition use different delta values");
  if (partition.component_of.size() != g.edge_count())
    throw Error("partition does not belong to this graph");

  EdgeSet members = EdgeSet::none(g.edge_count());
  bool ok = true;
  for (const auto& component : partition.components) {
    for (EdgeId e : component) members.insert(e);
    for (EdgeId e : component) {
      const Weight w = result.kind == DecompositionKind::kCore
                           ? delta_degree(g, e, members, result.delta)
                           : delta_support(g, e, members, result.delta);
      if (w < k) {
        ok = false;
        break;
      }
    }
    for (EdgeId e : component) members.erase(e);
    if (!ok) break;
  }
  return ok;
}

}  // namespace kdelta
