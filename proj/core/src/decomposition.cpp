#include "kdelta/decomposition.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "peel_internal.hpp"

namespace kdelta {

std::string_view to_string(DecompositionKind kind) {
  return kind == DecompositionKind::kCore ? "core" : "truss";
}

DecompositionKind parse_kind(std::string_view text) {
  if (text == "core") return DecompositionKind::kCore;
  if (text == "truss") return DecompositionKind::kTruss;
  throw Error("unknown decomposition kind '" + std::string(text) + "'");
}

Weight DecompositionResult::max_value() const {
  Weight best = 0;
  for (Weight v : values) best = std::max(best, v);
  return best;
}

namespace {

void require_delta(Timestamp delta) {
  if (delta < 0) throw Error("delta must be non-negative");
}

void require_live(const EdgeSet& live, EdgeId e) {
  if (e >= live.capacity() || !live.contains(e))
    throw Error("edge " + std::to_string(e) + " is not in the live edge set");
}

}  // namespace

Weight delta_degree(const TemporalGraph& g, EdgeId e, const EdgeSet& live,
                    Timestamp delta) {
  require_delta(delta);
  require_live(live, e);
  const TemporalEdge& edge = g.edge(e);
  const Timestamp lo = window_low(edge.t, delta);
  const Timestamp hi = window_high(edge.t, delta);
  auto count_live = [&](NodeId x) {
    Weight n = 0;
    for (const Incidence& inc : g.window(x, lo, hi))
      if (live.contains(inc.edge)) ++n;
    return n;
  };
  return std::min(count_live(edge.u), count_live(edge.v));
}

Weight delta_support(const TemporalGraph& g, EdgeId e, const EdgeSet& live,
                     Timestamp delta) {
  require_delta(delta);
  require_live(live, e);
  Weight count = 0;
  detail::for_each_triangle_pair(
      g, e, delta, [&](EdgeId f) { return live.contains(f); },
      [&](EdgeId, EdgeId) { ++count; });
  return count;
}

EdgeWeightFunction delta_degree_weight(const TemporalGraph& g,
                                       Timestamp delta) {
  require_delta(delta);
  EdgeWeightFunction phi;
  phi.evaluate = [&g, delta](EdgeId e, const EdgeSet& live) {
    return delta_degree(g, e, live, delta);
  };
  phi.affected = [&g, delta](EdgeId removed, const EdgeSet& live) {
    const TemporalEdge& edge = g.edge(removed);
    std::vector<EdgeId> out;
    for (NodeId x : {edge.u, edge.v})
      for (EdgeId f : delta_incident_edges(g, x, edge.t, delta))
        if (live.contains(f)) out.push_back(f);
    return out;
  };
  return phi;
}

EdgeWeightFunction delta_support_weight(const TemporalGraph& g,
                                        Timestamp delta) {
  require_delta(delta);
  EdgeWeightFunction phi;
  phi.evaluate = [&g, delta](EdgeId e, const EdgeSet& live) {
    return delta_support(g, e, live, delta);
  };
  phi.affected = [&g, delta](EdgeId removed, const EdgeSet& live) {
    std::vector<EdgeId> out;
    detail::for_each_triangle_pair(
        g, removed, delta, [&](EdgeId f) { return live.contains(f); },
        [&](EdgeId a, EdgeId b) {
          out.push_back(a);
          out.push_back(b);
        });
    return out;
  };
  return phi;
}

DecompositionResult generic_decompose(const TemporalGraph& g,
                                      const EdgeWeightFunction& phi,
                                      DecompositionKind kind,
                                      Timestamp delta) {
  const std::size_t m = g.edge_count();
  EdgeSet live = EdgeSet::all(m);
  std::vector<Weight> c(m);
  std::set<std::pair<Weight, EdgeId>> queue;
  for (EdgeId e = 0; e < m; ++e) {
    c[e] = phi.evaluate(e, live);
    queue.emplace(c[e], e);
  }
  while (!queue.empty()) {
    const auto [ce, e] = *queue.begin();
    queue.erase(queue.begin());
    live.erase(e);
    for (EdgeId f : phi.affected(e, live)) {
      if (!live.contains(f) || c[f] <= ce) continue;
      const Weight updated = std::max(ce, phi.evaluate(f, live));
      if (updated == c[f]) continue;
      queue.erase({c[f], f});
      c[f] = updated;
      queue.emplace(c[f], f);
    }
  }
  return {kind, delta, std::move(c)};
}

DecompositionResult kd_core_decompose(const TemporalGraph& g,
                                      Timestamp delta) {
  require_delta(delta);
  const std::size_t m = g.edge_count();
  std::vector<Weight> a_u(m), a_v(m), d(m);
  for (const TemporalEdge& e : g.edges()) {
    const Timestamp lo = window_low(e.t, delta);
    const Timestamp hi = window_high(e.t, delta);
    a_u[e.id] = static_cast<Weight>(g.window(e.u, lo, hi).size());
    a_v[e.id] = static_cast<Weight>(g.window(e.v, lo, hi).size());
    d[e.id] = std::min(a_u[e.id], a_v[e.id]);
  }

  detail::BucketQueue queue(std::move(d));
  std::vector<std::uint8_t> removed(m, 0);
  for (std::size_t slot = 0; slot < queue.size(); ++slot) {
    const EdgeId e = queue.at(slot);
    const TemporalEdge& edge = g.edge(e);
    const Weight level = queue.value(e);
    const Timestamp lo = window_low(edge.t, delta);
    const Timestamp hi = window_high(edge.t, delta);
    for (NodeId x : {edge.u, edge.v}) {
      for (const Incidence& inc : g.window(x, lo, hi)) {
        const EdgeId f = inc.edge;
        if (removed[f] || queue.value(f) <= level) continue;
        if (g.edge(f).u == x)
          --a_u[f];
        else
          --a_v[f];
        if (std::min(a_u[f], a_v[f]) < queue.value(f)) queue.decrement(f);
      }
    }
    removed[e] = 1;
  }
  return {DecompositionKind::kCore, delta, std::move(queue).take_values()};
}

DecompositionResult kd_truss_decompose(const TemporalGraph& g,
                                       Timestamp delta) {
  require_delta(delta);
  const std::size_t m = g.edge_count();
  std::vector<Weight> tau(m);
  for (EdgeId e = 0; e < m; ++e) tau[e] = detail::full_support(g, e, delta);

  detail::BucketQueue queue(std::move(tau));
  std::vector<std::uint8_t> removed(m, 0);
  auto alive = [&removed](EdgeId f) { return removed[f] == 0; };
  for (std::size_t slot = 0; slot < queue.size(); ++slot) {
    const EdgeId e = queue.at(slot);
    const Weight level = queue.value(e);
    detail::for_each_triangle_pair(g, e, delta, alive,
                                   [&](EdgeId ei, EdgeId ej) {
                                     if (queue.value(ei) > level)
                                       queue.decrement(ei);
                                     if (queue.value(ej) > level)
                                       queue.decrement(ej);
                                   });
    removed[e] = 1;
  }
  return {DecompositionKind::kTruss, delta, std::move(queue).take_values()};
}

DecompositionResult decompose(const TemporalGraph& g, DecompositionKind kind,
                              Timestamp delta) {
  return kind == DecompositionKind::kCore ? kd_core_decompose(g, delta)
                                          : kd_truss_decompose(g, delta);
}

TemporalGraph extract_subgraph(const TemporalGraph& g,
                               const DecompositionResult& result, Weight k,
                               ExtractMode mode) {
  if (result.values.size() != g.edge_count())
    throw Error("decomposition result does not belong to this graph");
  GraphBuilder builder;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Weight v = result.values[e];
    if (mode == ExtractMode::kAtLeast ? v >= k : v == k)
      builder.add_edge_from(g, e);
  }
  return std::move(builder).build();
}

}  // namespace kdelta
