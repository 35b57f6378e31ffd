#include "kdelta/oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <random>

namespace kdelta::oracle {
namespace {

using Live = std::vector<std::uint8_t>;
using WeightFn =
    std::function<Weight(const TemporalGraph&, EdgeId, const Live&, Timestamp)>;

Timestamp gap(Timestamp a, Timestamp b) { return a > b ? a - b : b - a; }

bool touches(const TemporalEdge& e, NodeId x) { return e.u == x || e.v == x; }

void check_arguments(Timestamp delta, Weight k) {
  if (delta < 0) throw Error("delta must be non-negative");
  if (k < 0) throw Error("k must be non-negative");
}

// Deletes violators from `live` until every live edge has weight >= k.
// Returns the ids deleted, in deletion order.
std::vector<EdgeId> peel_to_fixpoint(const TemporalGraph& g, Timestamp delta,
                                     Weight k, Live& live, const WeightFn& phi,
                                     std::optional<std::uint64_t> seed) {
  std::vector<EdgeId> deleted;
  std::optional<std::mt19937_64> rng;
  if (seed) rng.emplace(*seed);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<EdgeId> alive;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (live[e]) alive.push_back(e);
    if (rng) {
      std::shuffle(alive.begin(), alive.end(), *rng);
      for (EdgeId e : alive) {
        if (phi(g, e, live, delta) < k) {
          live[e] = 0;
          deleted.push_back(e);
          changed = true;
        }
      }
    } else {
      std::vector<EdgeId> violators;
      for (EdgeId e : alive)
        if (phi(g, e, live, delta) < k) violators.push_back(e);
      for (EdgeId e : violators) {
        live[e] = 0;
        deleted.push_back(e);
      }
      changed = !violators.empty();
    }
  }
  return deleted;
}

std::vector<EdgeId> survivors(const Live& live) {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < live.size(); ++e)
    if (live[e]) out.push_back(e);
  return out;
}

}  // namespace

Weight brute_degree(const TemporalGraph& g, EdgeId e, const Live& live,
                    Timestamp delta) {
  const TemporalEdge& edge = g.edge(e);
  Weight at_u = 0;
  Weight at_v = 0;
  for (const TemporalEdge& f : g.edges()) {
    if (!live[f.id] || gap(edge.t, f.t) > delta) continue;
    if (touches(f, edge.u)) ++at_u;
    if (touches(f, edge.v)) ++at_v;
  }
  return std::min(at_u, at_v);
}

Weight brute_support(const TemporalGraph& g, EdgeId e, const Live& live,
                     Timestamp delta) {
  const TemporalEdge& edge = g.edge(e);
  // (third node, timestamp) of live edges at u and at v that avoid {u, v}.
  std::vector<std::pair<NodeId, Timestamp>> at_u;
  std::vector<std::pair<NodeId, Timestamp>> at_v;
  for (const TemporalEdge& f : g.edges()) {
    if (!live[f.id] || gap(edge.t, f.t) > delta) continue;
    const bool fu = touches(f, edge.u);
    const bool fv = touches(f, edge.v);
    if (fu && fv) continue;  // parallel to e
    if (fu) at_u.emplace_back(f.other(edge.u), f.t);
    if (fv) at_v.emplace_back(f.other(edge.v), f.t);
  }
  Weight count = 0;
  for (const auto& [w1, t1] : at_u)
    for (const auto& [w2, t2] : at_v)
      if (w1 == w2 && gap(t1, t2) <= delta) ++count;
  return count;
}

std::vector<EdgeId> fixpoint_core(const TemporalGraph& g, Timestamp delta,
                                  Weight k, std::optional<std::uint64_t> seed) {
  check_arguments(delta, k);
  Live live(g.edge_count(), 1);
  peel_to_fixpoint(g, delta, k, live, brute_degree, seed);
  return survivors(live);
}

std::vector<EdgeId> fixpoint_truss(const TemporalGraph& g, Timestamp delta,
                                   Weight k,
                                   std::optional<std::uint64_t> seed) {
  check_arguments(delta, k);
  Live live(g.edge_count(), 1);
  peel_to_fixpoint(g, delta, k, live, brute_support, seed);
  return survivors(live);
}

OracleResult oracle_decompose(const TemporalGraph& g, Timestamp delta,
                              DecompositionKind kind) {
  if (g.edge_count() > kDecomposeEdgeLimit)
    throw GuardExceeded("oracle_decompose is limited to " +
                        std::to_string(kDecomposeEdgeLimit) + " edges, got " +
                        std::to_string(g.edge_count()));
  check_arguments(delta, 0);
  const WeightFn phi =
      kind == DecompositionKind::kCore ? WeightFn(brute_degree) : WeightFn(brute_support);

  OracleResult result;
  result.values.assign(g.edge_count(), 0);
  Live live(g.edge_count(), 1);
  std::size_t remaining = g.edge_count();
  // Each k-fixpoint lies inside the (k-1)-fixpoint, so peeling continues
  // from the previous survivors.
  for (Weight k = 0; remaining > 0; ++k) {
    for (EdgeId e : peel_to_fixpoint(g, delta, k, live, phi, std::nullopt)) {
      result.values[e] = k - 1;
      result.trace.emplace_back(e, k - 1);
      --remaining;
    }
  }
  return result;
}

EdgePartition oracle_components(const TemporalGraph& g, Timestamp delta) {
  const std::size_t m = g.edge_count();
  if (m > kComponentsEdgeLimit)
    throw GuardExceeded("oracle_components is limited to " +
                        std::to_string(kComponentsEdgeLimit) + " edges, got " +
                        std::to_string(m));
  if (delta < 0) throw Error("delta must be non-negative");

  std::vector<std::vector<EdgeId>> adjacent(m);
  for (EdgeId i = 0; i < m; ++i) {
    const TemporalEdge& a = g.edge(i);
    for (EdgeId j = i + 1; j < m; ++j) {
      const TemporalEdge& b = g.edge(j);
      const bool share = touches(b, a.u) || touches(b, a.v);
      if (share && gap(a.t, b.t) <= delta) {
        adjacent[i].push_back(j);
        adjacent[j].push_back(i);
      }
    }
  }

  std::vector<std::vector<EdgeId>> groups;
  std::vector<std::uint8_t> seen(m, 0);
  for (EdgeId start = 0; start < m; ++start) {
    if (seen[start]) continue;
    std::vector<EdgeId> group;
    std::deque<EdgeId> frontier{start};
    seen[start] = 1;
    while (!frontier.empty()) {
      const EdgeId e = frontier.front();
      frontier.pop_front();
      group.push_back(e);
      for (EdgeId f : adjacent[e]) {
        if (!seen[f]) {
          seen[f] = 1;
          frontier.push_back(f);
        }
      }
    }
    groups.push_back(std::move(group));
  }
  return make_partition(std::move(groups), m, delta);
}

namespace {

// Peels with a lazy min-heap: the popped edge gets the running maximum of
// popped weights, then `on_remove` lowers the weights of its neighbors.
std::vector<Weight> heap_peel(
    std::vector<Weight> weight,
    const std::function<void(EdgeId, std::vector<Weight>&,
                             const std::vector<std::uint8_t>&,
                             std::vector<EdgeId>&)>& on_remove) {
  const std::size_t m = weight.size();
  using Entry = std::pair<Weight, EdgeId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  for (EdgeId e = 0; e < m; ++e) heap.emplace(weight[e], e);
  std::vector<std::uint8_t> gone(m, 0);
  std::vector<Weight> value(m, 0);
  Weight level = 0;
  std::vector<EdgeId> touched;
  while (!heap.empty()) {
    const auto [w, e] = heap.top();
    heap.pop();
    if (gone[e] || w != weight[e]) continue;
    level = std::max(level, w);
    value[e] = level;
    gone[e] = 1;
    touched.clear();
    on_remove(e, weight, gone, touched);
    for (EdgeId f : touched) heap.emplace(weight[f], f);
  }
  return value;
}

std::pair<NodeId, NodeId> key_of(const TemporalEdge& e) {
  return {std::min(e.u, e.v), std::max(e.u, e.v)};
}

}  // namespace

std::vector<Weight> static_edge_core_numbers(const TemporalGraph& g) {
  const std::size_t m = g.edge_count();
  std::map<NodeId, std::vector<EdgeId>> at;
  for (const TemporalEdge& e : g.edges()) {
    at[e.u].push_back(e.id);
    at[e.v].push_back(e.id);
  }
  std::map<NodeId, Weight> degree;
  for (const auto& [x, list] : at) degree[x] = static_cast<Weight>(list.size());
  std::vector<Weight> weight(m);
  for (const TemporalEdge& e : g.edges())
    weight[e.id] = std::min(degree[e.u], degree[e.v]);

  return heap_peel(std::move(weight), [&](EdgeId e, std::vector<Weight>& w,
                                          const std::vector<std::uint8_t>& gone,
                                          std::vector<EdgeId>& touched) {
    const TemporalEdge& edge = g.edge(e);
    --degree[edge.u];
    --degree[edge.v];
    for (NodeId x : {edge.u, edge.v}) {
      for (EdgeId f : at[x]) {
        if (gone[f]) continue;
        const TemporalEdge& other = g.edge(f);
        const Weight updated = std::min(degree[other.u], degree[other.v]);
        if (updated != w[f]) {
          w[f] = updated;
          touched.push_back(f);
        }
      }
    }
  });
}

std::vector<Weight> static_truss_numbers(const TemporalGraph& g) {
  const std::size_t m = g.edge_count();
  std::map<std::pair<NodeId, NodeId>, std::vector<EdgeId>> between;
  std::map<NodeId, std::vector<NodeId>> neighbors;
  for (const TemporalEdge& e : g.edges()) {
    auto& list = between[key_of(e)];
    if (list.empty()) {
      neighbors[e.u].push_back(e.v);
      neighbors[e.v].push_back(e.u);
    }
    list.push_back(e.id);
  }
  auto edges_between = [&](NodeId a, NodeId b) -> const std::vector<EdgeId>& {
    static const std::vector<EdgeId> kNone;
    auto it = between.find({std::min(a, b), std::max(a, b)});
    return it == between.end() ? kNone : it->second;
  };

  std::vector<Weight> weight(m, 0);
  for (const TemporalEdge& e : g.edges())
    for (NodeId w : neighbors[e.u])
      if (w != e.v)
        weight[e.id] += static_cast<Weight>(edges_between(e.u, w).size() *
                                            edges_between(e.v, w).size());

  return heap_peel(std::move(weight), [&](EdgeId e, std::vector<Weight>& w,
                                          const std::vector<std::uint8_t>& gone,
                                          std::vector<EdgeId>& touched) {
    const TemporalEdge& edge = g.edge(e);
    // The popped edge is already marked gone; the floor keeps partners from
    // dropping below the value it received.
    Weight floor = w[e];
    for (NodeId x : neighbors[edge.u]) {
      if (x == edge.v) continue;
      for (EdgeId a : edges_between(edge.u, x)) {
        if (gone[a]) continue;
        for (EdgeId b : edges_between(edge.v, x)) {
          if (gone[b]) continue;
          for (EdgeId f : {a, b}) {
            if (w[f] > floor) {
              --w[f];
              touched.push_back(f);
            }
          }
        }
      }
    }
  });
}

}  // namespace kdelta::oracle
