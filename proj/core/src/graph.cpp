#include "kdelta/graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <tuple>

namespace kdelta {

Timestamp window_low(Timestamp t, Timestamp delta) {
  if (delta >= 0 && t < std::numeric_limits<Timestamp>::min() + delta)
    return std::numeric_limits<Timestamp>::min();
  return t - delta;
}

Timestamp window_high(Timestamp t, Timestamp delta) {
  if (delta >= 0 && t > std::numeric_limits<Timestamp>::max() - delta)
    return std::numeric_limits<Timestamp>::max();
  return t + delta;
}

std::span<const Incidence> TemporalGraph::window(NodeId u, Timestamp lo,
                                                 Timestamp hi) const {
  auto list = incidence(u);
  auto first = std::partition_point(
      list.begin(), list.end(), [lo](const Incidence& i) { return i.t < lo; });
  auto last = std::partition_point(
      first, list.end(), [hi](const Incidence& i) { return i.t <= hi; });
  return {first, last};
}

std::span<const Incidence> TemporalGraph::pair_window(NodeId u, NodeId w,
                                                      Timestamp lo,
                                                      Timestamp hi) const {
  auto list = by_neighbor(u);
  auto first = std::partition_point(
      list.begin(), list.end(), [w, lo](const Incidence& i) {
        return i.other < w || (i.other == w && i.t < lo);
      });
  auto last = std::partition_point(
      first, list.end(),
      [w, hi](const Incidence& i) { return i.other == w && i.t <= hi; });
  return {first, last};
}

std::optional<NodeId> TemporalGraph::find_node(std::string_view token) const {
  auto it = token_index_.find(std::string(token));
  if (it == token_index_.end()) return std::nullopt;
  return it->second;
}

NodeId GraphBuilder::intern(std::string_view token, NodeId original) {
  auto [it, inserted] = token_index_.try_emplace(
      std::string(token), static_cast<NodeId>(node_tokens_.size()));
  if (inserted) {
    node_tokens_.emplace_back(token);
    original_nodes_.push_back(original == std::numeric_limits<NodeId>::max()
                                  ? it->second
                                  : original);
  }
  return it->second;
}

bool GraphBuilder::add_edge(std::string_view u, std::string_view v,
                            Timestamp t, std::optional<Label> label) {
  if (u == v) return false;
  if (labeled_ && *labeled_ != label.has_value())
    throw Error("labels must be present on all edges or on none");
  labeled_ = label.has_value();
  if (edges_.size() >= std::numeric_limits<EdgeId>::max())
    throw Error("edge count exceeds the 32-bit edge id range");
  constexpr NodeId kFresh = std::numeric_limits<NodeId>::max();
  const NodeId a = intern(u, kFresh);
  const NodeId b = intern(v, kFresh);
  const auto id = static_cast<EdgeId>(edges_.size());
  edges_.push_back({id, a, b, t, label});
  original_edges_.push_back(id);
  return true;
}

void GraphBuilder::add_edge_from(const TemporalGraph& source, EdgeId e) {
  const TemporalEdge& src = source.edge(e);
  if (labeled_ && *labeled_ != src.label.has_value())
    throw Error("labels must be present on all edges or on none");
  labeled_ = src.label.has_value();
  const NodeId a = intern(source.node_token(src.u), source.original_node(src.u));
  const NodeId b = intern(source.node_token(src.v), source.original_node(src.v));
  const auto id = static_cast<EdgeId>(edges_.size());
  edges_.push_back({id, a, b, src.t, src.label});
  original_edges_.push_back(source.original_edge(e));
}

TemporalGraph GraphBuilder::build() && {
  TemporalGraph g;
  g.labeled_ = labeled_.value_or(false);
  const std::size_t n = node_tokens_.size();

  std::vector<std::size_t> degree(n + 1, 0);
  for (const auto& e : edges_) {
    ++degree[e.u + 1];
    ++degree[e.v + 1];
  }
  std::partial_sum(degree.begin(), degree.end(), degree.begin());
  g.offsets_ = degree;

  g.chrono_.resize(2 * edges_.size());
  std::vector<std::size_t> cursor(degree.begin(), degree.end() - 1);
  for (const auto& e : edges_) {
    g.chrono_[cursor[e.u]++] = {e.id, e.t, e.v};
    g.chrono_[cursor[e.v]++] = {e.id, e.t, e.u};
  }
  g.by_neighbor_ = g.chrono_;
  for (std::size_t u = 0; u < n; ++u) {
    auto first = g.offsets_[u];
    auto last = g.offsets_[u + 1];
    std::sort(g.chrono_.begin() + first, g.chrono_.begin() + last,
              [](const Incidence& a, const Incidence& b) {
                return std::tie(a.t, a.edge) < std::tie(b.t, b.edge);
              });
    std::sort(g.by_neighbor_.begin() + first, g.by_neighbor_.begin() + last,
              [](const Incidence& a, const Incidence& b) {
                return std::tie(a.other, a.t, a.edge) <
                       std::tie(b.other, b.t, b.edge);
              });
  }

  if (!edges_.empty()) {
    auto [lo, hi] = std::minmax_element(
        edges_.begin(), edges_.end(),
        [](const TemporalEdge& a, const TemporalEdge& b) { return a.t < b.t; });
    g.min_time_ = lo->t;
    g.max_time_ = hi->t;
  }

  g.edges_ = std::move(edges_);
  g.original_edges_ = std::move(original_edges_);
  g.node_tokens_ = std::move(node_tokens_);
  g.original_nodes_ = std::move(original_nodes_);
  g.token_index_ = std::move(token_index_);
  return g;
}

std::vector<EdgeId> delta_incident_edges(const TemporalGraph& g,
                                         NodeId endpoint, Timestamp t,
                                         Timestamp delta) {
  if (delta < 0) throw Error("delta must be non-negative");
  if (endpoint >= g.node_count()) throw Error("node id out of range");
  std::vector<EdgeId> out;
  for (const auto& inc :
       g.window(endpoint, window_low(t, delta), window_high(t, delta)))
    out.push_back(inc.edge);
  return out;
}

Timestamp max_delta(const TemporalGraph& g) {
  if (g.empty()) throw Error("max_delta of an empty graph is undefined");
  Timestamp best = 0;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    auto list = g.incidence(u);
    if (list.empty()) continue;
    best = std::max(best, list.back().t - list.front().t);
  }
  return best;
}

}  // namespace kdelta
