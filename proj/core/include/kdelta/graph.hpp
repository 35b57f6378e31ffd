#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "kdelta/error.hpp"

namespace kdelta {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;
using Timestamp = std::int64_t;
using Label = std::int32_t;

// Closed interval [alpha, beta] of timestamps.
struct TimeInterval {
  Timestamp alpha;
  Timestamp beta;

  TimeInterval(Timestamp a, Timestamp b) : alpha(a), beta(b) {
    if (a > b) throw Error("time interval must satisfy alpha <= beta");
  }
  bool contains(Timestamp t) const { return alpha <= t && t <= beta; }
};

struct TemporalEdge {
  EdgeId id;
  NodeId u;
  NodeId v;
  Timestamp t;
  std::optional<Label> label;

  NodeId other(NodeId x) const { return x == u ? v : u; }
};

// One entry of a node's incidence list.
struct Incidence {
  EdgeId edge;
  Timestamp t;
  NodeId other;
};

// Immutable temporal multigraph. Every node owns two views of its incident
// edges: one chronological (t, edge id) and one grouped by neighbor
// (other, t, edge id). The second allows binary-search lookups of all edges
// between a fixed pair of nodes inside a time window.
class TemporalGraph {
 public:
  TemporalGraph() = default;

  std::size_t node_count() const { return node_tokens_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  bool labeled() const { return labeled_; }

  const TemporalEdge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const TemporalEdge> edges() const { return edges_; }

  // Chronologically sorted incident edges of `u` (ties by edge id).
  std::span<const Incidence> incidence(NodeId u) const {
    return {chrono_.data() + offsets_[u], chrono_.data() + offsets_[u + 1]};
  }
  // Incident edges of `u` sorted by (other endpoint, t, edge id).
  std::span<const Incidence> by_neighbor(NodeId u) const {
    return {by_neighbor_.data() + offsets_[u],
            by_neighbor_.data() + offsets_[u + 1]};
  }

  // Incident edges of `u` with timestamp in [lo, hi].
  std::span<const Incidence> window(NodeId u, Timestamp lo, Timestamp hi) const;
  // Edges between `u` and `w` with timestamp in [lo, hi].
  std::span<const Incidence> pair_window(NodeId u, NodeId w, Timestamp lo,
                                         Timestamp hi) const;

  const std::string& node_token(NodeId u) const { return node_tokens_[u]; }
  std::optional<NodeId> find_node(std::string_view token) const;

  // Identity of nodes/edges in the graph this one was extracted from (the
  // identity mapping for loaded graphs).
  NodeId original_node(NodeId u) const { return original_nodes_[u]; }
  EdgeId original_edge(EdgeId e) const { return original_edges_[e]; }

  // [min t, max t]; undefined for an empty graph.
  Timestamp min_time() const { return min_time_; }
  Timestamp max_time() const { return max_time_; }

 private:
  friend class GraphBuilder;

  std::vector<TemporalEdge> edges_;
  std::vector<std::string> node_tokens_;
  std::unordered_map<std::string, NodeId> token_index_;
  std::vector<NodeId> original_nodes_;
  std::vector<EdgeId> original_edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Incidence> chrono_;
  std::vector<Incidence> by_neighbor_;
  Timestamp min_time_ = 0;
  Timestamp max_time_ = 0;
  bool labeled_ = false;
};

// Accumulates edges and produces an indexed TemporalGraph. Node tokens get
// dense ids in first-appearance order.
class GraphBuilder {
 public:
  // Returns false (and records nothing) for a self-loop.
  bool add_edge(std::string_view u, std::string_view v, Timestamp t,
                std::optional<Label> label = std::nullopt);
  // Keeps the node and edge provenance of an edge copied from another graph.
  void add_edge_from(const TemporalGraph& source, EdgeId e);

  std::size_t edge_count() const { return edges_.size(); }
  TemporalGraph build() &&;

 private:
  NodeId intern(std::string_view token, NodeId original);

  std::vector<TemporalEdge> edges_;
  std::vector<EdgeId> original_edges_;
  std::vector<std::string> node_tokens_;
  std::vector<NodeId> original_nodes_;
  std::unordered_map<std::string, NodeId> token_index_;
  std::optional<bool> labeled_;
};

struct LoadOptions {
  std::optional<TimeInterval> interval;
  bool labeled = false;
};

struct LoadReport {
  std::size_t lines = 0;
  std::size_t comments = 0;
  std::size_t kept = 0;
  std::size_t outside_interval = 0;
  std::size_t self_loops = 0;
  bool gzip = false;
};

// Parses a whitespace-separated "u v t [label]" edge list, optionally gzip
// compressed. Lines starting with '#' or '%' are comments.
TemporalGraph load_graph(std::istream& in, const LoadOptions& options = {},
                         LoadReport* report = nullptr);
TemporalGraph load_graph_file(const std::string& path,
                              const LoadOptions& options = {},
                              LoadReport* report = nullptr);
TemporalGraph parse_graph(std::string_view text,
                          const LoadOptions& options = {},
                          LoadReport* report = nullptr);

// Writes the graph in the input format, edges in id order.
void write_graph(std::ostream& out, const TemporalGraph& g);

std::string format_load_report(const LoadReport& report);

// Edges ({endpoint, w}, t') with |t - t'| <= delta, in chronological order.
std::vector<EdgeId> delta_incident_edges(const TemporalGraph& g,
                                         NodeId endpoint, Timestamp t,
                                         Timestamp delta);

// Maximum over nodes of the spread of incident timestamps.
Timestamp max_delta(const TemporalGraph& g);

// t - delta and t + delta clamped to the Timestamp range.
Timestamp window_low(Timestamp t, Timestamp delta);
Timestamp window_high(Timestamp t, Timestamp delta);

}  // namespace kdelta
