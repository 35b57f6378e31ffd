#pragma once

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "kdelta/graph.hpp"

namespace kdelta {

using Weight = std::int64_t;

// Membership mask over the edge ids of one graph.
class EdgeSet {
 public:
  static EdgeSet all(std::size_t edge_count) {
    EdgeSet s;
    s.member_.assign(edge_count, 1);
    s.size_ = edge_count;
    return s;
  }
  static EdgeSet none(std::size_t edge_count) {
    EdgeSet s;
    s.member_.assign(edge_count, 0);
    return s;
  }

  bool contains(EdgeId e) const { return member_[e] != 0; }
  void insert(EdgeId e) {
    if (!member_[e]) ++size_;
    member_[e] = 1;
  }
  void erase(EdgeId e) {
    if (member_[e]) --size_;
    member_[e] = 0;
  }
  std::size_t size() const { return size_; }
  std::size_t capacity() const { return member_.size(); }
  bool empty() const { return size_ == 0; }

 private:
  std::vector<std::uint8_t> member_;
  std::size_t size_ = 0;
};

// A monotone temporal edge weight: for E1 subset of E2,
// evaluate(e, E1) <= evaluate(e, E2).
struct EdgeWeightFunction {
  std::function<Weight(EdgeId, const EdgeSet&)> evaluate;
  // Live edges whose weight may drop when `removed` leaves the live set.
  std::function<std::vector<EdgeId>(EdgeId removed, const EdgeSet&)> affected;
};

enum class DecompositionKind { kCore, kTruss };

std::string_view to_string(DecompositionKind kind);
DecompositionKind parse_kind(std::string_view text);

struct DecompositionResult {
  DecompositionKind kind = DecompositionKind::kCore;
  Timestamp delta = 0;
  std::vector<Weight> values;

  Weight max_value() const;
};

// Minimum over both endpoints of the number of live edges within delta of e
// (e counts itself at both endpoints).
Weight delta_degree(const TemporalGraph& g, EdgeId e, const EdgeSet& live,
                    Timestamp delta);

// Number of pairs of live edges closing a triangle with e on a third node,
// with all three pairwise timestamp gaps at most delta.
Weight delta_support(const TemporalGraph& g, EdgeId e, const EdgeSet& live,
                     Timestamp delta);

EdgeWeightFunction delta_degree_weight(const TemporalGraph& g, Timestamp delta);
EdgeWeightFunction delta_support_weight(const TemporalGraph& g,
                                        Timestamp delta);

// Reference peeling for any monotone weight. Repeatedly removes a live edge
// of minimum current value (lowest id on ties) and lowers the affected edges
// to max(current minimum, recomputed weight). The result carries `kind` and
// `delta` only as labels.
DecompositionResult generic_decompose(const TemporalGraph& g,
                                      const EdgeWeightFunction& phi,
                                      DecompositionKind kind,
                                      Timestamp delta = 0);

// (k, delta)-core numbers of all edges.
DecompositionResult kd_core_decompose(const TemporalGraph& g, Timestamp delta);

// (k, delta)-truss numbers of all edges.
DecompositionResult kd_truss_decompose(const TemporalGraph& g, Timestamp delta);

DecompositionResult decompose(const TemporalGraph& g, DecompositionKind kind,
                              Timestamp delta);

enum class ExtractMode { kAtLeast, kExactly };

// Edge-induced subgraph of the edges whose value is >= k (core/truss) or
// == k (shell). Node tokens and original ids are preserved.
TemporalGraph extract_subgraph(const TemporalGraph& g,
                               const DecompositionResult& result, Weight k,
                               ExtractMode mode = ExtractMode::kAtLeast);

}  // namespace kdelta
