#pragma once

#include <algorithm>
#include <cassert>
#include <vector>

#include "kdelta/decomposition.hpp"

namespace kdelta::detail {

// Bin-sorted peeling order with O(1) decrements (Batagelj-Zaversnik layout):
// `order_` holds edges sorted by value, `bin_start_[w]` is the first slot of
// value w, and `pos_[e]` is the slot of e.
class BucketQueue {
 public:
  explicit BucketQueue(std::vector<Weight> values) : values_(std::move(values)) {
    const std::size_t m = values_.size();
    Weight top = 0;
    for (Weight w : values_) top = std::max(top, w);
    bin_start_.assign(static_cast<std::size_t>(top) + 2, 0);
    for (Weight w : values_) ++bin_start_[static_cast<std::size_t>(w) + 1];
    for (std::size_t w = 1; w < bin_start_.size(); ++w)
      bin_start_[w] += bin_start_[w - 1];
    order_.resize(m);
    pos_.resize(m);
    std::vector<std::size_t> next(bin_start_.begin(), bin_start_.end() - 1);
    for (std::size_t e = 0; e < m; ++e) {
      const auto slot = next[static_cast<std::size_t>(values_[e])]++;
      order_[slot] = static_cast<EdgeId>(e);
      pos_[e] = slot;
    }
  }

  std::size_t size() const { return order_.size(); }
  EdgeId at(std::size_t slot) const { return order_[slot]; }
  Weight value(EdgeId e) const { return values_[e]; }

  // Lowers the value of e by one. Only valid for edges that are not yet
  // processed, i.e. whose value exceeds the value currently being peeled.
  void decrement(EdgeId e) {
    const auto w = static_cast<std::size_t>(values_[e]);
    assert(w > 0);
    const std::size_t first = bin_start_[w];
    const EdgeId head = order_[first];
    if (head != e) {
      std::swap(order_[first], order_[pos_[e]]);
      pos_[head] = pos_[e];
      pos_[e] = first;
    }
    ++bin_start_[w];
    --values_[e];
  }

  std::vector<Weight> take_values() && { return std::move(values_); }

 private:
  std::vector<Weight> values_;
  std::vector<std::size_t> bin_start_;
  std::vector<EdgeId> order_;
  std::vector<std::size_t> pos_;
};

// Calls fn(ei, ej) for every pair of edges ei = ({x, w}, t1) and
// ej = ({y, w}, t2) closing a delta-local triangle with e = ({x, y}, t).
// Scans the smaller delta-window of e's endpoints and probes the other
// endpoint's neighbor-sorted list by binary search. Edges for which
// `alive` returns false are skipped.
template <typename Alive, typename Fn>
void for_each_triangle_pair(const TemporalGraph& g, EdgeId e, Timestamp delta,
                            Alive&& alive, Fn&& fn) {
  const TemporalEdge& edge = g.edge(e);
  const Timestamp lo = window_low(edge.t, delta);
  const Timestamp hi = window_high(edge.t, delta);
  auto wu = g.window(edge.u, lo, hi);
  auto wv = g.window(edge.v, lo, hi);
  NodeId x = edge.u;
  NodeId y = edge.v;
  auto scan = wu;
  if (wv.size() < wu.size()) {
    std::swap(x, y);
    scan = wv;
  }
  for (const Incidence& inc : scan) {
    if (inc.other == y || !alive(inc.edge)) continue;
    const Timestamp plo = std::max(lo, window_low(inc.t, delta));
    const Timestamp phi = std::min(hi, window_high(inc.t, delta));
    for (const Incidence& partner : g.pair_window(y, inc.other, plo, phi)) {
      if (!alive(partner.edge)) continue;
      fn(inc.edge, partner.edge);
    }
  }
}

// s_delta(e, E) against the full edge set.
inline Weight full_support(const TemporalGraph& g, EdgeId e, Timestamp delta) {
  const TemporalEdge& edge = g.edge(e);
  const Timestamp lo = window_low(edge.t, delta);
  const Timestamp hi = window_high(edge.t, delta);
  auto wu = g.window(edge.u, lo, hi);
  auto wv = g.window(edge.v, lo, hi);
  NodeId y = edge.v;
  auto scan = wu;
  if (wv.size() < wu.size()) {
    y = edge.u;
    scan = wv;
  }
  Weight count = 0;
  for (const Incidence& inc : scan) {
    if (inc.other == y) continue;
    count += static_cast<Weight>(
        g.pair_window(y, inc.other, std::max(lo, window_low(inc.t, delta)),
                      std::min(hi, window_high(inc.t, delta)))
            .size());
  }
  return count;
}

}  // namespace kdelta::detail
