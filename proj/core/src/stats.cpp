#include "kdelta/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "peel_internal.hpp"

namespace kdelta {

Timestamp nearest_rank(const std::vector<Timestamp>& sorted, double fraction) {
  if (sorted.empty()) throw Error("percentile of an empty sample");
  if (!(fraction > 0.0 && fraction <= 1.0))
    throw Error("percentile fraction must lie in (0, 1]");
  // The epsilon absorbs binary rounding such as 0.1 * 20 = 2.0000000000000004.
  const double exact = fraction * static_cast<double>(sorted.size());
  auto rank = static_cast<std::size_t>(std::ceil(exact - 1e-9));
  rank = std::clamp<std::size_t>(rank, 1, sorted.size());
  return sorted[rank - 1];
}

IetSummary iet_percentiles(const TemporalGraph& g,
                           const std::vector<double>& fractions) {
  IetSummary summary;
  summary.iets.reserve(2 * g.edge_count());
  for (NodeId u = 0; u < g.node_count(); ++u) {
    auto list = g.incidence(u);
    for (std::size_t i = 1; i < list.size(); ++i)
      summary.iets.push_back(list[i].t - list[i - 1].t);
  }
  if (summary.iets.empty())
    throw Error("graph has no pair of consecutive incident edges");
  std::sort(summary.iets.begin(), summary.iets.end());
  for (double p : fractions) summary.percentiles[p] = nearest_rank(summary.iets, p);
  return summary;
}

DeltaStats delta_stats(const TemporalGraph& g, Timestamp delta) {
  if (delta < 0) throw Error("delta must be non-negative");
  DeltaStats stats;
  stats.delta = delta;
  const auto m = static_cast<std::int64_t>(g.edge_count());
  if (m == 0) return stats;

  Weight degree_sum = 0, degree_max = 0;
  Weight support_sum = 0, support_max = 0;
  Weight xi = 0;
#pragma omp parallel for schedule(dynamic, 1024) \
    reduction(+ : degree_sum, support_sum) \
    reduction(max : degree_max, support_max, xi)
  for (std::int64_t i = 0; i < m; ++i) {
    const auto e = static_cast<EdgeId>(i);
    const TemporalEdge& edge = g.edge(e);
    const Timestamp lo = window_low(edge.t, delta);
    const Timestamp hi = window_high(edge.t, delta);
    const auto at_u = static_cast<Weight>(g.window(edge.u, lo, hi).size());
    const auto at_v = static_cast<Weight>(g.window(edge.v, lo, hi).size());
    // Edges parallel to e (e included) sit in both windows.
    const auto shared =
        static_cast<Weight>(g.pair_window(edge.u, edge.v, lo, hi).size());
    const Weight degree = std::min(at_u, at_v);
    const Weight support = detail::full_support(g, e, delta);
    degree_sum += degree;
    degree_max = std::max(degree_max, degree);
    support_sum += support;
    support_max = std::max(support_max, support);
    xi = std::max(xi, at_u + at_v - shared);
  }
  stats.avg_degree = static_cast<double>(degree_sum) / static_cast<double>(m);
  stats.max_degree = degree_max;
  stats.avg_support = static_cast<double>(support_sum) / static_cast<double>(m);
  stats.max_support = support_max;
  stats.xi = xi;
  return stats;
}

std::string_view to_string(Homophily h) {
  switch (h) {
    case Homophily::kClaimsOnly:
      return "claims-only";
    case Homophily::kFactsOnly:
      return "facts-only";
    case Homophily::kMixed:
      return "mixed";
  }
  return "mixed";
}

ComponentLabelReport component_label_report(const TemporalGraph& g,
                                            const EdgePartition& partition,
                                            LabelClasses classes) {
  if (!g.labeled()) throw Error("label report requires a labeled graph");
  if (partition.component_of.size() != g.edge_count())
    throw Error("partition does not belong to this graph");

  ComponentLabelReport report;
  constexpr std::size_t kNever = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> seen_in(g.node_count(), kNever);
  double freq_sum[3] = {0, 0, 0};

  for (std::size_t c = 0; c < partition.components.size(); ++c) {
    const auto& edges = partition.components[c];
    ComponentLabelInfo info;
    info.edges = edges.size();
    info.first = std::numeric_limits<Timestamp>::max();
    info.last = std::numeric_limits<Timestamp>::min();
    for (EdgeId e : edges) {
      const TemporalEdge& edge = g.edge(e);
      const Label label = *edge.label;
      if (label != classes.claim && label != classes.fact)
        throw Error("label " + std::to_string(label) +
                    " is neither the claim nor the fact-checking label");
      ++info.census[label];
      info.first = std::min(info.first, edge.t);
      info.last = std::max(info.last, edge.t);
      for (NodeId x : {edge.u, edge.v}) {
        if (seen_in[x] != c) {
          seen_in[x] = c;
          ++info.nodes;
        }
      }
    }
    if (info.census.size() > 1)
      info.homophily = Homophily::kMixed;
    else if (info.census.begin()->first == classes.claim)
      info.homophily = Homophily::kClaimsOnly;
    else
      info.homophily = Homophily::kFactsOnly;

    const Timestamp duration = info.last - info.first;
    if (info.edges > 1 && duration > 0)
      info.frequency = static_cast<double>(info.edges - 1) /
                       static_cast<double>(duration);

    switch (info.homophily) {
      case Homophily::kClaimsOnly:
        ++report.claims_only;
        freq_sum[0] += info.frequency;
        break;
      case Homophily::kFactsOnly:
        ++report.facts_only;
        freq_sum[1] += info.frequency;
        break;
      case Homophily::kMixed:
        ++report.mixed;
        freq_sum[2] += info.frequency;
        break;
    }
    report.components.push_back(std::move(info));
  }
  auto mean = [](double sum, std::size_t n) {
    return n == 0 ? 0.0 : sum / static_cast<double>(n);
  };
  report.mean_frequency_claims = mean(freq_sum[0], report.claims_only);
  report.mean_frequency_facts = mean(freq_sum[1], report.facts_only);
  report.mean_frequency_mixed = mean(freq_sum[2], report.mixed);
  return report;
}

std::vector<SweepRow> hierarchy_sweep(const TemporalGraph& g,
                                      const DecompositionResult& result,
                                      LabelClasses classes) {
  std::vector<SweepRow> rows;
  if (g.empty()) return rows;
  const Weight low =
      *std::min_element(result.values.begin(), result.values.end());
  for (Weight k = std::max<Weight>(low, 1); k <= result.max_value(); ++k) {
    const TemporalGraph sub = extract_subgraph(g, result, k);
    const EdgePartition parts = delta_connected_components(sub, result.delta);
    SweepRow row;
    row.k = k;
    row.nodes = sub.node_count();
    row.edges = sub.edge_count();
    row.components = parts.size();
    row.clustering = clustering_coefficient(sub);
    if (g.labeled()) row.labels = component_label_report(sub, parts, classes);
    rows.push_back(std::move(row));
  }
  return rows;
}

double clustering_coefficient(const TemporalGraph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::vector<NodeId>> adj(n);
  for (NodeId u = 0; u < n; ++u) {
    for (const Incidence& inc : g.by_neighbor(u))
      if (adj[u].empty() || adj[u].back() != inc.other)
        adj[u].push_back(inc.other);
  }
  double triples = 0;
  for (const auto& list : adj) {
    const auto d = static_cast<double>(list.size());
    triples += d * (d - 1) / 2;
  }
  if (triples == 0) return 0.0;

  std::uint64_t triangles = 0;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v : adj[u]) {
      if (v <= u) continue;
      // Common neighbors w > v of u and v.
      auto a = std::upper_bound(adj[u].begin(), adj[u].end(), v);
      auto b = std::upper_bound(adj[v].begin(), adj[v].end(), v);
      while (a != adj[u].end() && b != adj[v].end()) {
        if (*a < *b) {
          ++a;
        } else if (*b < *a) {
          ++b;
        } else {
          ++triangles;
          ++a;
          ++b;
        }
      }
    }
  }
  return 3.0 * static_cast<double>(triangles) / triples;
}

}  // namespace kdelta
