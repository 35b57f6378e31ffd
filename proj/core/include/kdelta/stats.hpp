#pragma once

#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "kdelta/components.hpp"
#include "kdelta/decomposition.hpp"
#include "kdelta/graph.hpp"

namespace kdelta {

// Inter-event times: gaps between chronologically consecutive incident edges
// of every node (a multiset; simultaneous edges contribute zero gaps).
struct IetSummary {
  std::vector<Timestamp> iets;  // sorted ascending
  std::map<double, Timestamp> percentiles;
};

// Nearest-rank percentile of a sorted sample: the ceil(p * N)-th smallest
// value, with p in (0, 1].
Timestamp nearest_rank(const std::vector<Timestamp>& sorted, double fraction);

IetSummary iet_percentiles(const TemporalGraph& g,
                           const std::vector<double>& fractions = {0.10, 0.25,
                                                                   0.50, 0.75});

struct DeltaStats {
  Timestamp delta = 0;
  double avg_degree = 0;
  Weight max_degree = 0;
  double avg_support = 0;
  Weight max_support = 0;
  // Largest number of distinct edges delta-incident to a single edge,
  // counted over both endpoints (the edge itself included).
  Weight xi = 0;
};

// Degree and support of every edge against the full edge set.
DeltaStats delta_stats(const TemporalGraph& g, Timestamp delta);

enum class Homophily { kClaimsOnly, kFactsOnly, kMixed };
std::string_view to_string(Homophily h);

struct LabelClasses {
  Label claim = 0;
  Label fact = 1;
};

struct ComponentLabelInfo {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::map<Label, std::size_t> census;
  Homophily homophily = Homophily::kMixed;
  Timestamp first = 0;
  Timestamp last = 0;
  // (edges - 1) / (last - first); zero for single edges or zero duration.
  double frequency = 0;
};

struct ComponentLabelReport {
  std::vector<ComponentLabelInfo> components;
  std::size_t claims_only = 0;
  std::size_t facts_only = 0;
  std::size_t mixed = 0;
  // Means of the per-component frequencies within each class (0 if empty).
  double mean_frequency_claims = 0;
  double mean_frequency_facts = 0;
  double mean_frequency_mixed = 0;
};

ComponentLabelReport component_label_report(const TemporalGraph& g,
                                            const EdgePartition& partition,
                                            LabelClasses classes = {});

// One row of a (k, delta) sweep: the k-core/truss, its components and their
// label classes.
struct SweepRow {
  Weight k = 0;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t components = 0;
  double clustering = 0;
  std::optional<ComponentLabelReport> labels;
};

std::vector<SweepRow> hierarchy_sweep(const TemporalGraph& g,
                                      const DecompositionResult& result,
                                      LabelClasses classes = {});

// Global clustering coefficient (3 * triangles / connected triples) of the
// underlying simple graph; 0 without triples.
double clustering_coefficient(const TemporalGraph& g);

}  // namespace kdelta
