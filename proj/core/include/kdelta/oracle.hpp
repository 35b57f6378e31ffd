#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "kdelta/components.hpp"
#include "kdelta/decomposition.hpp"
#include "kdelta/graph.hpp"

// Slow reference implementations used to cross-check the peeling and
// component code. They read only the raw edge array (no incidence lists, no
// incremental state) and recompute every weight from scratch.
namespace kdelta::oracle {

inline constexpr std::size_t kDecomposeEdgeLimit = 10'000;
inline constexpr std::size_t kComponentsEdgeLimit = 5'000;

struct OracleResult {
  std::vector<Weight> values;
  // Edges in the order they dropped out of the nested fixpoints, with the
  // value assigned at that moment.
  std::vector<std::pair<EdgeId, Weight>> trace;
};

// Brute-force delta-degree / delta-support of e against `live`.
Weight brute_degree(const TemporalGraph& g, EdgeId e,
                    const std::vector<std::uint8_t>& live, Timestamp delta);
Weight brute_support(const TemporalGraph& g, EdgeId e,
                     const std::vector<std::uint8_t>& live, Timestamp delta);

// Largest edge set in which every edge has delta-degree (delta-support) at
// least k, found by deleting violators until nothing changes. With a seed the
// deletions happen one at a time in a shuffled order. Returns sorted ids.
std::vector<EdgeId> fixpoint_core(const TemporalGraph& g, Timestamp delta,
                                  Weight k,
                                  std::optional<std::uint64_t> seed = {});
std::vector<EdgeId> fixpoint_truss(const TemporalGraph& g, Timestamp delta,
                                   Weight k,
                                   std::optional<std::uint64_t> seed = {});

// values[e] = max k such that e survives the k-fixpoint.
OracleResult oracle_decompose(const TemporalGraph& g, Timestamp delta,
                              DecompositionKind kind);

// Closure of the pairwise delta-incidence relation over edges.
EdgePartition oracle_components(const TemporalGraph& g, Timestamp delta);

// Timestamp-free references on the underlying multigraph: edge core numbers
// (min endpoint multiplicity-degree, e counted at both endpoints) and
// triangle-support truss numbers.
std::vector<Weight> static_edge_core_numbers(const TemporalGraph& g);
std::vector<Weight> static_truss_numbers(const TemporalGraph& g);

}  // namespace kdelta::oracle
