#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "kdelta/components.hpp"
#include "kdelta/decomposition.hpp"
#include "kdelta/graph.hpp"
#include "kdelta/stats.hpp"

namespace kdelta {

struct OutputFormat {
  char delimiter = '\t';
  // Extra "# key=value" header lines, e.g. how delta was chosen.
  std::vector<std::pair<std::string, std::string>> header;
  bool node_dictionary = true;
};

// "# kind=<core|truss> delta=<int>" followed by one line per edge:
// edge_id u_token v_token t value. Edge ids are those of the graph the
// input was loaded as (original ids for extracted subgraphs).
void write_result(std::ostream& out, const TemporalGraph& g,
                  const DecompositionResult& result,
                  const OutputFormat& format = {});

// One line per edge: component_id edge_id u_token v_token t, then a
// commented summary block with the component count and size histogram.
void write_partition(std::ostream& out, const TemporalGraph& g,
                     const EdgePartition& partition,
                     const OutputFormat& format = {});

void write_iet_summary(std::ostream& out, const IetSummary& summary,
                       const OutputFormat& format = {});
void write_delta_stats(std::ostream& out, const std::vector<DeltaStats>& rows,
                       const OutputFormat& format = {});
void write_label_report(std::ostream& out, const ComponentLabelReport& report,
                        const OutputFormat& format = {});
void write_sweep(std::ostream& out, const std::vector<SweepRow>& rows,
                 const OutputFormat& format = {});

// Machine-readable "key=value" block framed by "[name]" and a blank line.
void write_summary_block(
    std::ostream& out, const std::string& name,
    const std::vector<std::pair<std::string, std::string>>& entries);

}  // namespace kdelta
