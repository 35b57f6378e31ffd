#include "kdelta/serialize.hpp"

#include <charconv>
#include <map>
#include <type_traits>
#include <ostream>

namespace kdelta {
namespace {

std::string format_double(double value) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, ptr);
}

void write_header(std::ostream& out, const TemporalGraph& g,
                  const OutputFormat& format) {
  for (const auto& [key, value] : format.header)
    out << "# " << key << '=' << value << '\n';
  out << "# nodes=" << g.node_count() << " edges=" << g.edge_count() << '\n';
  if (format.node_dictionary) {
    for (NodeId u = 0; u < g.node_count(); ++u)
      out << "# node" << format.delimiter << g.original_node(u)
          << format.delimiter << g.node_token(u) << '\n';
  }
}

class Row {
 public:
  Row(std::ostream& out, char delimiter) : out_(out), delimiter_(delimiter) {}
  ~Row() { out_ << '\n'; }

  template <typename T>
  Row& operator<<(const T& value) {
    if (!first_) out_ << delimiter_;
    first_ = false;
    if constexpr (std::is_floating_point_v<T>)
      out_ << format_double(value);
    else
      out_ << value;
    return *this;
  }

 private:
  std::ostream& out_;
  char delimiter_;
  bool first_ = true;
};

}  // namespace

void write_result(std::ostream& out, const TemporalGraph& g,
                  const DecompositionResult& result,
                  const OutputFormat& format) {
  out << "# kind=" << to_string(result.kind) << " delta=" << result.delta
      << '\n';
  write_header(out, g, format);
  for (const TemporalEdge& e : g.edges())
    Row(out, format.delimiter) << g.original_edge(e.id) << g.node_token(e.u)
                               << g.node_token(e.v) << e.t
                               << result.values[e.id];
}

void write_partition(std::ostream& out, const TemporalGraph& g,
                     const EdgePartition& partition,
                     const OutputFormat& format) {
  out << "# delta=" << partition.delta << '\n';
  write_header(out, g, format);
  for (std::size_t c = 0; c < partition.components.size(); ++c) {
    for (EdgeId e : partition.components[c]) {
      const TemporalEdge& edge = g.edge(e);
      Row(out, format.delimiter) << c << g.original_edge(e)
                                 << g.node_token(edge.u)
                                 << g.node_token(edge.v) << edge.t;
    }
  }
  std::map<std::size_t, std::size_t> histogram;
  for (const auto& component : partition.components)
    ++histogram[component.size()];
  out << "# components=" << partition.components.size() << '\n';
  out << "# size" << format.delimiter << "count\n";
  for (const auto& [size, count] : histogram)
    out << "# " << size << format.delimiter << count << '\n';
}

void write_iet_summary(std::ostream& out, const IetSummary& summary,
                       const OutputFormat& format) {
  Row(out, format.delimiter) << "percentile" << "delta";
  for (const auto& [fraction, value] : summary.percentiles)
    Row(out, format.delimiter) << fraction << value;
}

void write_delta_stats(std::ostream& out, const std::vector<DeltaStats>& rows,
                       const OutputFormat& format) {
  Row(out, format.delimiter) << "delta" << "avg_degree" << "max_degree"
                             << "avg_support" << "max_support" << "xi";
  for (const DeltaStats& s : rows)
    Row(out, format.delimiter) << s.delta << s.avg_degree << s.max_degree
                               << s.avg_support << s.max_support << s.xi;
}

void write_label_report(std::ostream& out, const ComponentLabelReport& report,
                        const OutputFormat& format) {
  Row(out, format.delimiter) << "component" << "nodes" << "edges" << "class"
                             << "census" << "first" << "last" << "frequency";
  for (std::size_t c = 0; c < report.components.size(); ++c) {
    const ComponentLabelInfo& info = report.components[c];
    std::string census;
    for (const auto& [label, count] : info.census) {
      if (!census.empty()) census += ';';
      census += std::to_string(label) + ':' + std::to_string(count);
    }
    Row(out, format.delimiter) << c << info.nodes << info.edges
                               << to_string(info.homophily) << census
                               << info.first << info.last << info.frequency;
  }
}

void write_sweep(std::ostream& out, const std::vector<SweepRow>& rows,
                 const OutputFormat& format) {
  const bool labeled = !rows.empty() && rows.front().labels.has_value();
  {
    Row header(out, format.delimiter);
    header << "k" << "nodes" << "edges" << "components" << "clustering";
    if (labeled)
      header << "claims_only" << "facts_only" << "mixed"
             << "mean_freq_claims" << "mean_freq_facts";
  }
  for (const SweepRow& r : rows) {
    Row row(out, format.delimiter);
    row << r.k << r.nodes << r.edges << r.components << r.clustering;
    if (labeled)
      row << r.labels->claims_only << r.labels->facts_only << r.labels->mixed
          << r.labels->mean_frequency_claims << r.labels->mean_frequency_facts;
  }
}

void write_summary_block(
    std::ostream& out, const std::string& name,
    const std::vector<std::pair<std::string, std::string>>& entries) {
  out << '[' << name << "]\n";
  for (const auto& [key, value] : entries) out << key << '=' << value << '\n';
  out << '\n';
}

}  // namespace kdelta
