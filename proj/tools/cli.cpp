#include "cli.hpp"

#include <unistd.h>

#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "kdelta/kdelta.hpp"
#include "kdelta/oracle.hpp"
#include "kdelta/synthetic.hpp"

namespace kdelta::cli {
namespace {

namespace fs = std::filesystem;

template <typename T>
std::optional<T> parse_number(std::string_view text) {
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

TimeInterval parse_interval(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw UsageError("--interval expects ALPHA:BETA, got '" + text + "'");
  auto a = parse_number<Timestamp>(std::string_view(text).substr(0, colon));
  auto b = parse_number<Timestamp>(std::string_view(text).substr(colon + 1));
  if (!a || !b) throw UsageError("--interval bounds must be integers");
  if (*a > *b) throw UsageError("--interval lower bound exceeds upper bound");
  return TimeInterval(*a, *b);
}

std::string to_text(double value) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, ptr);
}

TemporalGraph load(const RunConfig& c, std::ostream& log) {
  LoadOptions options;
  options.interval = c.interval;
  options.labeled = c.labeled;
  LoadReport report;
  TemporalGraph g = c.input == "-" ? load_graph(std::cin, options, &report)
                                   : load_graph_file(c.input, options, &report);
  log << format_load_report(report) << '\n';
  return g;
}

const DeltaSpec& single_delta(const RunConfig& c) {
  if (c.deltas.size() != 1)
    throw UsageError(c.command + " needs exactly one --delta");
  return c.deltas.front();
}

OutputFormat format_for(const RunConfig& c, const DeltaSpec& spec) {
  OutputFormat f;
  f.delimiter = c.delimiter;
  f.header.emplace_back("delta_spec", spec.text);
  return f;
}

int run_decompose(const RunConfig& c, std::ostream& out, std::ostream& log) {
  const DeltaSpec& spec = single_delta(c);
  const TemporalGraph g = load(c, log);
  const Timestamp delta = resolve_delta(spec, g);
  const auto kind = c.command == "core" ? DecompositionKind::kCore
                                        : DecompositionKind::kTruss;
  const DecompositionResult result = decompose(g, kind, delta);
  std::ostringstream text;
  write_result(text, g, result, format_for(c, spec));
  write_output(c.output, text.str(), out);
  return kOk;
}

int run_components(const RunConfig& c, std::ostream& out, std::ostream& log) {
  if (c.within_core && c.within_truss)
    throw UsageError("--within-core and --within-truss are mutually exclusive");
  const DeltaSpec& spec = single_delta(c);
  const TemporalGraph g = load(c, log);
  const Timestamp delta = resolve_delta(spec, g);
  OutputFormat f = format_for(c, spec);

  std::optional<TemporalGraph> sub;
  if (c.within_core || c.within_truss) {
    const auto kind = c.within_core ? DecompositionKind::kCore
                                    : DecompositionKind::kTruss;
    const Weight k = c.within_core ? *c.within_core : *c.within_truss;
    sub = extract_subgraph(g, decompose(g, kind, delta), k);
    f.header.emplace_back("within", std::string(to_string(kind)) + ":" +
                                        std::to_string(k));
  }
  const TemporalGraph& target = sub ? *sub : g;
  const EdgePartition partition = delta_connected_components(target, delta);
  std::ostringstream text;
  write_partition(text, target, partition, f);
  write_output(c.output, text.str(), out);
  return kOk;
}

int run_shells(const RunConfig& c, std::ostream& out, std::ostream& log) {
  if (!c.k) throw UsageError("shells needs --k");
  const DeltaSpec& spec = single_delta(c);
  const TemporalGraph g = load(c, log);
  const Timestamp delta = resolve_delta(spec, g);
  const DecompositionKind kind = parse_kind(c.kind);
  const TemporalGraph sub =
      extract_subgraph(g, decompose(g, kind, delta), *c.k,
                       c.at_least ? ExtractMode::kAtLeast : ExtractMode::kExactly);
  std::ostringstream text;
  text << "# kind=" << to_string(kind) << " delta=" << delta << " k=" << *c.k
       << " mode=" << (c.at_least ? "at_least" : "exactly") << '\n'
       << "# delta_spec=" << spec.text << '\n'
       << "# nodes=" << sub.node_count() << " edges=" << sub.edge_count() << '\n';
  write_graph(text, sub);
  write_output(c.output, text.str(), out);
  return kOk;
}

int run_stats(const RunConfig& c, std::ostream& out, std::ostream& log) {
  for (double f : c.fractions)
    if (!(f > 0.0 && f <= 1.0))
      throw UsageError("--fractions must lie in (0, 1]");
  bool percentiles = c.percentiles;
  bool delta_table = !c.deltas.empty() && !c.sweep && !c.label_report;
  if ((c.sweep || c.label_report) && c.deltas.size() != 1)
    throw UsageError("--sweep and --labels need exactly one --delta");
  if (!percentiles && !delta_table && !c.sweep && !c.label_report)
    percentiles = delta_table = true;

  const TemporalGraph g = load(c, log);
  OutputFormat f;
  f.delimiter = c.delimiter;
  std::ostringstream text;
  std::ostringstream summary;

  write_summary_block(summary, "graph",
                      {{"nodes", std::to_string(g.node_count())},
                       {"edges", std::to_string(g.edge_count())},
                       {"min_time", std::to_string(g.min_time())},
                       {"max_time", std::to_string(g.max_time())},
                       {"max_delta", std::to_string(g.empty() ? 0 : max_delta(g))}});

  if (percentiles) {
    const IetSummary iet = iet_percentiles(g, c.fractions);
    text << "# table=iet_percentiles iets=" << iet.iets.size() << '\n';
    write_iet_summary(text, iet, f);
    text << '\n';
    std::vector<std::pair<std::string, std::string>> entries{
        {"count", std::to_string(iet.iets.size())}};
    for (const auto& [fraction, value] : iet.percentiles)
      entries.emplace_back("p" + to_text(std::round(fraction * 1e8) / 1e6),
                           std::to_string(value));
    write_summary_block(summary, "iet", entries);
  }

  if (delta_table) {
    std::vector<DeltaSpec> specs = c.deltas;
    if (specs.empty())
      for (const char* p : {"p10", "p25", "p50", "p75"})
        specs.push_back(parse_delta_spec(p));
    std::vector<DeltaStats> rows;
    for (const DeltaSpec& spec : specs) {
      rows.push_back(delta_stats(g, resolve_delta(spec, g)));
      const DeltaStats& s = rows.back();
      write_summary_block(summary, "delta " + spec.text,
                          {{"delta", std::to_string(s.delta)},
                           {"avg_degree", to_text(s.avg_degree)},
                           {"max_degree", std::to_string(s.max_degree)},
                           {"avg_support", to_text(s.avg_support)},
                           {"max_support", std::to_string(s.max_support)},
                           {"xi", std::to_string(s.xi)}});
    }
    text << "# table=delta_stats\n";
    write_delta_stats(text, rows, f);
    text << '\n';
  }

  if (c.sweep || c.label_report) {
    const DeltaSpec& spec = c.deltas.front();
    const Timestamp delta = resolve_delta(spec, g);
    if (c.sweep) {
      const auto kind = parse_kind(*c.sweep);
      const auto rows = hierarchy_sweep(g, decompose(g, kind, delta), c.classes);
      text << "# table=sweep kind=" << to_string(kind) << " delta=" << delta
           << " delta_spec=" << spec.text << '\n';
      write_sweep(text, rows, f);
      text << '\n';
    }
    if (c.label_report) {
      const auto report = component_label_report(
          g, delta_connected_components(g, delta), c.classes);
      text << "# table=labels delta=" << delta << " delta_spec=" << spec.text
           << '\n';
      write_label_report(text, report, f);
      text << '\n';
      write_summary_block(
          summary, "labels",
          {{"components", std::to_string(report.components.size())},
           {"claims_only", std::to_string(report.claims_only)},
           {"facts_only", std::to_string(report.facts_only)},
           {"mixed", std::to_string(report.mixed)},
           {"mean_frequency_claims", to_text(report.mean_frequency_claims)},
           {"mean_frequency_facts", to_text(report.mean_frequency_facts)},
           {"mean_frequency_mixed", to_text(report.mean_frequency_mixed)}});
    }
  }

  write_output(c.output, text.str(), out);
  if (!c.summary.empty()) write_output(c.summary, summary.str(), out);
  return kOk;
}

int run_verify(const RunConfig& c, std::ostream& out, std::ostream& log) {
  const DeltaSpec& spec = single_delta(c);
  const TemporalGraph g = load(c, log);
  const Timestamp delta = resolve_delta(spec, g);
  std::size_t mismatches = 0;
  if (c.kind == "components") {
    const EdgePartition fast = delta_connected_components(g, delta);
    const EdgePartition slow = oracle::oracle_components(g, delta);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (fast.component_of[e] != slow.component_of[e]) ++mismatches;
  } else {
    const DecompositionKind kind = parse_kind(c.kind);
    const DecompositionResult fast = decompose(g, kind, delta);
    const oracle::OracleResult slow = oracle::oracle_decompose(g, delta, kind);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (fast.values[e] != slow.values[e]) ++mismatches;
  }
  std::ostringstream text;
  text << (mismatches == 0 ? "PASS" : "FAIL") << " kind=" << c.kind
       << " delta=" << delta << " edges=" << g.edge_count()
       << " mismatches=" << mismatches << '\n';
  write_output(c.output, text.str(), out);
  return mismatches == 0 ? kOk : kDomainError;
}

int run_generate(const RunConfig& c, std::ostream& out) {
  if (c.nodes < 2) throw UsageError("--nodes must be at least 2");
  if (c.t_min > c.t_max) throw UsageError("--t-min exceeds --t-max");
  synthetic::RandomGraphParams params;
  params.nodes = c.nodes;
  params.edges = c.edges;
  params.t_min = c.t_min;
  params.t_max = c.t_max;
  params.fact_fraction = c.fact_fraction;
  const TemporalGraph g = synthetic::random_temporal_graph(params, c.seed);
  std::ostringstream text;
  text << "# seed=" << c.seed << " nodes=" << c.nodes << " edges=" << c.edges
       << " t=" << c.t_min << ':' << c.t_max << '\n';
  write_graph(text, g);
  write_output(c.output, text.str(), out);
  return kOk;
}

}  // namespace

DeltaSpec parse_delta_spec(const std::string& text) {
  DeltaSpec spec;
  spec.text = text;
  if (auto value = parse_number<Timestamp>(text)) {
    if (*value < 0) throw UsageError("--delta must be non-negative");
    spec.value = *value;
    return spec;
  }
  std::optional<double> fraction;
  if (text.size() > 1 && text[0] == 'p') {
    if (auto percent = parse_number<double>(std::string_view(text).substr(1)))
      fraction = *percent / 100.0;
  } else {
    fraction = parse_number<double>(text);
  }
  if (!fraction || !(*fraction > 0.0 && *fraction <= 1.0))
    throw UsageError("--delta expects an integer, pNN, or a fraction in (0, 1]; got '" +
                     text + "'");
  spec.fraction = *fraction;
  return spec;
}

Timestamp resolve_delta(const DeltaSpec& spec, const TemporalGraph& g) {
  if (spec.value) return *spec.value;
  return iet_percentiles(g, {*spec.fraction}).percentiles.at(*spec.fraction);
}

void write_output(const std::string& path, const std::string& content,
                  std::ostream& out) {
  if (path == "-") {
    out << content;
    out.flush();
    return;
  }
  static std::atomic<unsigned> counter{0};
  fs::path dir;
  if (const char* env = std::getenv("KDELTA_TMPDIR"); env && *env)
    dir = env;
  else
    dir = fs::temp_directory_path();
  if (!fs::is_directory(dir))
    throw Error("temporary directory does not exist: " + dir.string());
  const fs::path target(path);
  const fs::path tmp =
      dir / (".kdelta-" + std::to_string(::getpid()) + "-" +
             std::to_string(counter++) + "-" + target.filename().string());
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (!file) throw Error("cannot write " + tmp.string());
    file << content;
    if (!file.flush()) throw Error("cannot write " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    // Different file systems: fall back to a copy.
    std::error_code copy_ec;
    fs::copy_file(tmp, target, fs::copy_options::overwrite_existing, copy_ec);
    fs::remove(tmp);
    if (copy_ec) throw Error("cannot write " + path + ": " + copy_ec.message());
  }
}

int run(const RunConfig& c, std::ostream& out, std::ostream& log) {
  if (c.command == "core" || c.command == "truss")
    return run_decompose(c, out, log);
  if (c.command == "components") return run_components(c, out, log);
  if (c.command == "shells") return run_shells(c, out, log);
  if (c.command == "stats") return run_stats(c, out, log);
  if (c.command == "verify") return run_verify(c, out, log);
  if (c.command == "generate") return run_generate(c, out);
  throw UsageError("unknown command '" + c.command + "'");
}

int run_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Temporal (k, delta)-core, truss and component decomposition"};
  app.name("kdelta");
  app.require_subcommand(1);

  RunConfig c;
  std::string delta;
  std::vector<std::string> delta_list;
  std::string interval;
  bool csv = false;

  auto common = [&](CLI::App* sub, bool needs_delta) {
    sub->add_option("input", c.input, "Edge list 'u v t [label]' (gzip ok, '-' for stdin)")
        ->required();
    sub->add_option("-o,--output", c.output, "Output file ('-' for stdout)");
    sub->add_option("--interval", interval, "Keep edges with ALPHA <= t <= BETA");
    sub->add_flag("--labeled", c.labeled, "Require a fourth label column");
    sub->add_flag("--csv", csv, "Comma instead of tab as table delimiter");
    if (needs_delta)
      sub->add_option("--delta", delta, "Integer, pNN, or IET fraction in (0, 1]")
          ->required();
  };

  auto* core = app.add_subcommand("core", "(k, delta)-core numbers of every edge");
  common(core, true);
  auto* truss = app.add_subcommand("truss", "(k, delta)-truss numbers of every edge");
  common(truss, true);

  auto* components = app.add_subcommand("components", "delta-connected components");
  common(components, true);
  components->add_option("--within-core", c.within_core,
                         "Restrict to the (k, delta)-core first");
  components->add_option("--within-truss", c.within_truss,
                         "Restrict to the (k, delta)-truss first");

  auto* shells = app.add_subcommand("shells", "Edges of the (k, delta)-shell");
  common(shells, true);
  shells->add_option("--k", c.k, "Shell level")->required();
  shells->add_option("--kind", c.kind, "core or truss")
      ->check(CLI::IsMember({"core", "truss"}));
  shells->add_flag("--at-least", c.at_least, "Keep value >= k (the core) instead of == k");

  auto* stats = app.add_subcommand("stats", "IET percentiles and per-delta statistics");
  common(stats, false);
  stats->add_option("--delta", delta_list, "One or more deltas (comma separated)")
      ->delimiter(',');
  stats->add_flag("--percentiles", c.percentiles, "IET percentile table");
  stats->add_option("--fractions", c.fractions, "Percentile fractions")->delimiter(',');
  stats->add_option("--sweep", c.sweep, "Hierarchy sweep over k (core or truss)")
      ->check(CLI::IsMember({"core", "truss"}));
  stats->add_flag("--labels", c.label_report, "Label report of the delta components");
  stats->add_option("--claim-label", c.classes.claim, "Label value of claims");
  stats->add_option("--fact-label", c.classes.fact, "Label value of fact checks");
  stats->add_option("--summary", c.summary, "Also write key=value summary blocks here");

  auto* verify = app.add_subcommand("verify", "Compare against the brute-force oracle");
  common(verify, true);
  verify->add_option("--kind", c.kind, "core, truss or components")
      ->check(CLI::IsMember({"core", "truss", "components"}));

  auto* generate = app.add_subcommand("generate", "Write a random temporal graph");
  generate->add_option("-o,--output", c.output, "Output file ('-' for stdout)");
  generate->add_option("--seed", c.seed, "Random seed");
  generate->add_option("--nodes", c.nodes, "Node count");
  generate->add_option("--edges", c.edges, "Edge count");
  generate->add_option("--t-min", c.t_min, "Smallest timestamp");
  generate->add_option("--t-max", c.t_max, "Largest timestamp");
  generate->add_option("--fact-fraction", c.fact_fraction,
                       "Label edges, this fraction as facts (negative: unlabeled)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    c.command = app.get_subcommands().front()->get_name();
    if (!delta.empty()) c.deltas.push_back(parse_delta_spec(delta));
    for (const auto& text : delta_list) c.deltas.push_back(parse_delta_spec(text));
    if (!interval.empty()) c.interval = parse_interval(interval);
    if (csv) c.delimiter = ',';
    return run(c, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
}

}  // namespace kdelta::cli
