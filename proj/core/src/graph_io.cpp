#include <zlib.h>

#include <array>
#include <cctype>
#include <charconv>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>

#include "kdelta/graph.hpp"

namespace kdelta {
namespace {

bool is_gzip(std::string_view bytes) {
  return bytes.size() >= 2 && static_cast<unsigned char>(bytes[0]) == 0x1f &&
         static_cast<unsigned char>(bytes[1]) == 0x8b;
}

std::string gunzip(std::string_view bytes) {
  z_stream zs{};
  if (inflateInit2(&zs, 16 + MAX_WBITS) != Z_OK)
    throw Error("failed to initialise gzip decoder");
  zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(bytes.data()));
  zs.avail_in = static_cast<uInt>(bytes.size());

  std::string out;
  std::array<char, 1 << 16> chunk;
  int status = Z_OK;
  while (status != Z_STREAM_END) {
    zs.next_out = reinterpret_cast<Bytef*>(chunk.data());
    zs.avail_out = static_cast<uInt>(chunk.size());
    status = inflate(&zs, Z_NO_FLUSH);
    if (status == Z_STREAM_END && zs.avail_in > 0) {
      // Concatenated gzip members.
      out.append(chunk.data(), chunk.size() - zs.avail_out);
      inflateReset(&zs);
      status = Z_OK;
      continue;
    }
    if (status != Z_OK && status != Z_STREAM_END) {
      inflateEnd(&zs);
      throw Error("corrupt gzip stream");
    }
    out.append(chunk.data(), chunk.size() - zs.avail_out);
    if (status == Z_OK && zs.avail_in == 0 && zs.avail_out != 0) {
      inflateEnd(&zs);
      throw Error("truncated gzip stream");
    }
  }
  inflateEnd(&zs);
  return out;
}

template <typename T>
bool parse_integer(std::string_view token, T& value) {
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  return ec == std::errc() && ptr == token.data() + token.size();
}

// Splits on ASCII whitespace; at most 5 tokens are needed to detect arity.
std::size_t split(std::string_view line, std::array<std::string_view, 5>& out) {
  std::size_t count = 0;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[j])))
      ++j;
    if (count == out.size()) return count + 1;
    out[count++] = line.substr(i, j - i);
    i = j;
  }
  return count;
}

}  // namespace

TemporalGraph parse_graph(std::string_view text, const LoadOptions& options,
                          LoadReport* report) {
  LoadReport local;
  LoadReport& rep = report ? *report : local;
  rep = {};

  std::string inflated;
  if (is_gzip(text)) {
    inflated = gunzip(text);
    text = inflated;
    rep.gzip = true;
  }

  GraphBuilder builder;
  std::optional<std::size_t> arity;
  std::array<std::string_view, 5> tok;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    ++rep.lines;

    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    if (line[first] == '#' || line[first] == '%') {
      ++rep.comments;
      continue;
    }

    const std::size_t count = split(line, tok);
    if (count != 3 && count != 4)
      throw ParseError(line_no, "expected 'u v t [label]', got " +
                                    std::to_string(count) + " fields");
    if (!arity) {
      arity = count;
      if (options.labeled && count != 4)
        throw ParseError(line_no, "labels requested but line has no label");
    } else if (*arity != count) {
      throw ParseError(line_no, "mixed labeled and unlabeled lines");
    }

    Timestamp t = 0;
    if (!parse_integer(tok[2], t))
      throw ParseError(line_no, "timestamp '" + std::string(tok[2]) +
                                    "' is not an integer");
    std::optional<Label> label;
    if (count == 4) {
      Label value = 0;
      if (!parse_integer(tok[3], value) || value < 0)
        throw ParseError(line_no, "label '" + std::string(tok[3]) +
                                      "' is not a non-negative integer");
      if (options.labeled) label = value;
    }

    if (options.interval && !options.interval->contains(t)) {
      ++rep.outside_interval;
      continue;
    }
    if (!builder.add_edge(tok[0], tok[1], t, label)) {
      ++rep.self_loops;
      continue;
    }
    ++rep.kept;
  }
  return std::move(builder).build();
}

TemporalGraph load_graph(std::istream& in, const LoadOptions& options,
                         LoadReport* report) {
  std::string bytes{std::istreambuf_iterator<char>(in),
                    std::istreambuf_iterator<char>()};
  if (in.bad()) throw Error("failed to read input stream");
  return parse_graph(bytes, options, report);
}

TemporalGraph load_graph_file(const std::string& path,
                              const LoadOptions& options, LoadReport* report) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  return load_graph(in, options, report);
}

void write_graph(std::ostream& out, const TemporalGraph& g) {
  for (const auto& e : g.edges()) {
    out << g.node_token(e.u) << ' ' << g.node_token(e.v) << ' ' << e.t;
    if (e.label) out << ' ' << *e.label;
    out << '\n';
  }
}

std::string format_load_report(const LoadReport& r) {
  std::ostringstream os;
  os << "loaded " << r.kept << " edges from " << r.lines << " lines"
     << (r.gzip ? " (gzip)" : "") << "; comments=" << r.comments
     << " outside_interval=" << r.outside_interval
     << " self_loops_rejected=" << r.self_loops;
  return os.str();
}

}  // namespace kdelta
