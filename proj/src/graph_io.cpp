#include "bullchrome/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "bullchrome/errors.hpp"

namespace bullchrome {

namespace {

constexpr std::string_view kGraph6Prefix = ">>graph6<<";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' || s.front() == '\n'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
    s.remove_suffix(1);
  return s;
}

int sextet(char c) {
  if (c < 63 || c > 126)
    throw ParseError(ParseErrorKind::invalid_character,
                     "byte " + std::to_string(static_cast<unsigned char>(c)) + " outside graph6 range");
  return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(kGraph6Prefix)) text.remove_prefix(kGraph6Prefix.size());
  if (text.empty()) throw ParseError(ParseErrorKind::empty_input, "no graph6 data");

  std::size_t pos = 0;
  long n = 0;
  if (text[0] != 126) {
    n = sextet(text[0]);
    pos = 1;
  } else if (text.size() >= 2 && text[1] == 126) {
    if (text.size() < 8) throw ParseError(ParseErrorKind::malformed_header, "truncated 8-byte size");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | sextet(text[i]);
    pos = 8;
    if (n <= 258047) throw ParseError(ParseErrorKind::malformed_header, "non-canonical 8-byte size");
  } else {
    if (text.size() < 4) throw ParseError(ParseErrorKind::malformed_header, "truncated 4-byte size");
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | sextet(text[i]);
    pos = 4;
    if (n <= 62) throw ParseError(ParseErrorKind::malformed_header, "non-canonical 4-byte size");
  }
  if (n > kMaxVertices)
    throw ParseError(ParseErrorKind::malformed_header,
                     "graph on " + std::to_string(n) + " vertices exceeds limit " + std::to_string(kMaxVertices));

  const long bits = n * (n - 1) / 2;
  const long expected = (bits + 5) / 6;
  const long actual = static_cast<long>(text.size() - pos);
  if (actual != expected)
    throw ParseError(ParseErrorKind::length_mismatch,
                     "expected " + std::to_string(expected) + " data bytes, found " + std::to_string(actual));

  GraphBuilder b(static_cast<int>(n));
  long k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = sextet(text[pos + static_cast<std::size_t>(k / 6)]);
      if ((byte >> (5 - k % 6)) & 1) b.add_edge(i, j);
    }
  if (k % 6 != 0) {
    const int byte = sextet(text.back());
    if (byte & ((1 << (6 - k % 6)) - 1))
      throw ParseError(ParseErrorKind::trailing_bits, "padding bits after the last edge bit are set");
  }
  return b.build();
}

std::string emit_graph6(const Graph& g) {
  const long n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.append(2, static_cast<char>(126));
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0;
  int used = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.row(i).contains(j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = used = 0;
      }
    }
  if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + 63));
  return out;
}

Graph parse_edgelist(std::string_view text) {
  std::vector<long> nums;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i == text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    long value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + j, value);
    if (ec != std::errc{} || ptr != text.data() + j)
      throw ParseError(ParseErrorKind::malformed_edgelist, "token '" + std::string(text.substr(i, j - i)) + "' is not an integer");
    nums.push_back(value);
    i = j;
  }
  if (nums.empty()) throw ParseError(ParseErrorKind::empty_input, "no edge-list data");
  if (nums.size() < 2) throw ParseError(ParseErrorKind::malformed_edgelist, "missing 'n m' header");
  const long n = nums[0];
  const long m = nums[1];
  if (n < 0 || n > kMaxVertices || m < 0)
    throw ParseError(ParseErrorKind::malformed_edgelist, "header values out of range");
  if (static_cast<long>(nums.size()) != 2 + 2 * m)
    throw ParseError(ParseErrorKind::length_mismatch,
                     "header announces " + std::to_string(m) + " edges, found " +
                         std::to_string((static_cast<long>(nums.size()) - 2) / 2) + " pairs");
  GraphBuilder b(static_cast<int>(n));
  for (long e = 0; e < m; ++e) {
    const long u = nums[static_cast<std::size_t>(2 + 2 * e)];
    const long v = nums[static_cast<std::size_t>(3 + 2 * e)];
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
      throw ParseError(ParseErrorKind::malformed_edgelist,
                       "bad edge " + std::to_string(u) + " " + std::to_string(v));
    b.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  return b.build();
}

std::string emit_edgelist(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

GraphFormat parse_format_name(std::string_view name) {
  if (name == "auto") return GraphFormat::automatic;
  if (name == "graph6" || name == "g6") return GraphFormat::graph6;
  if (name == "edgelist" || name == "edges") return GraphFormat::edgelist;
  throw InvalidArgument("unknown graph format '" + std::string(name) + "'");
}

std::vector<Graph> parse_graphs(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::automatic) {
    std::string_view body = trim(text);
    if (body.empty()) throw ParseError(ParseErrorKind::empty_input, "input is empty");
    const std::string_view first = body.substr(0, body.find('\n'));
    format = trim(first).find_first_of(" \t") != std::string_view::npos ? GraphFormat::edgelist
                                                                         : GraphFormat::graph6;
  }
  if (format == GraphFormat::edgelist) return {parse_edgelist(text)};

  std::vector<Graph> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(start, end - start));
    if (!line.empty()) out.push_back(parse_graph6(line));
    start = end + 1;
  }
  if (out.empty()) throw ParseError(ParseErrorKind::empty_input, "input is empty");
  return out;
}

std::string emit_dot(const Graph& g, const std::vector<int>& colors) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v;
    if (!colors.empty()) {
      const int c = colors[static_cast<std::size_t>(v)];
      // golden-angle hue spacing keeps neighbouring color indices distinct
      const double hue = static_cast<double>((c * 137) % 360) / 360.0;
      out << " [label=\"" << v << ":" << c << "\", style=filled, fillcolor=\"" << hue << " 0.45 0.95\"]";
    }
    out << ";\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace bullchrome
