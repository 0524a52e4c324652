#pragma once

// Graph interchange: graph6 (n <= 62) and a plain edge-list text format.
//
// Edge list:  "n m\n" followed by m lines "u v\n", 0-indexed, u < v.
// graph6:     one size byte n+63, then the upper triangle x(0,1), x(0,2),
//             x(1,2), x(0,3), ... (column by column) packed six bits per
//             byte, most significant bit first, each byte offset by 63.

#include <cctype>
#include <charconv>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "eqlines/error.hpp"
#include "eqlines/graph.hpp"

namespace eqlines {

enum class GraphFormat { Graph6, EdgeList };

inline constexpr int kGraph6MaxOrder = 62;

inline std::string write_graph6(const Graph& g) {
  if (g.order() > kGraph6MaxOrder) {
    throw Error(ErrorKind::BadParams, "graph6 output supports at most 62 vertices; use the edge-list format");
  }
  const int n = g.order();
  std::string out(1, static_cast<char>(n + 63));
  int bits = 0;
  int acc = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

inline Graph read_graph6(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  const std::size_t header = 0;
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError(header, "empty graph6 string");
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw ParseError(i, "byte " + std::to_string(c) + " outside the graph6 range 63..126");
  }
  const int n = text[0] - 63;
  if (n > kGraph6MaxOrder) throw ParseError(0, "graph6 orders above 62 are not supported");
  const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t want = 1 + (pairs + 5) / 6;
  if (text.size() != want) {
    throw ParseError(std::min(text.size(), want),
                     "expected " + std::to_string(want) + " bytes for n=" + std::to_string(n) + ", got " +
                         std::to_string(text.size()));
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = text[1 + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  }
  if (pairs % 6 != 0) {
    const int last = text.back() - 63;
    const int pad = static_cast<int>(6 - pairs % 6);
    if (last & ((1 << pad) - 1)) throw ParseError(text.size() - 1, "nonzero padding bits");
  }
  return build_graph(n, edges);
}

inline std::string write_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

namespace detail {

class EdgeListLexer {
 public:
  explicit EdgeListLexer(std::string_view text) : text_(text) {}

  // Reads the next non-negative integer. Newlines are significant only in
  // that every record must end with one; other whitespace separates tokens.
  long long integer(const char* what) {
    skip_blanks();
    if (pos_ >= text_.size()) throw ParseError(pos_, std::string("unexpected end of input, expected ") + what);
    long long value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc() || value < 0 || ptr == text_.data() + pos_) {
      throw ParseError(pos_, std::string("expected non-negative integer for ") + what);
    }
    const std::size_t start = pos_;
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    last_start_ = start;
    return value;
  }

  void end_of_line() {
    skip_blanks();
    if (pos_ >= text_.size()) throw ParseError(pos_, "missing newline at end of record");
    if (text_[pos_] == '\r') ++pos_;
    if (pos_ >= text_.size() || text_[pos_] != '\n') throw ParseError(pos_, "unexpected trailing token");
    ++pos_;
  }

  void end_of_input() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ < text_.size()) throw ParseError(pos_, "unexpected data after the last edge");
  }

  std::size_t last_start() const { return last_start_; }

 private:
  void skip_blanks() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t last_start_ = 0;
};

}  // namespace detail

inline Graph read_edge_list(std::string_view text) {
  detail::EdgeListLexer lex(text);
  const long long n = lex.integer("vertex count");
  if (n > 1'000'000) throw ParseError(lex.last_start(), "vertex count too large");
  const long long m = lex.integer("edge count");
  if (m > n * (n - 1) / 2) throw ParseError(lex.last_start(), "more edges than a simple graph allows");
  lex.end_of_line();
  std::vector<Edge> edges;
  std::vector<std::size_t> where;
  for (long long i = 0; i < m; ++i) {
    const long long u = lex.integer("edge endpoint");
    const std::size_t at = lex.last_start();
    const long long v = lex.integer("edge endpoint");
    if (u >= n || v >= n) throw ParseError(u >= n ? at : lex.last_start(), "endpoint out of range [0," + std::to_string(n) + ")");
    if (u >= v) throw ParseError(at, "edge endpoints must satisfy u < v");
    lex.end_of_line();
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
    where.push_back(at);
  }
  lex.end_of_input();
  try {
    return build_graph(static_cast<int>(n), edges);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DuplicateEdge) throw;
    // Report the second occurrence.
    for (std::size_t i = 0; i < edges.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (edges[i] == edges[j]) throw ParseError(where[i], "duplicate edge");
    throw;
  }
}

inline std::string write_graph(const Graph& g, GraphFormat format) {
  return format == GraphFormat::Graph6 ? write_graph6(g) + "\n" : write_edge_list(g);
}

inline Graph read_graph(std::string_view bytes, GraphFormat format) {
  return format == GraphFormat::Graph6 ? read_graph6(bytes) : read_edge_list(bytes);
}

/// Reads a graph6 stream with one graph per line; blank lines are skipped.
/// Offsets in errors are relative to the start of the stream.
inline std::vector<Graph> read_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) {
      try {
        out.push_back(read_graph6(line));
      } catch (const ParseError& e) {
        throw ParseError(start + e.offset(), e.reason());
      }
    }
    start = end + 1;
  }
  return out;
}

}  // namespace eqlines
