#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lmss/error.hpp"
#include "lmss/graph.hpp"

namespace lmss {

/// Edge-list text format.
///
///   # comment                 (ignored, also after content)
///   vertex <name>             (declares a vertex, needed for isolated ones)
///   <name> <name>             (declares an edge; endpoints are auto-declared)
///
/// Vertex ids follow first appearance. Loops and duplicate edges are parse
/// errors, as is any other malformed line.
inline Graph parse_edge_list(const std::string& text, std::string label = "") {
  std::vector<std::string> vertex_names;
  std::vector<std::pair<std::string, std::string>> edge_pairs;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (tokens[0] == "vertex") {
      if (tokens.size() != 2)
        fail(ErrorKind::parse_error,
             "line " + std::to_string(line_no) + ": expected 'vertex <name>'");
      vertex_names.push_back(tokens[1]);
      continue;
    }
    if (tokens.size() != 2)
      fail(ErrorKind::parse_error,
           "line " + std::to_string(line_no) +
               ": expected two endpoint names");
    if (tokens[0] == tokens[1])
      fail(ErrorKind::parse_error,
           "line " + std::to_string(line_no) + ": loop at '" + tokens[0] + "'");
    vertex_names.push_back(tokens[0]);
    vertex_names.push_back(tokens[1]);
    edge_pairs.emplace_back(tokens[0], tokens[1]);
  }
  try {
    return build_graph(vertex_names, edge_pairs, std::move(label));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::duplicate_edge)
      fail(ErrorKind::parse_error, e.what());
    throw;
  }
}

/// Inverse of parse_edge_list. Every vertex is written explicitly so the
/// round trip reproduces names, ids, and edges exactly.
inline std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  if (!g.label().empty()) out << "# " << g.label() << "\n";
  for (int v = 0; v < g.vertex_count(); ++v)
    out << "vertex " << g.name(v) << "\n";
  for (auto [u, v] : g.edges()) out << g.name(u) << " " << g.name(v) << "\n";
  return out.str();
}

/// graph6: compact printable encoding for graphs on up to 62 vertices.
/// One byte n+63, then the upper triangle in column-major order, six bits
/// per byte, each byte offset by 63.
inline std::string encode_graph6(const Graph& g) {
  int n = g.vertex_count();
  if (n > 62)
    fail(ErrorKind::too_large, "graph6 encoding limited to 62 vertices");
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int bit = 0;
  int acc = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bit == 6) {
        out.push_back(static_cast<char>(acc + 63));
        bit = 0;
        acc = 0;
      }
    }
  }
  if (bit > 0) out.push_back(static_cast<char>((acc << (6 - bit)) + 63));
  return out;
}

/// Decodes one graph6 record (an optional >>graph6<< header and surrounding
/// whitespace are tolerated). Vertices are named "0".."n-1"; the label is
/// the bare record so outputs can cite their source line.
inline Graph decode_graph6(std::string_view record) {
  auto strip = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' ||
                          s.front() == '\r' || s.front() == '\n'))
      s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                          s.back() == '\r' || s.back() == '\n'))
      s.remove_suffix(1);
    return s;
  };
  std::string_view s = strip(record);
  constexpr std::string_view header = ">>graph6<<";
  if (s.substr(0, header.size()) == header) s.remove_prefix(header.size());
  if (s.empty()) fail(ErrorKind::parse_error, "empty graph6 record");
  for (char c : s) {
    if (c < 63 || c > 126)
      fail(ErrorKind::parse_error, "graph6 byte out of range");
  }
  int n = s[0] - 63;
  if (n == 63)
    fail(ErrorKind::too_large, "graph6 decoding limited to 62 vertices");
  int pair_count = n * (n - 1) / 2;
  int expected = 1 + (pair_count + 5) / 6;
  if (static_cast<int>(s.size()) != expected)
    fail(ErrorKind::parse_error, "graph6 record has wrong length");
  std::vector<std::pair<int, int>> pairs;
  int bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      int byte = s[1 + bit / 6] - 63;
      if ((byte >> (5 - bit % 6)) & 1) pairs.emplace_back(i, j);
    }
  }
  // Padding bits beyond the triangle must be zero.
  for (; bit < 6 * (expected - 1); ++bit) {
    int byte = s[1 + bit / 6] - 63;
    if ((byte >> (5 - bit % 6)) & 1)
      fail(ErrorKind::parse_error, "graph6 padding bits not zero");
  }
  return graph_from_index_pairs(n, std::move(pairs), std::string(s));
}

/// Parses one graph per non-empty line; parse errors cite the record index.
inline std::vector<Graph> parse_graph6_lines(const std::string& text) {
  std::vector<Graph> out;
  std::istringstream in(text);
  std::string line;
  int record = 0;
  while (std::getline(in, line)) {
    std::string_view s(line);
    bool blank = true;
    for (char c : s)
      if (c != ' ' && c != '\t' && c != '\r') blank = false;
    if (blank) continue;
    ++record;
    try {
      out.push_back(decode_graph6(s));
    } catch (const Error& e) {
      fail(ErrorKind::parse_error,
           "record " + std::to_string(record) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace lmss
