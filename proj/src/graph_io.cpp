#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "phylocover/errors.hpp"
#include "phylocover/graph.hpp"

namespace phylocover {

namespace {

bool is_comment_or_blank(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Parses exactly `count` non-negative integers from `line`; reports the
// 1-based column of the first offending character.
std::vector<long long> parse_ints(const std::string& line, int line_no,
                                  std::size_t count) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (out.size() < count) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size())
      throw ParseError("expected " + std::to_string(count) +
                           " integers, found " + std::to_string(out.size()),
                       line_no, static_cast<int>(i) + 1);
    if (!std::isdigit(static_cast<unsigned char>(line[i])))
      throw ParseError(std::string("unexpected character '") + line[i] + "'",
                       line_no, static_cast<int>(i) + 1);
    long long value = 0;
    const std::size_t start = i;
    while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) {
      value = value * 10 + (line[i] - '0');
      if (value > (1LL << 40))
        throw ParseError("integer too large", line_no,
                         static_cast<int>(start) + 1);
      ++i;
    }
    out.push_back(value);
  }
  while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
  if (i < line.size() && line[i] != '#' && line[i] != '\r')
    throw ParseError(std::string("trailing characters after ") +
                         std::to_string(count) + " integers",
                     line_no, static_cast<int>(i) + 1);
  return out;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  long long n = -1, m = -1;
  std::vector<Edge> edges;

  while (std::getline(in, line)) {
    ++line_no;
    if (is_comment_or_blank(line)) continue;
    if (n < 0) {
      const auto header = parse_ints(line, line_no, 2);
      n = header[0];
      m = header[1];
      if (n < 1) throw ParseError("vertex count must be >= 1", line_no, 1);
      edges.reserve(static_cast<std::size_t>(m));
      continue;
    }
    if (static_cast<long long>(edges.size()) == m)
      throw ParseError("more than the declared " + std::to_string(m) +
                           " edges",
                       line_no, 1);
    const auto pair = parse_ints(line, line_no, 2);
    long long u = pair[0], v = pair[1];
    if (u >= n || v >= n)
      throw ParseError("edge endpoint out of range [0," + std::to_string(n) +
                           ")",
                       line_no, 1);
    if (u == v) throw ParseError("self-loop", line_no, 1);
    if (u > v) std::swap(u, v);
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (n < 0) throw ParseError("missing 'n m' header", line_no + 1, 1);
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError("declared " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()),
                     line_no + 1, 1);
  try {
    return Graph(static_cast<int>(n), edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), line_no, 1);
  }
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.universe() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  try {
    return read_edge_list(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), e.line(), e.column());
  }
}

void save_edge_list(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open file for writing: " + path);
  write_edge_list(out, g);
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace phylocover
