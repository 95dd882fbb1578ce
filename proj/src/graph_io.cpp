#include "wiener/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace wiener {

namespace {

// Next non-blank, non-comment line; false at end of input.
bool next_data_line(std::istream& in, std::string& line, int& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') {
      continue;
    }
    return true;
  }
  return false;
}

std::string at_line(int line_no) { return " (line " + std::to_string(line_no) + ")"; }

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  if (!next_data_line(in, line, line_no)) {
    throw ParseError("edge list: missing header line 'n m'");
  }
  std::istringstream header(line);
  long long n = 0;
  long long m = 0;
  std::string extra;
  if (!(header >> n >> m) || (header >> extra)) {
    throw ParseError("edge list: header must be 'n m'" + at_line(line_no));
  }
  if (n < 1 || n > kMaxVertices) {
    throw UnsupportedSizeError("edge list: vertex count " + std::to_string(n) +
                               " outside [1, 64]");
  }
  if (m < 0 || m > n * (n - 1) / 2) {
    throw ParseError("edge list: impossible edge count " + std::to_string(m) + at_line(line_no));
  }
  Graph g(static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    if (!next_data_line(in, line, line_no)) {
      throw ParseError("edge list: expected " + std::to_string(m) + " edges, found " +
                       std::to_string(i));
    }
    std::istringstream row(line);
    long long u = 0;
    long long v = 0;
    if (!(row >> u >> v) || (row >> extra)) {
      throw ParseError("edge list: malformed edge" + at_line(line_no));
    }
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw ParseError("edge list: vertex id out of range" + at_line(line_no));
    }
    if (u == v) {
      throw ParseError("edge list: self-loop" + at_line(line_no));
    }
    if (g.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v))) {
      throw ParseError("edge list: repeated edge" + at_line(line_no));
    }
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (next_data_line(in, line, line_no)) {
    throw ParseError("edge list: trailing data after " + std::to_string(m) + " edges" +
                     at_line(line_no));
  }
  return g;
}

Graph read_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open edge-list file '" + path + "'");
  }
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (const Edge& e : edges) {
    out << e.u << ' ' << e.v << '\n';
  }
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0;
  int bits = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) {
    out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  }
  return out;
}

Graph from_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.starts_with(kHeader)) {
    text.remove_prefix(kHeader.size());
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (text.empty()) {
    throw ParseError("graph6: empty string");
  }
  for (char c : text) {
    if (c < 63 || c > 126) {
      throw ParseError("graph6: byte outside printable range 63..126");
    }
  }
  std::size_t pos = 0;
  long n = 0;
  if (text[0] != 126) {
    n = text[0] - 63;
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == 126) {
      throw ParseError("graph6: unsupported order encoding");
    }
    n = ((text[1] - 63L) << 12) | ((text[2] - 63L) << 6) | (text[3] - 63L);
    pos = 4;
  }
  if (n < 1 || n > kMaxVertices) {
    throw UnsupportedSizeError("graph6: order " + std::to_string(n) + " outside [1, 64]");
  }
  const std::size_t pair_bits = static_cast<std::size_t>(n * (n - 1) / 2);
  const std::size_t expected = (pair_bits + 5) / 6;
  if (text.size() - pos != expected) {
    throw ParseError("graph6: expected " + std::to_string(expected) + " data bytes, got " +
                     std::to_string(text.size() - pos));
  }
  Graph g(static_cast<int>(n));
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      int byte = text[pos + k / 6] - 63;
      if ((byte >> (5 - static_cast<int>(k % 6))) & 1) {
        g.add_edge(i, j);
      }
    }
  }
  // Padding bits must be zero.
  if (pair_bits % 6 != 0) {
    int last = text.back() - 63;
    int pad = static_cast<int>(6 - pair_bits % 6);
    if ((last & ((1 << pad) - 1)) != 0) {
      throw ParseError("graph6: non-zero padding bits");
    }
  }
  return g;
}

}  // namespace wiener
