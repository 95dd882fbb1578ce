#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "wiener/graph.hpp"

namespace wiener {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Edge-list text: first data line "n m", then m lines "u v" (0-based).
// Lines starting with '#' are comments.
Graph read_edge_list(std::istream& in);
Graph read_edge_list(std::string_view text);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

// graph6 as published with nauty: N(n) followed by the upper triangle,
// column by column, six bits per printable byte. An optional ">>graph6<<"
// header and trailing newline are accepted on input.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

}  // namespace wiener
