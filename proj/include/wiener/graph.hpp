#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace wiener {

inline constexpr int kMaxVertices = 64;

using Vertex = int;
/// Subset of {0..63}; bit v set means vertex v is a member.
using VertexSet = std::uint64_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

class VertexRangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Raised when an operation that needs a connected graph gets a disconnected one.
/// The Wiener index is undefined there, so this is never folded into a value.
class DisconnectedGraphError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class UnsupportedSizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr VertexSet singleton(Vertex v) { return VertexSet{1} << v; }
inline constexpr VertexSet first_n(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}
inline constexpr int set_size(VertexSet s) { return std::popcount(s); }
inline constexpr bool contains(VertexSet s, Vertex v) { return ((s >> v) & 1U) != 0; }

std::vector<Vertex> members(VertexSet s);

/// Undirected simple graph on vertices 0..n-1 with one neighbour word per vertex.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return n_; }
  int size() const;

  VertexSet vertices() const { return first_n(n_); }
  VertexSet neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
  }
  int degree(Vertex v) const { return set_size(neighbors(v)); }
  bool has_edge(Vertex u, Vertex v) const { return contains(neighbors(u), v); }

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  std::vector<Edge> edges() const;
  std::vector<int> degree_sequence() const;  // sorted ascending

  void check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) {
      throw VertexRangeError("vertex " + std::to_string(v) + " out of range for order " +
                             std::to_string(n_));
    }
  }

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  int n_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};
};

inline constexpr int kUnreachable = -1;

struct DistanceRow {
  Vertex source = 0;
  std::vector<int> dist;  // kUnreachable for other components
};

DistanceRow distances_from(const Graph& g, Vertex source);

bool is_connected(const Graph& g);

/// Sum of distances from v; requires g connected.
std::int64_t transmission(const Graph& g, Vertex v);

/// Sum of distances over unordered pairs; requires g connected.
std::int64_t wiener(const Graph& g);

VertexSet pendant_vertices(const Graph& g);

/// Articulation points via the lowpoint DFS; requires g connected.
VertexSet cut_vertices(const Graph& g);

}  // namespace wiener
