#pragma once

#include <span>
#include <vector>

#include "wiener/graph.hpp"

namespace wiener {

/// Result of gluing a second graph onto a first: `map[x]` is where vertex x
/// of the second graph ended up.
struct Glued {
  Graph graph;
  std::vector<Vertex> map;
};

/// Identify vertex `w` of `h` with vertex `u` of `g`. Vertices of g keep their
/// labels; the remaining vertices of h follow in their original order.
Glued identify(const Graph& g, Vertex u, const Graph& h, Vertex w);

/// Hang a path of `length` new vertices off `v`; the new vertices are
/// n, n+1, ... in order of distance from v.
Graph attach_path(const Graph& g, Vertex v, int length);

/// Add `count` new pendant vertices adjacent to `v`.
Graph attach_pendants(const Graph& g, Vertex v, int count);

/// Graph with vertex `perm[v]` in place of v.
Graph relabel(const Graph& g, std::span<const Vertex> perm);

/// True when g is exactly a path whose two ends are u and v.
bool is_path_between(const Graph& g, Vertex u, Vertex v);

}  // namespace wiener
