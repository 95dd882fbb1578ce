#include "wiener/graph_ops.hpp"

#include <algorithm>
#include <string>

namespace wiener {

namespace {

void require_room(int n) {
  if (n > kMaxVertices) {
    throw UnsupportedSizeError("construction would need " + std::to_string(n) +
                               " vertices; the limit is 64");
  }
}

Graph grown(const Graph& g, int extra) {
  require_room(g.order() + extra);
  Graph out(g.order() + extra);
  for (const Edge& e : g.edges()) {
    out.add_edge(e.u, e.v);
  }
  return out;
}

}  // namespace

Glued identify(const Graph& g, Vertex u, const Graph& h, Vertex w) {
  g.check_vertex(u);
  h.check_vertex(w);
  Glued out{grown(g, h.order() - 1), std::vector<Vertex>(static_cast<std::size_t>(h.order()))};
  Vertex next = g.order();
  for (Vertex x = 0; x < h.order(); ++x) {
    out.map[static_cast<std::size_t>(x)] = (x == w) ? u : next++;
  }
  for (const Edge& e : h.edges()) {
    out.graph.add_edge(out.map[static_cast<std::size_t>(e.u)],
                       out.map[static_cast<std::size_t>(e.v)]);
  }
  return out;
}

Graph attach_path(const Graph& g, Vertex v, int length) {
  g.check_vertex(v);
  if (length < 0) {
    throw std::invalid_argument("path length must be non-negative");
  }
  Graph out = grown(g, length);
  Vertex prev = v;
  for (int i = 0; i < length; ++i) {
    Vertex fresh = g.order() + i;
    out.add_edge(prev, fresh);
    prev = fresh;
  }
  return out;
}

Graph attach_pendants(const Graph& g, Vertex v, int count) {
  g.check_vertex(v);
  if (count < 0) {
    throw std::invalid_argument("pendant count must be non-negative");
  }
  Graph out = grown(g, count);
  for (int i = 0; i < count; ++i) {
    out.add_edge(v, g.order() + i);
  }
  return out;
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.order()) {
    throw std::invalid_argument("permutation length does not match graph order");
  }
  std::vector<bool> seen(perm.size(), false);
  for (Vertex p : perm) {
    if (p < 0 || p >= g.order() || seen[static_cast<std::size_t>(p)]) {
      throw std::invalid_argument("not a permutation of the vertex set");
    }
    seen[static_cast<std::size_t>(p)] = true;
  }
  Graph out(g.order());
  for (const Edge& e : g.edges()) {
    out.add_edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
  }
  return out;
}

bool is_path_between(const Graph& g, Vertex u, Vertex v) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (g.order() == 1) {
    return u == v;
  }
  if (u == v || g.size() != g.order() - 1 || !is_connected(g)) {
    return false;
  }
  for (Vertex x = 0; x < g.order(); ++x) {
    int want = (x == u || x == v) ? 1 : 2;
    if (g.degree(x) != want) {
      return false;
    }
  }
  return true;
}

}  // namespace wiener
