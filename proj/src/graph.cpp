#include "wiener/graph.hpp"

#include <algorithm>

namespace wiener {

std::vector<Vertex> members(VertexSet s) {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(set_size(s)));
  while (s != 0) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

Graph::Graph(int n) : n_(n) {
  if (n < 1 || n > kMaxVertices) {
    throw UnsupportedSizeError("graph order must be in [1, 64], got " + std::to_string(n));
  }
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) {
    add_edge(e.u, e.v);
  }
}

int Graph::size() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) {
    twice += set_size(adj_[static_cast<std::size_t>(v)]);
  }
  return twice / 2;
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) {
    throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  }
  adj_[static_cast<std::size_t>(u)] |= singleton(v);
  adj_[static_cast<std::size_t>(v)] |= singleton(u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  adj_[static_cast<std::size_t>(u)] &= ~singleton(v);
  adj_[static_cast<std::size_t>(v)] &= ~singleton(u);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u) {
    VertexSet higher = adj_[static_cast<std::size_t>(u)] & ~first_n(u + 1);
    for (Vertex v : members(higher)) {
      out.push_back({u, v});
    }
  }
  return out;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> out(static_cast<std::size_t>(n_));
  for (Vertex v = 0; v < n_; ++v) {
    out[static_cast<std::size_t>(v)] = set_size(adj_[static_cast<std::size_t>(v)]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.n_ == b.n_ && std::equal(a.adj_.begin(), a.adj_.begin() + a.n_, b.adj_.begin());
}

namespace {

// Union of neighbourhoods of every vertex in `frontier`.
VertexSet expand(const Graph& g, VertexSet frontier) {
  VertexSet next = 0;
  while (frontier != 0) {
    next |= g.neighbors(std::countr_zero(frontier));
    frontier &= frontier - 1;
  }
  return next;
}

VertexSet reachable_from(const Graph& g, Vertex source) {
  VertexSet seen = singleton(source);
  VertexSet frontier = seen;
  while (frontier != 0) {
    frontier = expand(g, frontier) & ~seen;
    seen |= frontier;
  }
  return seen;
}

void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g)) {
    throw DisconnectedGraphError(std::string(what) + " is undefined on a disconnected graph");
  }
}

// Level-synchronous BFS on bitsets; no allocation.
std::int64_t distance_sum(const Graph& g, Vertex source) {
  VertexSet seen = singleton(source);
  VertexSet frontier = seen;
  std::int64_t sum = 0;
  for (std::int64_t depth = 1; frontier != 0; ++depth) {
    frontier = expand(g, frontier) & ~seen;
    seen |= frontier;
    sum += depth * set_size(frontier);
  }
  return sum;
}

}  // namespace

DistanceRow distances_from(const Graph& g, Vertex source) {
  g.check_vertex(source);
  DistanceRow row{source, std::vector<int>(static_cast<std::size_t>(g.order()), kUnreachable)};
  VertexSet seen = singleton(source);
  VertexSet frontier = seen;
  for (int depth = 0; frontier != 0; ++depth) {
    for (Vertex v : members(frontier)) {
      row.dist[static_cast<std::size_t>(v)] = depth;
    }
    frontier = expand(g, frontier) & ~seen;
    seen |= frontier;
  }
  return row;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) {
    return false;
  }
  return reachable_from(g, 0) == g.vertices();
}

std::int64_t transmission(const Graph& g, Vertex v) {
  g.check_vertex(v);
  require_connected(g, "transmission");
  return distance_sum(g, v);
}

std::int64_t wiener(const Graph& g) {
  require_connected(g, "Wiener index");
  std::int64_t total = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    total += distance_sum(g, v);
  }
  return total / 2;
}

VertexSet pendant_vertices(const Graph& g) {
  VertexSet out = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) {
      out |= singleton(v);
    }
  }
  return out;
}

namespace {

struct LowpointState {
  const Graph& g;
  std::array<int, kMaxVertices> disc{};
  std::array<int, kMaxVertices> low{};
  int clock = 0;
  VertexSet cuts = 0;

  void visit(Vertex v, Vertex parent) {
    disc[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = ++clock;
    int children = 0;
    for (Vertex w : members(g.neighbors(v))) {
      if (disc[static_cast<std::size_t>(w)] == 0) {
        ++children;
        visit(w, v);
        low[static_cast<std::size_t>(v)] =
            std::min(low[static_cast<std::size_t>(v)], low[static_cast<std::size_t>(w)]);
        if (parent >= 0 && low[static_cast<std::size_t>(w)] >= disc[static_cast<std::size_t>(v)]) {
          cuts |= singleton(v);
        }
      } else if (w != parent) {
        low[static_cast<std::size_t>(v)] =
            std::min(low[static_cast<std::size_t>(v)], disc[static_cast<std::size_t>(w)]);
      }
    }
    if (parent < 0 && children >= 2) {
      cuts |= singleton(v);
    }
  }
};

}  // namespace

VertexSet cut_vertices(const Graph& g) {
  require_connected(g, "cut-vertex analysis");
  LowpointState state{g};
  state.visit(0, -1);
  return state.cuts;
}

}  // namespace wiener
