#include "wiener/transforms.hpp"

#include <string>

#include "wiener/graph_ops.hpp"

namespace wiener {

namespace {

void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g)) {
    throw DisconnectedGraphError(std::string(what) + ": input graph is disconnected");
  }
}

void require_vertex(const Graph& g, Vertex v, const char* what) {
  if (v < 0 || v >= g.order()) {
    throw VertexRangeError(std::string(what) + ": vertex " + std::to_string(v) + " out of range");
  }
}

SurgeryResult measured(Graph before, Graph after) {
  std::int64_t wb = wiener(before);
  std::int64_t wa = wiener(after);
  return {std::move(before), std::move(after), wb, wa};
}

}  // namespace

SurgeryResult add_edge_surgery(const Graph& g, Vertex u, Vertex v) {
  require_vertex(g, u, "add_edge_surgery");
  require_vertex(g, v, "add_edge_surgery");
  require_connected(g, "add_edge_surgery");
  if (u == v) {
    throw SurgeryError("add_edge_surgery: self-loop requested at vertex " + std::to_string(u));
  }
  if (g.has_edge(u, v)) {
    throw SurgeryError("add_edge_surgery: vertices " + std::to_string(u) + " and " +
                       std::to_string(v) + " are already adjacent");
  }
  Graph after = g;
  after.add_edge(u, v);
  return measured(g, std::move(after));
}

SurgeryResult graft_step(const Graph& base, Vertex v, int k, int l) {
  require_vertex(base, v, "graft_step");
  require_connected(base, "graft_step");
  if (base.order() < 2) {
    throw SurgeryError("graft_step: base graph needs at least 2 vertices");
  }
  if (k < 1) {
    throw SurgeryError("graft_step: k must be >= 1");
  }
  if (k > l) {
    throw SurgeryError("graft_step: requires k <= l (got k=" + std::to_string(k) +
                       ", l=" + std::to_string(l) + ")");
  }
  const int n = base.order();
  Graph before = attach_path(attach_path(base, v, k), v, l);
  auto p_vertex = [&](int i) { return i == 0 ? v : n + i - 1; };  // v_i on the k-path
  const Vertex u_last = n + k + l - 1;                             // u_l
  Graph after = before;
  after.remove_edge(p_vertex(k - 1), p_vertex(k));
  after.add_edge(u_last, p_vertex(k));
  return measured(std::move(before), std::move(after));
}

ComponentMove move_component(const Graph& h, Vertex u, Vertex v, const Graph& x_part, Vertex x,
                             const Graph& y_part, Vertex y) {
  if (h.order() < 2 || x_part.order() < 2 || y_part.order() < 2) {
    throw SurgeryError("move_component: every part needs at least 2 vertices");
  }
  require_vertex(h, u, "move_component");
  require_vertex(h, v, "move_component");
  require_vertex(x_part, x, "move_component");
  require_vertex(y_part, y, "move_component");
  require_connected(h, "move_component");
  require_connected(x_part, "move_component");
  require_connected(y_part, "move_component");
  if (u == v) {
    throw SurgeryError("move_component: u and v must be distinct");
  }
  auto glue_both = [&](Vertex at_x, Vertex at_y) {
    Graph with_x = identify(h, at_x, x_part, x).graph;
    return identify(with_x, at_y, y_part, y).graph;
  };
  return {glue_both(u, v), glue_both(u, u), glue_both(v, v)};
}

PendantMove move_pendants(const Graph& g, Vertex u, Vertex v, int n1, int n2) {
  require_vertex(g, u, "move_pendants");
  require_vertex(g, v, "move_pendants");
  require_connected(g, "move_pendants");
  if (g.order() < 2) {
    throw SurgeryError("move_pendants: graph needs at least 2 vertices");
  }
  if (n1 < 1 || n2 < 1) {
    throw SurgeryError("move_pendants: n1 and n2 must both be >= 1");
  }
  if (u == v) {
    throw SurgeryError("move_pendants: u and v must be distinct");
  }
  return {attach_pendants(attach_pendants(g, u, n1), v, n2), attach_pendants(g, u, n1 + n2),
          attach_pendants(g, v, n1 + n2)};
}

SurgeryResult merge_paths(const Graph& g, Vertex u, Vertex v, int l, int k) {
  require_vertex(g, u, "merge_paths");
  require_vertex(g, v, "merge_paths");
  require_connected(g, "merge_paths");
  if (g.order() < 3) {
    throw SurgeryError("merge_paths: graph needs at least 3 vertices");
  }
  if (l < 2 || k < 2) {
    throw SurgeryError("merge_paths: path orders l and k must be >= 2");
  }
  if (is_path_between(g, u, v)) {
    throw SurgeryError("merge_paths: graph is exactly the u-v path");
  }
  if (transmission(g, u) < transmission(g, v)) {
    throw SurgeryError("merge_paths: needs D(u) >= D(v); orient u and v accordingly");
  }
  Graph before = attach_path(attach_path(g, u, l - 1), v, k - 1);
  Graph after = attach_path(g, u, l + k - 2);
  return measured(std::move(before), std::move(after));
}

SurgeryResult edge_surgery(const Graph& g, std::span<const Edge> remove,
                           std::span<const Edge> add) {
  require_connected(g, "edge_surgery");
  Graph after = g;
  for (const Edge& e : remove) {
    require_vertex(g, e.u, "edge_surgery");
    require_vertex(g, e.v, "edge_surgery");
    if (e.u == e.v || !after.has_edge(e.u, e.v)) {
      throw SurgeryError("edge_surgery: cannot remove missing edge {" + std::to_string(e.u) +
                         "," + std::to_string(e.v) + "}");
    }
    after.remove_edge(e.u, e.v);
  }
  for (const Edge& e : add) {
    require_vertex(g, e.u, "edge_surgery");
    require_vertex(g, e.v, "edge_surgery");
    if (e.u == e.v) {
      throw SurgeryError("edge_surgery: malformed edge {" + std::to_string(e.u) + "," +
                         std::to_string(e.v) + "}");
    }
    if (after.has_edge(e.u, e.v)) {
      throw SurgeryError("edge_surgery: edge {" + std::to_string(e.u) + "," +
                         std::to_string(e.v) + "} already present");
    }
    after.add_edge(e.u, e.v);
  }
  if (!is_connected(after)) {
    throw DisconnectedGraphError("edge_surgery: result is disconnected");
  }
  return measured(g, std::move(after));
}

}  // namespace wiener
