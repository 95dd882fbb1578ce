#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "wiener/graph.hpp"

namespace wiener {

/// Precondition of a surgery does not hold. The operations never repair
/// their input (no swapping of arguments, no silent skips).
class SurgeryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SurgeryResult {
  Graph before;
  Graph after;
  std::int64_t w_before = 0;
  std::int64_t w_after = 0;
};

/// Join two non-adjacent vertices. The Wiener index strictly drops.
SurgeryResult add_edge_surgery(const Graph& g, Vertex u, Vertex v);

/// Hang paths v-v1-..-vk and v-u1-..-ul at v (new vertices v1..vk then
/// u1..ul), then move the last edge of the shorter path: drop {v_{k-1},v_k},
/// add {u_l,v_k}. Requires 1 <= k <= l; the Wiener index strictly grows.
SurgeryResult graft_step(const Graph& base, Vertex v, int k, int l);

/// `original` glues x_part at u and y_part at v of h; `at_u` glues both
/// parts at u; `at_v` glues both at v. At least one of the consolidated
/// graphs has a strictly smaller Wiener index than the original.
struct ComponentMove {
  Graph original;
  Graph at_u;
  Graph at_v;
};
ComponentMove move_component(const Graph& h, Vertex u, Vertex v, const Graph& x_part, Vertex x,
                             const Graph& y_part, Vertex y);

/// `split` has n1 pendants at u and n2 at v; `at_u` has all n1+n2 at u;
/// `at_v` all at v.
struct PendantMove {
  Graph split;
  Graph at_u;
  Graph at_v;
};
PendantMove move_pendants(const Graph& g, Vertex u, Vertex v, int n1, int n2);

/// before: paths of l and k vertices (counting u and v themselves) hang from
/// u and v; after: a single path of l+k-1 vertices hangs from u and nothing
/// extra from v. Requires l, k >= 2, |V(g)| >= 3, g not the u-v path and
/// D(u) >= D(v); the Wiener index then strictly grows.
SurgeryResult merge_paths(const Graph& g, Vertex u, Vertex v, int l, int k);

/// (g - remove) + add. Removed edges must exist, added ones must not, and
/// the result must stay connected. No inequality is implied.
SurgeryResult edge_surgery(const Graph& g, std::span<const Edge> remove, std::span<const Edge> add);

}  // namespace wiener
