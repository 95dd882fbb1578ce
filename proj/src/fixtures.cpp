#include "wiener/fixtures.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <vector>

#include "wiener/families.hpp"
#include "wiener/graph_ops.hpp"
#include "wiener/transforms.hpp"

namespace wiener {

namespace {

constexpr std::array<std::string_view, 14> kIds{
    "edge-addition",  "attachment",        "grafting",   "component-move", "pendant-migration",
    "path-merge",     "dumbbell-vs-cycle", "dumbbell-shared-vertex", "pendant-transmission",
    "girth-three",    "dumbbell-order",    "leg-balancing", "pendant-block", "block-shift",
};

LemmaFixture make(std::string_view id, std::string description, std::int64_t before,
                  std::int64_t after, Relation expected, std::string quantity = "W") {
  return {std::string(id), std::move(description), std::move(quantity), before, after, expected};
}

LemmaFixture edge_addition(std::string_view id) {
  const SurgeryResult r = add_edge_surgery(build(FamilySpec::path(4)), 0, 3);
  return make(id, "P_4 plus the edge {0,3} (gives C_4)", r.w_before, r.w_after, Relation::Less);
}

LemmaFixture attachment(std::string_view id) {
  // Hang the same rooted path P_3 at the centre u = 1 and at the end v = 0
  // of P_4; the difference is exactly (|V(H)| - 1)(D(v) - D(u)).
  const Graph g = build(FamilySpec::path(4));
  const Graph h = build(FamilySpec::path(3));
  const std::int64_t at_u = wiener(identify(g, 1, h, 0).graph);
  const std::int64_t at_v = wiener(identify(g, 0, h, 0).graph);
  const std::int64_t predicted =
      at_u + (h.order() - 1) * (transmission(g, 0) - transmission(g, 1));
  return make(id, "P_3 hung at the end of P_4 vs at its centre; 'before' is the exact prediction",
              predicted, at_v, Relation::Equal);
}

LemmaFixture grafting(std::string_view id) {
  const SurgeryResult r = graft_step(build(FamilySpec::cycle(3)), 0, 1, 1);
  return make(id, "C_3 with paths of 1 and 1 at vertex 0, grafted to one path of 2",
              r.w_before, r.w_after, Relation::Greater);
}

LemmaFixture component_move(std::string_view id) {
  const Graph p2 = build(FamilySpec::path(2));
  const ComponentMove m = move_component(build(FamilySpec::path(3)), 0, 2, p2, 0, p2, 0);
  return make(id, "K_2 parts at both ends of P_3, consolidated at one end (best of the two)",
              wiener(m.original), std::min(wiener(m.at_u), wiener(m.at_v)), Relation::Less);
}

LemmaFixture pendant_migration(std::string_view id) {
  const PendantMove m = move_pendants(build(FamilySpec::cycle(3)), 0, 1, 2, 1);
  return make(id, "C_3 with 2 pendants at 0 and 1 at 1, all moved to one vertex (best of the two)",
              wiener(m.split), std::min(wiener(m.at_u), wiener(m.at_v)), Relation::Less);
}

LemmaFixture path_merge(std::string_view id) {
  const SurgeryResult r = merge_paths(build(FamilySpec::cycle(3)), 0, 1, 2, 2);
  return make(id, "C_3 with 2-vertex paths at 0 and 1, merged into a 3-vertex path at 0",
              r.w_before, r.w_after, Relation::Greater);
}

LemmaFixture dumbbell_vs_cycle(std::string_view id) {
  return make(id, "C_7 ('before') vs C_{3,3}^7 ('after')", wiener(build(FamilySpec::cycle(7))),
              wiener(build(FamilySpec::dumbbell(3, 3, 7))), Relation::GreaterOrEqual);
}

LemmaFixture dumbbell_shared_vertex(std::string_view id) {
  return make(id, "C_6 ('before') vs C_{3,4}^6, cycles sharing one vertex ('after')",
              wiener(build(FamilySpec::cycle(6))), wiener(build(FamilySpec::dumbbell(3, 4, 6))),
              Relation::Less);
}

LemmaFixture pendant_transmission(std::string_view id) {
  // U_l(7,4): cycle 0..3, tail 4,5,6 with pendant 6.
  const Graph g = build(FamilySpec::unicyclic_tail(7, 4));
  std::int64_t others = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 1) {
      others = std::max(others, transmission(g, v));
    }
  }
  const Vertex pendant = std::countr_zero(pendant_vertices(g));
  return make(id, "U_l(7,4): largest non-pendant transmission vs the pendant's", others,
              transmission(g, pendant), Relation::Greater, "D");
}

LemmaFixture girth_three(std::string_view id) {
  // Hang C_3 (rooted at a cycle vertex) at the pendant of U_l(6,5) and of U_l(6,3).
  const Graph root = build(FamilySpec::cycle(3));
  auto hung = [&](int g) {
    const Graph u = build(FamilySpec::unicyclic_tail(6, g));
    return wiener(identify(u, std::countr_zero(pendant_vertices(u)), root, 0).graph);
  };
  return make(id, "C_3 hung at the pendant of U_l(6,5) ('before') vs of U_l(6,3) ('after')",
              hung(5), hung(3), Relation::Greater);
}

LemmaFixture dumbbell_order(std::string_view id) {
  return make(id, "C_{4,4}^9 ('before') vs C_{3,3}^9 ('after')",
              wiener(build(FamilySpec::dumbbell(4, 4, 9))),
              wiener(build(FamilySpec::dumbbell(3, 3, 9))), Relation::Greater);
}

LemmaFixture leg_balancing(std::string_view id) {
  return make(id, "octopus K(3;8:4,2,2) rebalanced to K(3;8:3,3,2)",
              wiener(build(FamilySpec::octopus(8, {4, 2, 2}))),
              wiener(build(FamilySpec::octopus(8, {3, 3, 2}))), Relation::Less);
}

LemmaFixture pendant_block(std::string_view id) {
  // Pendant triangle {0,1,2} at cut vertex 0, which also lies in the block
  // {0,3}; 3 is a second cut vertex carrying the pendant 4.
  const Graph g(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {3, 4}});
  const std::array<Edge, 1> remove{{{1, 2}}};
  const std::array<Edge, 1> add{{{2, 3}}};
  const SurgeryResult r = edge_surgery(g, remove, add);
  return make(id, "pendant K_3 block with two cut vertices, rewired towards the neighbouring block",
              r.w_before, r.w_after, Relation::Less);
}

LemmaFixture block_shift(std::string_view id) {
  // Block chain {3,0} - {0,1,2} - {2,4,5} - {4,6,7} - {7,8} - {8,9}. The
  // triangle {0,1,2} is neither central nor pendant; 1 moves its edge from
  // the cut vertex 0 to the next block's non-shared vertices.
  const Graph g(10, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {2, 4}, {2, 5}, {4, 5}, {4, 6},
                     {4, 7}, {6, 7}, {7, 8}, {8, 9}});
  const std::array<Edge, 1> remove{{{0, 1}}};
  const std::array<Edge, 2> add{{{1, 4}, {1, 5}}};
  const SurgeryResult r = edge_surgery(g, remove, add);
  return make(id, "non-central triangle block shifted one block towards the centre",
              r.w_before, r.w_after, Relation::Less);
}

}  // namespace

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::Less:
      return "<";
    case Relation::Greater:
      return ">";
    case Relation::GreaterOrEqual:
      return ">=";
    case Relation::Equal:
      return "==";
  }
  return "?";
}

bool relation_holds(Relation r, std::int64_t after, std::int64_t before) {
  switch (r) {
    case Relation::Less:
      return after < before;
    case Relation::Greater:
      return after > before;
    case Relation::GreaterOrEqual:
      return after >= before;
    case Relation::Equal:
      return after == before;
  }
  return false;
}

std::span<const std::string_view> lemma_ids() { return kIds; }

std::optional<LemmaFixture> run_lemma_fixture(std::string_view id) {
  using Builder = LemmaFixture (*)(std::string_view);
  static constexpr std::array<Builder, 14> kBuilders{
      edge_addition,   attachment,        grafting,    component_move, pendant_migration,
      path_merge,      dumbbell_vs_cycle, dumbbell_shared_vertex, pendant_transmission,
      girth_three,     dumbbell_order,    leg_balancing, pendant_block, block_shift,
  };
  for (std::size_t i = 0; i < kIds.size(); ++i) {
    if (kIds[i] == id) {
      return kBuilders[i](id);
    }
  }
  return std::nullopt;
}

}  // namespace wiener
