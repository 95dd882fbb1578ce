#pragma once

#include <compare>
#include <cstdint>

#include "wiener/graph.hpp"

namespace wiener {

/// Largest order accepted by the isomorphism routines. Upper triangles up to
/// n = 10 fit one 64-bit code.
inline constexpr int kMaxCanonicalOrder = 10;

/// Isomorphism-class key. `code` packs the upper triangle of the canonically
/// relabelled adjacency matrix, column by column (graph6 order), first pair in
/// the most significant used bit.
struct CanonicalForm {
  int n = 0;
  std::uint64_t code = 0;
  auto operator<=>(const CanonicalForm&) const = default;
};

/// Smallest code over all vertex orderings that respect a colour refinement
/// seeded by degree. The refinement is isomorphism-invariant, so equal forms
/// mean isomorphic graphs and vice versa.
CanonicalForm canonical_form(const Graph& g);

/// The graph whose code is `form.code`, i.e. the canonical representative.
Graph from_canonical(const CanonicalForm& form);

Graph canonical_graph(const Graph& g);

/// Degree-sequence pre-filter, then canonical-form comparison. Both orders
/// must be at most kMaxCanonicalOrder.
bool are_isomorphic(const Graph& g, const Graph& h);

}  // namespace wiener
