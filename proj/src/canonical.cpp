#include "wiener/canonical.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <utility>
#include <vector>

namespace wiener {

namespace {

void check_order(const Graph& g) {
  if (g.order() < 1 || g.order() > kMaxCanonicalOrder) {
    throw UnsupportedSizeError("isomorphism routines support 1..10 vertices, got " +
                               std::to_string(g.order()));
  }
}

constexpr int pair_bits(int n) { return n * (n - 1) / 2; }

// Equitable colour refinement starting from degrees. Colours are ranks of
// sorted signatures, so they do not depend on the input labelling.
std::vector<int> refine_colours(const Graph& g) {
  const int n = g.order();
  std::vector<int> colour(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    colour[static_cast<std::size_t>(v)] = g.degree(v);
  }
  int classes = -1;
  while (true) {
    std::vector<std::pair<std::vector<int>, Vertex>> sig(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
      auto& s = sig[static_cast<std::size_t>(v)];
      s.second = v;
      s.first.push_back(colour[static_cast<std::size_t>(v)]);
      std::vector<int> around;
      for (Vertex w : members(g.neighbors(v))) {
        around.push_back(colour[static_cast<std::size_t>(w)]);
      }
      std::sort(around.begin(), around.end());
      s.first.insert(s.first.end(), around.begin(), around.end());
    }
    std::sort(sig.begin(), sig.end());
    int rank = 0;
    for (std::size_t i = 0; i < sig.size(); ++i) {
      if (i > 0 && sig[i].first != sig[i - 1].first) {
        ++rank;
      }
      colour[static_cast<std::size_t>(sig[i].second)] = rank;
    }
    if (rank + 1 == classes) {
      return colour;
    }
    classes = rank + 1;
  }
}

struct CodeSearch {
  const Graph& g;
  int n;
  int total;
  std::vector<std::vector<Vertex>> cell_at;  // candidates for each position
  std::array<Vertex, kMaxCanonicalOrder> placed{};
  VertexSet used = 0;
  std::uint64_t best = 0;
  bool have_best = false;

  void run(int pos, std::uint64_t prefix) {
    if (pos == n) {
      if (!have_best || prefix < best) {
        best = prefix;
        have_best = true;
      }
      return;
    }
    const int width = pair_bits(pos + 1);
    for (Vertex v : cell_at[static_cast<std::size_t>(pos)]) {
      if (contains(used, v)) {
        continue;
      }
      std::uint64_t next = prefix;
      VertexSet nv = g.neighbors(v);
      for (int i = 0; i < pos; ++i) {
        next = (next << 1) | (contains(nv, placed[static_cast<std::size_t>(i)]) ? 1U : 0U);
      }
      if (have_best && next > (best >> (total - width))) {
        continue;
      }
      placed[static_cast<std::size_t>(pos)] = v;
      used |= singleton(v);
      run(pos + 1, next);
      used &= ~singleton(v);
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  check_order(g);
  const int n = g.order();
  std::vector<int> colour = refine_colours(g);
  std::vector<std::pair<int, Vertex>> by_colour;
  for (Vertex v = 0; v < n; ++v) {
    by_colour.emplace_back(colour[static_cast<std::size_t>(v)], v);
  }
  std::sort(by_colour.begin(), by_colour.end());

  CodeSearch search{g, n, pair_bits(n), {}, {}};
  search.cell_at.resize(static_cast<std::size_t>(n));
  for (int pos = 0; pos < n; ++pos) {
    int c = by_colour[static_cast<std::size_t>(pos)].first;
    for (const auto& [cc, v] : by_colour) {
      if (cc == c) {
        search.cell_at[static_cast<std::size_t>(pos)].push_back(v);
      }
    }
  }
  search.run(0, 0);
  return {n, search.best};
}

Graph from_canonical(const CanonicalForm& form) {
  if (form.n < 1 || form.n > kMaxCanonicalOrder) {
    throw UnsupportedSizeError("canonical form order out of range");
  }
  const int total = pair_bits(form.n);
  Graph g(form.n);
  int idx = 0;
  for (Vertex j = 1; j < form.n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++idx) {
      if ((form.code >> (total - 1 - idx)) & 1U) {
        g.add_edge(i, j);
      }
    }
  }
  return g;
}

Graph canonical_graph(const Graph& g) { return from_canonical(canonical_form(g)); }

bool are_isomorphic(const Graph& g, const Graph& h) {
  check_order(g);
  check_order(h);
  if (g.order() != h.order() || g.size() != h.size() ||
      g.degree_sequence() != h.degree_sequence()) {
    return false;
  }
  return canonical_form(g) == canonical_form(h);
}

}  // namespace wiener
