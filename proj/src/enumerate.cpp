#include <array>
#include <string>

#include "wiener/search.hpp"

namespace wiener {

namespace {

void check_range(int n, int lo, int hi, const char* what) {
  if (n < lo || n > hi) {
    throw SearchRangeError(std::string(what) + " supports " + std::to_string(lo) + " <= n <= " +
                           std::to_string(hi) + ", got " + std::to_string(n));
  }
}

}  // namespace

std::uint64_t edge_mask_count(int n) {
  check_range(n, 1, 11, "edge-mask enumeration");
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
  Graph g(n);
  int bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      if ((mask >> bit) & 1U) {
        g.add_edge(i, j);
      }
    }
  }
  return g;
}

std::uint64_t prufer_count(int n) {
  check_range(n, 2, 12, "Prüfer enumeration");
  std::uint64_t count = 1;
  for (int i = 0; i < n - 2; ++i) {
    count *= static_cast<std::uint64_t>(n);
  }
  return count;
}

Graph tree_from_prufer_rank(int n, std::uint64_t rank) {
  Graph g(n);
  if (n == 2) {
    g.add_edge(0, 1);
    return g;
  }
  std::array<int, 16> seq{};
  std::array<int, 16> degree{};
  degree.fill(1);
  for (int i = n - 3; i >= 0; --i) {
    seq[static_cast<std::size_t>(i)] = static_cast<int>(rank % static_cast<std::uint64_t>(n));
    rank /= static_cast<std::uint64_t>(n);
    ++degree[static_cast<std::size_t>(seq[static_cast<std::size_t>(i)])];
  }
  for (int i = 0; i < n - 2; ++i) {
    const int a = seq[static_cast<std::size_t>(i)];
    for (Vertex leaf = 0; leaf < n; ++leaf) {
      if (degree[static_cast<std::size_t>(leaf)] == 1) {
        g.add_edge(leaf, a);
        --degree[static_cast<std::size_t>(leaf)];
        --degree[static_cast<std::size_t>(a)];
        break;
      }
    }
  }
  Vertex last = -1;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[static_cast<std::size_t>(v)] == 1) {
      if (last < 0) {
        last = v;
      } else {
        g.add_edge(last, v);
        break;
      }
    }
  }
  return g;
}

void enumerate_connected(int n, const std::function<void(const Graph&)>& visit) {
  check_range(n, 3, 8, "connected-graph enumeration");
  const std::uint64_t total = edge_mask_count(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Graph g = graph_from_edge_mask(n, mask);
    if (is_connected(g)) {
      visit(g);
    }
  }
}

void enumerate_trees(int n, const std::function<void(const Graph&)>& visit) {
  check_range(n, 2, 10, "tree enumeration");
  const std::uint64_t total = prufer_count(n);
  for (std::uint64_t rank = 0; rank < total; ++rank) {
    visit(tree_from_prufer_rank(n, rank));
  }
}

}  // namespace wiener
