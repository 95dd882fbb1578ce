#include "wiener/blocks.hpp"

#include <algorithm>
#include <array>

namespace wiener {

std::vector<int> BlockDecomposition::blocks_containing(Vertex v) const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(blocks.size()); ++i) {
    if (contains(blocks[static_cast<std::size_t>(i)], v)) {
      out.push_back(i);
    }
  }
  return out;
}

bool BlockDecomposition::is_pendant_block(int index) const {
  return set_size(blocks.at(static_cast<std::size_t>(index)) & cut_vertices) == 1;
}

bool BlockDecomposition::is_complete_block(const Graph& g, int index) const {
  VertexSet block = blocks.at(static_cast<std::size_t>(index));
  for (Vertex v : members(block)) {
    if ((g.neighbors(v) & block) != (block & ~singleton(v))) {
      return false;
    }
  }
  return true;
}

namespace {

struct BlockState {
  const Graph& g;
  std::array<int, kMaxVertices> disc{};
  std::array<int, kMaxVertices> low{};
  int clock = 0;
  std::vector<Edge> stack{};
  std::vector<VertexSet> blocks{};

  void pop_block(Vertex v, Vertex w) {
    VertexSet block = 0;
    while (true) {
      Edge e = stack.back();
      stack.pop_back();
      block |= singleton(e.u) | singleton(e.v);
      if (e.u == v && e.v == w) {
        break;
      }
    }
    blocks.push_back(block);
  }

  void visit(Vertex v, Vertex parent) {
    auto vi = static_cast<std::size_t>(v);
    disc[vi] = low[vi] = ++clock;
    for (Vertex w : members(g.neighbors(v))) {
      auto wi = static_cast<std::size_t>(w);
      if (disc[wi] == 0) {
        stack.push_back({v, w});
        visit(w, v);
        low[vi] = std::min(low[vi], low[wi]);
        if (low[wi] >= disc[vi]) {
          pop_block(v, w);
        }
      } else if (w != parent && disc[wi] < disc[vi]) {
        stack.push_back({v, w});
        low[vi] = std::min(low[vi], disc[wi]);
      }
    }
  }
};

}  // namespace

BlockDecomposition block_decomposition(const Graph& g) {
  if (!is_connected(g)) {
    throw DisconnectedGraphError("block decomposition is undefined on a disconnected graph");
  }
  BlockDecomposition out;
  if (g.order() == 1) {
    out.blocks.push_back(singleton(0));
    return out;
  }
  BlockState state{g};
  state.visit(0, -1);
  out.blocks = std::move(state.blocks);
  std::sort(out.blocks.begin(), out.blocks.end());

  for (Vertex v = 0; v < g.order(); ++v) {
    if (out.blocks_containing(v).size() >= 2) {
      out.cut_vertices |= singleton(v);
    }
  }
  for (int i = 0; i < static_cast<int>(out.blocks.size()); ++i) {
    for (int j = i + 1; j < static_cast<int>(out.blocks.size()); ++j) {
      VertexSet shared = out.blocks[static_cast<std::size_t>(i)] &
                         out.blocks[static_cast<std::size_t>(j)];
      if (shared != 0) {
        out.block_adjacency.push_back({i, j, std::countr_zero(shared)});
      }
    }
  }
  return out;
}

}  // namespace wiener
