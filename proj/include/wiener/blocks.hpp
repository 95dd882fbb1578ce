#pragma once

#include <vector>

#include "wiener/graph.hpp"

namespace wiener {

/// Two blocks sharing a cut vertex.
struct BlockLink {
  int first = 0;
  int second = 0;
  Vertex cut = 0;
  friend bool operator==(const BlockLink&, const BlockLink&) = default;
};

/// Maximal 2-connected pieces of a connected graph; a bridge is a 2-vertex block.
/// Blocks are sorted by their vertex bitset so the numbering is deterministic.
struct BlockDecomposition {
  std::vector<VertexSet> blocks;
  VertexSet cut_vertices = 0;
  std::vector<BlockLink> block_adjacency;

  std::vector<int> blocks_containing(Vertex v) const;
  /// A pendant block holds exactly one cut vertex of the whole graph.
  bool is_pendant_block(int index) const;
  bool is_complete_block(const Graph& g, int index) const;
};

BlockDecomposition block_decomposition(const Graph& g);

}  // namespace wiener
