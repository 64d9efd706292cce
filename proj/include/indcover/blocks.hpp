#pragma once

#include <vector>

#include "indcover/graph.hpp"

namespace indcover {

/// Blocks (maximal 2-connected subgraphs, bridges, isolated vertices) and cutvertices.
struct BlockTree {
  std::vector<VertexSet> blocks;  ///< ordered by smallest member, then by bits
  VertexSet cutvertices;

  /// Indices of the blocks containing v.
  std::vector<int> blocks_containing(int v) const;
};

/// Hopcroft–Tarjan biconnected components. Isolated vertices become singleton blocks.
BlockTree block_decomposition(const Graph& g);

/// True iff g is connected, has at least 3 vertices and no cutvertex.
bool is_two_connected(const Graph& g);

}  // namespace indcover
