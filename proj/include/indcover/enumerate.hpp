#pragma once

#include <functional>
#include <vector>

#include "indcover/graph.hpp"

namespace indcover {

/// Largest order enumerate_graphs accepts.
inline constexpr int kMaxEnumerateOrder = 8;
/// Largest order enumerate_hereditary accepts.
inline constexpr int kMaxHereditaryOrder = 10;

/// Canonical relabeling: isomorphic graphs map to identical graphs.
/// Individualization-refinement with twin pruning; exponential in the worst case.
Graph canonical_form(const Graph& g);

/// One representative (in canonical form) per isomorphism class on exactly n vertices,
/// sorted by edge count then graph6. Throws SizeError for n > 8.
std::vector<Graph> enumerate_graphs(int n, bool connected_only);

/// Every isomorphism class on exactly n vertices satisfying `keep`. `keep` must be
/// hereditary (closed under deleting a vertex); classes are grown one vertex at a time and
/// pruned at every level. Throws SizeError for n > 10.
std::vector<Graph> enumerate_hereditary(int n, bool connected_only,
                                        const std::function<bool(const Graph&)>& keep);

}  // namespace indcover
