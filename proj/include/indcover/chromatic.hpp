#pragma once

#include "indcover/graph.hpp"

namespace indcover {

inline constexpr int kMaxChromaticOrder = 12;

/// Exact, by backtracking with colours introduced in order. Throws SizeError above 12 vertices.
int chromatic_number(const Graph& g);

enum class Criticality {
  vertex,  ///< chi(g - v) < k for every vertex v
  edge,    ///< additionally chi(g - e) < k for every edge e
};

/// chi(g) = k and the deletions named by `mode` all lower it.
bool is_k_critical(const Graph& g, int k, Criticality mode = Criticality::vertex);

}  // namespace indcover
