#pragma once

#include <optional>
#include <vector>

#include "indcover/graph.hpp"

namespace indcover {

/// ||A,B|| = sum over v in A of |N(v) ∩ B|. Throws ArgumentError if A or B leaves V(g).
int cut_size(const Graph& g, VertexSet a, VertexSet b);

int max_degree(const Graph& g);
/// Minimum degree; 0 on the empty graph.
int min_degree(const Graph& g);

/// max over edges xy of d(x)+d(y). Throws UndefinedStatistic on edgeless graphs.
int ore_degree(const Graph& g);

/// Exact independence number of g[within] by branch and bound (exponential; n <= 16 intended).
int independence_number(const Graph& g, VertexSet within);
inline int independence_number(const Graph& g) { return independence_number(g, g.vertices()); }
/// A maximum independent set of g[within].
VertexSet maximum_independent_set(const Graph& g, VertexSet within);

int clique_number(const Graph& g);
bool contains_clique(const Graph& g, int k);
bool is_triangle_free(const Graph& g);

/// Vertex sets of the connected components of g[within], ordered by smallest member.
std::vector<VertexSet> components(const Graph& g, VertexSet within);
inline std::vector<VertexSet> components(const Graph& g) { return components(g, g.vertices()); }
bool is_connected(const Graph& g);

struct GraphStats {
  int max_degree = 0;
  int min_degree = 0;
  std::optional<int> ore_degree;  ///< absent on edgeless graphs
  int clique_number = 0;
  int independence_number = 0;
  int component_count = 0;
  bool triangle_free = true;
};

GraphStats graph_stats(const Graph& g);

}  // namespace indcover
