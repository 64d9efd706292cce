#pragma once

#include <span>
#include <utility>
#include <vector>

#include "indcover/vertex_set.hpp"

namespace indcover {

using Edge = std::pair<int, int>;

/// Per-vertex nonnegative integers: list sizes f, demands g, budgets.
using DegreeTable = std::vector<int>;

/// Simple undirected graph on vertices 0..n-1 with bitmask adjacency.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges);

  /// Throws ArgumentError on self-loops or out-of-range endpoints. Re-adding is a no-op.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  int order() const { return n_; }
  int size() const;
  VertexSet vertices() const { return VertexSet::range(n_); }
  VertexSet neighbors(int v) const { return adj_[v]; }
  bool has_edge(int u, int v) const { return adj_[u].contains(v); }
  int degree(int v) const { return adj_[v].size(); }
  int degree_in(int v, VertexSet within) const { return (adj_[v] & within).size(); }
  /// Number of edges of the induced subgraph on `within`.
  int edges_within(VertexSet within) const;
  bool is_independent(VertexSet s) const;
  /// Union of neighborhoods of `s`, minus `s`.
  VertexSet boundary(VertexSet s) const;

  /// Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;
  DegreeTable degrees() const;

  Graph complement() const;
  /// Induced subgraph relabelled 0..|s|-1 in increasing order of parent label.
  Graph induced(VertexSet s) const;
  Graph without_vertex(int v) const { return induced(vertices() - VertexSet::single(v)); }

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<VertexSet> adj_;
};

/// d0(v) = d_G(v).
inline DegreeTable degree_table(const Graph& g) { return g.degrees(); }

}  // namespace indcover
