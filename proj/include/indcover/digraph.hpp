#pragma once

#include <vector>

#include "indcover/graph.hpp"

namespace indcover {

using Arc = std::pair<int, int>;

/// Directed multigraph on 0..n-1. Parallel arcs and opposite pairs are allowed; self-arcs
/// are not.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);
  Digraph(int n, std::initializer_list<Arc> arcs);

  /// Throws ArgumentError on self-arcs or out-of-range endpoints.
  void add_arc(int from, int to);
  /// u->v and v->u.
  void add_double(int u, int v) {
    add_arc(u, v);
    add_arc(v, u);
  }

  int order() const { return n_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  VertexSet vertices() const { return VertexSet::range(n_); }

  int out_degree(int v) const { return out_degree_[v]; }
  int in_degree(int v) const { return in_degree_[v]; }
  /// Out-degree counting only arcs whose head lies in `within`.
  int out_degree_in(int v, VertexSet within) const;
  int multiplicity(int from, int to) const;

  /// Heads of arcs leaving v (multiplicity ignored).
  VertexSet out_neighbors(int v) const { return out_[v]; }
  VertexSet in_neighbors(int v) const { return in_[v]; }
  /// Vertices joined to v by an arc in either direction.
  VertexSet adjacent(int v) const { return out_[v] | in_[v]; }

  /// No arc joins two members of s.
  bool is_independent(VertexSet s) const;
  /// Underlying simple graph.
  Graph underlying() const;
  /// Every edge of g is carried by at least one arc (same vertex count required).
  bool covers(const Graph& g) const;
  /// Arcs with both ends in s, relabelled as in Graph::induced.
  Digraph induced(VertexSet s) const;

  bool operator==(const Digraph& other) const;

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
  std::vector<int> out_degree_;
  std::vector<int> in_degree_;
};

/// Orientation of g: edge e = edges()[i] runs low->high unless bit i of `reversed` is set.
Digraph orientation_from_bits(const Graph& g, std::uint64_t reversed);

}  // namespace indcover
