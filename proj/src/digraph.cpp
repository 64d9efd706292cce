#include "indcover/digraph.hpp"

#include <algorithm>
#include <string>

#include "indcover/errors.hpp"

namespace indcover {

Digraph::Digraph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw ArgumentError("vertex count " + std::to_string(n) + " outside [0, 64]");
  }
  const auto size = static_cast<std::size_t>(n);
  out_.assign(size, VertexSet{});
  in_.assign(size, VertexSet{});
  out_degree_.assign(size, 0);
  in_degree_.assign(size, 0);
}

Digraph::Digraph(int n, std::initializer_list<Arc> arcs) : Digraph(n) {
  for (auto [u, v] : arcs) add_arc(u, v);
}

void Digraph::add_arc(int from, int to) {
  if (from < 0 || from >= n_ || to < 0 || to >= n_) {
    throw ArgumentError("arc " + std::to_string(from) + "->" + std::to_string(to) +
                        " out of range for order " + std::to_string(n_));
  }
  if (from == to) throw ArgumentError("self-arc at vertex " + std::to_string(from));
  arcs_.emplace_back(from, to);
  out_[from].insert(to);
  in_[to].insert(from);
  ++out_degree_[from];
  ++in_degree_[to];
}

int Digraph::out_degree_in(int v, VertexSet within) const {
  int d = 0;
  for (auto [a, b] : arcs_) {
    if (a == v && within.contains(b)) ++d;
  }
  return d;
}

int Digraph::multiplicity(int from, int to) const {
  return static_cast<int>(std::count(arcs_.begin(), arcs_.end(), Arc{from, to}));
}

bool Digraph::is_independent(VertexSet s) const {
  for (int v : s) {
    if (adjacent(v).intersects(s)) return false;
  }
  return true;
}

Graph Digraph::underlying() const {
  Graph g(n_);
  for (auto [u, v] : arcs_) g.add_edge(u, v);
  return g;
}

bool Digraph::covers(const Graph& g) const {
  if (g.order() != n_) return false;
  for (auto [u, v] : g.edges()) {
    if (!adjacent(u).contains(v)) return false;
  }
  return true;
}

Digraph Digraph::induced(VertexSet s) const {
  std::vector<int> label(static_cast<std::size_t>(n_), -1);
  int next = 0;
  for (int v : s) label[v] = next++;
  Digraph d(next);
  for (auto [u, v] : arcs_) {
    if (s.contains(u) && s.contains(v)) d.add_arc(label[u], label[v]);
  }
  return d;
}

bool Digraph::operator==(const Digraph& other) const {
  if (n_ != other.n_) return false;
  auto a = arcs_;
  auto b = other.arcs_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

Digraph orientation_from_bits(const Graph& g, std::uint64_t reversed) {
  Digraph d(g.order());
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    if ((reversed >> i) & 1U) {
      d.add_arc(v, u);
    } else {
      d.add_arc(u, v);
    }
  }
  return d;
}

}  // namespace indcover
