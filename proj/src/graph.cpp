#include "indcover/graph.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "indcover/errors.hpp"

namespace indcover {

bool lex_less(VertexSet a, VertexSet b) {
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
    if (*ia != *ib) return *ia < *ib;
  }
  return ia == a.end() && ib != b.end();
}

std::string to_string(VertexSet s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int v : s) {
    if (!first) out << ',';
    out << v;
    first = false;
  }
  out << '}';
  return out.str();
}

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw ArgumentError("vertex count " + std::to_string(n) + " outside [0, 64]");
  }
  adj_.assign(static_cast<std::size_t>(n), VertexSet{});
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw ArgumentError("vertex " + std::to_string(v) + " out of range for order " +
                        std::to_string(n_));
  }
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw ArgumentError("self-loop at vertex " + std::to_string(u));
  adj_[u].insert(v);
  adj_[v].insert(u);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[u].erase(v);
  adj_[v].erase(u);
}

int Graph::size() const {
  int twice = 0;
  for (const auto& a : adj_) twice += a.size();
  return twice / 2;
}

int Graph::edges_within(VertexSet within) const {
  int twice = 0;
  for (int v : within) twice += degree_in(v, within);
  return twice / 2;
}

bool Graph::is_independent(VertexSet s) const {
  for (int v : s) {
    if (adj_[v].intersects(s)) return false;
  }
  return true;
}

VertexSet Graph::boundary(VertexSet s) const {
  VertexSet out;
  for (int v : s) out |= adj_[v];
  return out - s;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for (int v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

DegreeTable Graph::degrees() const {
  DegreeTable d(static_cast<std::size_t>(n_));
  for (int v = 0; v < n_; ++v) d[v] = degree(v);
  return d;
}

Graph Graph::complement() const {
  Graph c(n_);
  const VertexSet all = vertices();
  for (int v = 0; v < n_; ++v) c.adj_[v] = all - adj_[v] - VertexSet::single(v);
  return c;
}

Graph Graph::induced(VertexSet s) const {
  std::vector<int> label(static_cast<std::size_t>(n_), -1);
  int next = 0;
  for (int v : s) {
    check_vertex(v);
    label[v] = next++;
  }
  Graph h(next);
  for (int v : s) {
    for (int w : adj_[v] & s) h.adj_[label[v]].insert(label[w]);
  }
  return h;
}

}  // namespace indcover
