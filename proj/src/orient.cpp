#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "indcover/errors.hpp"
#include "indcover/orient.hpp"
#include "indcover/stats.hpp"

namespace indcover {

namespace {

// Dinic's algorithm on a small dense-ish network.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : adj_(static_cast<std::size_t>(nodes)) {}

  int add(int from, int to, int cap) {
    adj_[from].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({to, cap});
    adj_[to].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({from, 0});
    return static_cast<int>(arcs_.size()) - 2;
  }

  int max_flow(int s, int t) {
    int total = 0;
    while (levels(s, t)) {
      next_.assign(adj_.size(), 0);
      while (int pushed = push(s, t, std::numeric_limits<int>::max())) total += pushed;
    }
    return total;
  }

  int flow_on(int arc) const { return arcs_[arc ^ 1].cap; }

  /// Nodes that can reach t in the residual network.
  std::vector<bool> reaching(int t) const {
    std::vector<bool> seen(adj_.size(), false);
    std::deque<int> queue{t};
    seen[t] = true;
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      // y reaches x through residual arc y->x, i.e. the partner of x's arc to y has capacity.
      for (int id : adj_[x]) {
        const int y = arcs_[id].to;
        if (!seen[y] && arcs_[id ^ 1].cap > 0) {
          seen[y] = true;
          queue.push_back(y);
        }
      }
    }
    return seen;
  }

 private:
  struct FlowArc {
    int to;
    int cap;
  };

  bool levels(int s, int t) {
    level_.assign(adj_.size(), -1);
    std::deque<int> queue{s};
    level_[s] = 0;
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (int id : adj_[x]) {
        const auto& a = arcs_[id];
        if (a.cap > 0 && level_[a.to] < 0) {
          level_[a.to] = level_[x] + 1;
          queue.push_back(a.to);
        }
      }
    }
    return level_[t] >= 0;
  }

  int push(int x, int t, int limit) {
    if (x == t) return limit;
    for (auto& i = next_[x]; i < static_cast<int>(adj_[x].size()); ++i) {
      const int id = adj_[x][i];
      auto& a = arcs_[id];
      if (a.cap <= 0 || level_[a.to] != level_[x] + 1) continue;
      if (int got = push(a.to, t, std::min(limit, a.cap))) {
        a.cap -= got;
        arcs_[id ^ 1].cap += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<std::vector<int>> adj_;
  std::vector<FlowArc> arcs_;
  std::vector<int> level_;
  std::vector<int> next_;
};

}  // namespace

int orientation_deficiency(const Graph& g, const DegreeTable& demand, VertexSet x) {
  int need = 0;
  for (int v : x) need += demand[v];
  return need - g.edges_within(x) - cut_size(g, x, g.vertices() - x);
}

OrientationResult orient_with_indegrees(const Graph& g, const DegreeTable& demand) {
  if (static_cast<int>(demand.size()) != g.order()) {
    throw ArgumentError("demand table has " + std::to_string(demand.size()) +
                        " entries for a graph of order " + std::to_string(g.order()));
  }
  for (int v = 0; v < g.order(); ++v) {
    if (demand[v] < 0) throw ArgumentError("negative demand at vertex " + std::to_string(v));
  }

  const auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  const int n = g.order();
  const int source = 0;
  const int sink = m + n + 1;
  auto edge_node = [](int e) { return 1 + e; };
  auto vertex_node = [m](int v) { return 1 + m + v; };
  constexpr int kUnbounded = std::numeric_limits<int>::max() / 4;

  FlowNetwork net(m + n + 2);
  std::vector<std::pair<int, int>> head_arcs(static_cast<std::size_t>(m));
  for (int e = 0; e < m; ++e) {
    net.add(source, edge_node(e), 1);
    head_arcs[e].first = net.add(edge_node(e), vertex_node(edges[e].first), kUnbounded);
    head_arcs[e].second = net.add(edge_node(e), vertex_node(edges[e].second), kUnbounded);
  }
  int total_demand = 0;
  for (int v = 0; v < n; ++v) {
    if (demand[v] > 0) net.add(vertex_node(v), sink, demand[v]);
    total_demand += demand[v];
  }

  const int flow = net.max_flow(source, sink);
  OrientationResult out;
  if (flow == total_demand) {
    Digraph d(n);
    for (int e = 0; e < m; ++e) {
      auto [u, v] = edges[e];
      if (net.flow_on(head_arcs[e].first) > 0) {
        d.add_arc(v, u);
      } else {
        d.add_arc(u, v);
      }
    }
    out.orientation = std::move(d);
    return out;
  }
  const auto reach = net.reaching(sink);
  for (int v = 0; v < n; ++v) {
    if (reach[vertex_node(v)]) out.violating.insert(v);
  }
  out.deficiency = orientation_deficiency(g, demand, out.violating);
  return out;
}

OrientationResult build_kernel_perfect(const Graph& g, VertexSet a, const DegreeTable& f,
                                       VertexSet within) {
  if (static_cast<int>(f.size()) != g.order()) throw ArgumentError("f table size mismatch");
  if (!within.is_subset_of(g.vertices())) throw ArgumentError("vertex set out of range");
  if (!a.is_subset_of(within)) throw ArgumentError("A must lie inside the vertex set");
  if (!g.is_independent(a)) throw ArgumentError("A is not independent");
  for (int v : within) {
    if (f[v] > g.degree_in(v, within) + 1) {
      throw ArgumentError("f(" + std::to_string(v) + ") exceeds d(v)+1");
    }
  }

  // G_A on the parent labels: edges of g[within] with an end in A.
  Graph bipartite(g.order());
  for (int v : a) {
    for (int w : g.neighbors(v) & within) bipartite.add_edge(v, w);
  }
  DegreeTable demand(f.size(), 0);
  for (int v : within) demand[v] = g.degree_in(v, within) + 1 - f[v];

  OrientationResult out = orient_with_indegrees(bipartite, demand);
  if (!out.feasible()) return out;

  Digraph d = *out.orientation;
  const VertexSet b = within - a;
  for (int v : b) {
    for (int w : g.neighbors(v) & b) {
      if (v < w) d.add_double(v, w);
    }
  }
  out.orientation = std::move(d);
  return out;
}

}  // namespace indcover
