#include "indcover/stats.hpp"

#include <algorithm>
#include <string>

#include "indcover/errors.hpp"

namespace indcover {

namespace {

void check_subset(const Graph& g, VertexSet s, const char* name) {
  if (!s.is_subset_of(g.vertices())) {
    throw ArgumentError(std::string(name) + " contains a vertex outside 0.." +
                        std::to_string(g.order() - 1));
  }
}

// Branch on a vertex of maximum degree in the candidate set; vertices isolated in the
// candidate set are always taken.
class MaxIndependent {
 public:
  explicit MaxIndependent(const Graph& g) : g_(g) {}

  VertexSet solve(VertexSet candidates) {
    best_ = VertexSet{};
    search(VertexSet{}, candidates);
    return best_;
  }

 private:
  void search(VertexSet chosen, VertexSet cand) {
    VertexSet forced;
    for (int v : cand) {
      if (!g_.neighbors(v).intersects(cand)) forced.insert(v);
    }
    chosen |= forced;
    cand -= forced;
    if (chosen.size() + cand.size() <= best_.size()) return;
    if (cand.empty()) {
      best_ = chosen;
      return;
    }
    int pivot = cand.first();
    int pivot_deg = -1;
    for (int v : cand) {
      int d = g_.degree_in(v, cand);
      if (d > pivot_deg) {
        pivot = v;
        pivot_deg = d;
      }
    }
    search(chosen | VertexSet::single(pivot), cand - g_.neighbors(pivot) - VertexSet::single(pivot));
    search(chosen, cand - VertexSet::single(pivot));
  }

  const Graph& g_;
  VertexSet best_;
};

}  // namespace

int cut_size(const Graph& g, VertexSet a, VertexSet b) {
  check_subset(g, a, "A");
  check_subset(g, b, "B");
  int total = 0;
  for (int v : a) total += g.degree_in(v, b);
  return total;
}

int max_degree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

int min_degree(const Graph& g) {
  if (g.order() == 0) return 0;
  int best = g.degree(0);
  for (int v = 1; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

int ore_degree(const Graph& g) {
  int best = -1;
  for (auto [u, v] : g.edges()) best = std::max(best, g.degree(u) + g.degree(v));
  if (best < 0) throw UndefinedStatistic("Ore-degree of an edgeless graph");
  return best;
}

VertexSet maximum_independent_set(const Graph& g, VertexSet within) {
  check_subset(g, within, "vertex set");
  return MaxIndependent(g).solve(within);
}

int independence_number(const Graph& g, VertexSet within) {
  return maximum_independent_set(g, within).size();
}

int clique_number(const Graph& g) { return independence_number(g.complement()); }

bool contains_clique(const Graph& g, int k) { return k <= 0 || clique_number(g) >= k; }

bool is_triangle_free(const Graph& g) {
  for (auto [u, v] : g.edges()) {
    if (g.neighbors(u).intersects(g.neighbors(v))) return false;
  }
  return true;
}

std::vector<VertexSet> components(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet unseen = within;
  while (!unseen.empty()) {
    VertexSet comp = VertexSet::single(unseen.first());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier) next |= g.neighbors(v) & within;
      frontier = next - comp;
      comp |= frontier;
    }
    out.push_back(comp);
    unseen -= comp;
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

GraphStats graph_stats(const Graph& g) {
  GraphStats s;
  s.max_degree = max_degree(g);
  s.min_degree = min_degree(g);
  if (g.size() > 0) s.ore_degree = ore_degree(g);
  s.clique_number = clique_number(g);
  s.independence_number = independence_number(g);
  s.component_count = static_cast<int>(components(g).size());
  s.triangle_free = is_triangle_free(g);
  return s;
}

}  // namespace indcover
