#include <string>

#include "indcover/chromatic.hpp"
#include "indcover/errors.hpp"

namespace indcover {

namespace {

class Colorer {
 public:
  Colorer(const Graph& g, int k) : g_(g), k_(k), color_(g.order(), -1) {}

  bool run() { return place(0, 0); }

 private:
  bool place(int v, int used) {
    if (v == g_.order()) return true;
    const int limit = std::min(k_, used + 1);
    for (int c = 0; c < limit; ++c) {
      bool clash = false;
      for (int w : g_.neighbors(v)) {
        if (w < v && color_[w] == c) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      color_[v] = c;
      if (place(v + 1, std::max(used, c + 1))) return true;
    }
    color_[v] = -1;
    return false;
  }

  const Graph& g_;
  int k_;
  std::vector<int> color_;
};

bool colorable(const Graph& g, int k) { return Colorer(g, k).run(); }

}  // namespace

int chromatic_number(const Graph& g) {
  if (g.order() > kMaxChromaticOrder) {
    throw SizeError("chromatic_number supports at most 12 vertices, got " +
                    std::to_string(g.order()));
  }
  int k = 0;
  while (!colorable(g, k)) ++k;
  return k;
}

bool is_k_critical(const Graph& g, int k, Criticality mode) {
  if (chromatic_number(g) != k) return false;
  for (int v = 0; v < g.order(); ++v) {
    if (chromatic_number(g.without_vertex(v)) >= k) return false;
  }
  if (mode == Criticality::edge) {
    for (auto [u, v] : g.edges()) {
      Graph h = g;
      h.remove_edge(u, v);
      if (chromatic_number(h) >= k) return false;
    }
  }
  return true;
}

}  // namespace indcover
