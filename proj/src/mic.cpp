#include "indcover/structure.hpp"

#include <cmath>

#include "indcover/errors.hpp"
#include "indcover/stats.hpp"

namespace indcover {

namespace {

// Maximum-weight independent set by branch and bound; weights are degrees in g.
class WeightedIndependent {
 public:
  explicit WeightedIndependent(const Graph& g) : g_(g) {}

  int best_weight(VertexSet candidates) {
    best_ = -1;
    search(0, candidates);
    return best_;
  }

 private:
  int weight(VertexSet s) const {
    int w = 0;
    for (int v : s) w += g_.degree(v);
    return w;
  }

  void search(int chosen, VertexSet cand) {
    VertexSet free;
    for (int v : cand) {
      if (!g_.neighbors(v).intersects(cand)) free.insert(v);
    }
    chosen += weight(free);
    cand -= free;
    if (chosen + weight(cand) <= best_) return;
    if (cand.empty()) {
      best_ = chosen;
      return;
    }
    int pivot = cand.first();
    int pivot_deg = -1;
    for (int v : cand) {
      const int d = g_.degree_in(v, cand);
      if (d > pivot_deg) {
        pivot = v;
        pivot_deg = d;
      }
    }
    search(chosen + g_.degree(pivot), cand - g_.neighbors(pivot) - VertexSet::single(pivot));
    search(chosen, cand - VertexSet::single(pivot));
  }

  const Graph& g_;
  int best_ = -1;
};

}  // namespace

MicResult mic(const Graph& g) {
  WeightedIndependent solver(g);
  MicResult out;
  out.value = solver.best_weight(g.vertices());

  // Grow the witness one smallest feasible vertex at a time; stop as soon as the optimum is
  // reached so that a shorter prefix wins.
  VertexSet chosen;
  int chosen_weight = 0;
  int last = -1;
  while (chosen_weight < out.value) {
    bool extended = false;
    for (int v = last + 1; v < g.order(); ++v) {
      if (g.neighbors(v).intersects(chosen)) continue;
      const VertexSet with_v = chosen | VertexSet::single(v);
      VertexSet rest = g.vertices() - VertexSet::range(v + 1);
      for (int u : with_v) rest -= g.neighbors(u);
      if (chosen_weight + g.degree(v) + solver.best_weight(rest) == out.value) {
        chosen = with_v;
        chosen_weight += g.degree(v);
        last = v;
        extended = true;
        break;
      }
    }
    if (!extended) throw std::logic_error("mic witness reconstruction failed");
  }
  out.witness = chosen;
  return out;
}

LowHighSplit low_high_split(const Graph& g) {
  LowHighSplit s;
  const int delta = min_degree(g);
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) > delta) {
      s.high.insert(v);
    } else {
      s.low.insert(v);
    }
  }
  s.high_edgeless = g.edges_within(s.high) == 0;
  s.max_is_min_plus_one = g.order() > 0 && max_degree(g) == delta + 1;
  return s;
}

Rational sigma(const Graph& g) {
  const int delta = min_degree(g);
  if (delta == 0) throw UndefinedStatistic("sigma needs minimum degree >= 1");
  const LowHighSplit split = low_high_split(g);
  const Rational coeff = Rational(delta - 1) + Rational(2, delta);
  return coeff * split.low.size() - Rational(2 * g.edges_within(split.low));
}

int beta_t(const Graph& g, int t) {
  VertexSet level;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == t) level.insert(v);
  }
  return independence_number(g, level);
}

TriangleFreeMic triangle_free_mic_check(const Graph& g) {
  if (!is_triangle_free(g)) throw ArgumentError("triangle_free_mic_check: graph has a triangle");
  if (g.order() > 0 && min_degree(g) < 1) {
    throw ArgumentError("triangle_free_mic_check: every vertex needs degree >= 1");
  }
  TriangleFreeMic out;
  out.mic = mic(g).value;
  for (int v = 0; v < g.order(); ++v) out.rhs += std::log2(static_cast<double>(g.degree(v)));
  out.rhs /= 4.0;
  out.holds = static_cast<double>(out.mic) + kLogTolerance >= out.rhs;
  return out;
}

}  // namespace indcover
