#include <algorithm>
#include <memory>
#include <stdexcept>
#include <string>

#include "indcover/errors.hpp"
#include "indcover/game.hpp"
#include "indcover/orient.hpp"
#include "indcover/reduce.hpp"
#include "indcover/stats.hpp"

namespace indcover {

namespace {

int slack_sum(const Graph& g, const DegreeTable& f, VertexSet h) {
  int total = 0;
  for (int v : h) total += g.degree(v) + 1 - f[v];
  return total;
}

// ||H_A||: edges of g[h] with an end in a.
int bipartite_size(const Graph& g, VertexSet a, VertexSet h) {
  int total = 0;
  for (int v : a & h) total += g.degree_in(v, h);
  return total;
}

void check_small(const Graph& g, int limit, const char* what) {
  if (g.order() > limit) {
    throw SizeError(std::string(what) + " supports at most " + std::to_string(limit) +
                    " vertices, got " + std::to_string(g.order()));
  }
}

InequalitySides strictly_below(Rational lhs, Rational rhs) { return {lhs, rhs, lhs < rhs}; }

}  // namespace

DegreeTable reduced_budget(const Graph& g, const DegreeTable& f, VertexSet h) {
  if (static_cast<int>(f.size()) != g.order()) throw ArgumentError("f table size mismatch");
  DegreeTable out(g.order(), 0);
  for (int v : h) out[v] = f[v] + g.degree_in(v, h) - g.degree(v);
  return out;
}

Certificate extract_reducible(const Graph& g, const DegreeTable& f, std::optional<VertexSet> a) {
  if (static_cast<int>(f.size()) != g.order()) throw ArgumentError("f table size mismatch");
  if (g.order() == 0) throw ArgumentError("extract_reducible needs a nonempty graph");
  for (int v : g.vertices()) {
    if (f[v] > g.degree(v) + 1) {
      throw ArgumentError("f(" + std::to_string(v) + ") exceeds d(v)+1");
    }
  }
  const VertexSet cover = a ? *a : mic(g).witness;
  if (!cover.is_subset_of(g.vertices()) || !g.is_independent(cover)) {
    throw ArgumentError("A must be an independent set of g");
  }
  const int weight = cut_size(g, cover, g.vertices());
  const int needed = slack_sum(g, f, g.vertices());
  if (weight < needed) {
    throw HypothesisNotMet("||A,V|| = " + std::to_string(weight) + " < " +
                           std::to_string(needed));
  }

  VertexSet h = g.vertices();
  while (true) {
    DegreeTable f_h = reduced_budget(g, f, h);
    OrientationResult built = build_kernel_perfect(g, cover & h, f_h, h);
    if (built.feasible()) return {h, std::move(*built.orientation), std::move(f_h)};
    const VertexSet x = built.violating;
    if (x.empty() || x == h || !x.is_subset_of(h)) {
      throw std::logic_error("violating set " + to_string(x) + " is not a proper part of " +
                             to_string(h));
    }
    h -= x;
    if (bipartite_size(g, cover, h) < slack_sum(g, f, h)) {
      throw std::logic_error("counting invariant broken after peeling " + to_string(x));
    }
  }
}

std::optional<OcWitness> is_oc_reducible(const Graph& g, Execution exec) {
  check_small(g, kMaxReducibleOrder, "is_oc_reducible");
  if (g.order() == 0) return std::nullopt;
  const int delta = min_degree(g);
  const DegreeTable base(g.order(), delta);

  std::vector<VertexSet> candidates;
  for_each_subset(g.vertices(), [&](VertexSet s) {
    if (!s.empty()) candidates.push_back(s);
  });
  std::stable_sort(candidates.begin(), candidates.end(), [](VertexSet x, VertexSet y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return lex_less(x, y);
  });

  std::vector<std::unique_ptr<OnlineSolver>> pool(detail::team_size(exec));
  for (auto& solver : pool) solver = std::make_unique<OnlineSolver>(g);
  auto hit = first_index_where(
      candidates.size(),
      [&](std::uint64_t i) {
        const VertexSet h = candidates[i];
        return pool[detail::thread_index()]->wins(h, reduced_budget(g, base, h));
      },
      exec);
  if (!hit) return std::nullopt;
  const VertexSet h = candidates[*hit];
  return OcWitness{h, reduced_budget(g, base, h)};
}

MicStrength check_mic_strength(const Graph& g, Execution exec) {
  check_small(g, kMaxReducibleOrder, "check_mic_strength");
  if (g.order() == 0) throw ArgumentError("check_mic_strength needs a nonempty graph");
  MicStrength out;
  out.reduction = is_oc_reducible(g, exec);
  out.irreducible = !out.reduction;
  out.mic = mic(g).value;
  out.bound = 2 * g.size() - (min_degree(g) - 1) * g.order() - 1;
  out.holds = !out.irreducible || out.mic <= out.bound;
  return out;
}

CutLemmaCheck cut_lemma_check(const Graph& g, const DegreeTable& f, VertexSet h) {
  check_small(g, kMaxCutLemmaOrder, "cut_lemma_check");
  if (!h.is_subset_of(g.vertices())) throw ArgumentError("h leaves the vertex set");
  OnlineSolver solver(g);
  CutLemmaCheck out;
  out.rest_choosable = solver.wins(g.vertices() - h, f);
  out.part_choosable = solver.wins(h, reduced_budget(g, f, h));
  out.whole_choosable = solver.wins(g.vertices(), f);
  return out;
}

std::vector<PrecursorCheck> ore_precursor_checks(const Graph& g, bool irreducible) {
  std::vector<PrecursorCheck> out;
  const LowHighSplit split = low_high_split(g);
  std::string common;
  if (!irreducible) {
    common = "OC-reducible";
  } else if (g.order() == 0 || min_degree(g) == 0) {
    common = "minimum degree 0";
  } else if (!split.high_edgeless) {
    common = "high part has edges";
  } else if (!split.max_is_min_plus_one) {
    common = "max degree is not min degree + 1";
  }

  auto add = [&](std::string name, std::string reason, auto&& body) {
    PrecursorCheck check;
    check.name = std::move(name);
    check.skip_reason = std::move(reason);
    check.applicable = check.skip_reason.empty();
    if (check.applicable) body(check);
    out.push_back(std::move(check));
  };
  auto inequality = [](PrecursorCheck& check, InequalitySides sides) {
    check.holds = sides.holds;
    check.sides = sides;
  };

  const int n = g.order();
  const int high = split.high.size();
  const int low = split.low.size();
  const int delta = n > 0 ? min_degree(g) : 0;

  add("mic-below-high-plus-order", common, [&](PrecursorCheck& c) {
    inequality(c, strictly_below(mic(g).value, high + n));
  });
  add("high-below-low", common, [&](PrecursorCheck& c) {
    inequality(c, strictly_below(Rational(delta - 1) * high, low));
  });
  add("edge-density", common, [&](PrecursorCheck& c) {
    inequality(c, strictly_below(2 * g.size(), (Rational(delta) + Rational(1, delta)) * n));
  });
  const std::string sigma_reason =
      common.empty() && delta < 3 ? "min degree below 3" : common;
  add("sigma-bound", sigma_reason, [&](PrecursorCheck& c) {
    inequality(c, strictly_below(sigma(g), (Rational(4) - Rational(2, delta)) * high));
  });

  std::string clique_reason = common;
  if (clique_reason.empty()) {
    const int top = max_degree(g);
    if (top < 7) {
      clique_reason = "max degree below 7";
    } else if (contains_clique(g, top)) {
      clique_reason = "contains K_Delta";
    }
  }
  add("high-below-low-components", clique_reason, [&](PrecursorCheck& c) {
    const int pieces = static_cast<int>(components(g, split.low).size());
    const Rational factor(delta * (delta - 3), (delta - 1) * (delta - 5));
    inequality(c, strictly_below(high, factor * pieces));
  });

  add("low-part-gallai-forest", irreducible ? "" : "OC-reducible", [&](PrecursorCheck& c) {
    c.holds = is_gallai_forest(g.induced(split.low)).is_gallai;
  });
  return out;
}

Rational sigma_bound_gap(const Graph& g) {
  const LowHighSplit split = low_high_split(g);
  if (g.order() == 0 || min_degree(g) == 0 || !split.high_edgeless || !split.max_is_min_plus_one) {
    throw ArgumentError("sigma_bound_gap needs delta >= 1, an edgeless high part and Delta = delta+1");
  }
  const int delta = min_degree(g);
  return sigma(g) - (Rational(4) - Rational(2, delta)) * split.high.size();
}

Digraph d0_kp_witness(const Graph& g) {
  if (!is_connected(g)) throw ArgumentError("d0_kp_witness needs a connected graph");
  if (is_gallai_tree(g).is_gallai) throw HypothesisNotMet("g is a Gallai tree");
  const Certificate cert = extract_reducible(g, degree_table(g));
  VertexSet h = cert.h_vertices;
  Digraph witness = cert.digraph;
  while (h != g.vertices()) {
    witness = extend_d0_kp(g, h, witness);
    h |= g.boundary(h);
  }
  return witness;
}

}  // namespace indcover
