#include <doctest.h>

#include "indcover/enumerate.hpp"
#include "indcover/errors.hpp"
#include "indcover/game.hpp"
#include "indcover/generators.hpp"
#include "indcover/orient.hpp"
#include "indcover/reduce.hpp"
#include "indcover/stats.hpp"
#include "indcover/structure.hpp"
#include "oracles.hpp"

using namespace indcover;

namespace {

void require_certificate(const Graph& g, const DegreeTable& f, const Certificate& c) {
  REQUIRE_FALSE(c.h_vertices.empty());
  REQUIRE(c.f_h == reduced_budget(g, f, c.h_vertices));
  const Digraph d = c.digraph.induced(c.h_vertices);
  REQUIRE(d.covers(g.induced(c.h_vertices)));
  for (auto [u, v] : c.digraph.arcs()) {
    REQUIRE(c.h_vertices.contains(u));
    REQUIRE(c.h_vertices.contains(v));
  }
  for (int v : c.h_vertices) REQUIRE(c.digraph.out_degree(v) <= c.f_h[v] - 1);
  REQUIRE(oracle::kernel_perfect(d));
}

// Every nonempty induced H checked with the unpruned solver.
bool oc_reducible_oracle(const Graph& g) {
  const int delta = min_degree(g);
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << g.order()); ++s) {
    const VertexSet h(s);
    const Graph sub = g.induced(h);
    DegreeTable f;
    bool ok = true;
    int i = 0;
    for (int v : h) {
      const int budget = delta + sub.degree(i++) - g.degree(v);
      ok = ok && budget >= 1;
      f.push_back(budget);
    }
    if (ok && is_online_f_choosable_reference(sub, f)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("reduced budget") {
  const Graph p3 = make_named("path", {3});
  CHECK(reduced_budget(p3, {1, 2, 1}, VertexSet({0, 1})) == DegreeTable{1, 1, 0});
}

TEST_CASE("extraction examples") {
  const Graph k1(1);
  const Certificate single = extract_reducible(k1, {1}, VertexSet({0}));
  CHECK(single.h_vertices == VertexSet({0}));
  CHECK(single.digraph.arc_count() == 0);

  const Graph c4 = make_named("cycle", {4});
  const Certificate cyc = extract_reducible(c4, c4.degrees(), VertexSet({0, 2}));
  CHECK(cyc.h_vertices == c4.vertices());
  CHECK(cyc.digraph.arc_count() == 4);
  for (int v = 0; v < 4; ++v) CHECK(cyc.digraph.out_degree(v) == 1);
  require_certificate(c4, c4.degrees(), cyc);

  const Graph c5 = make_named("cycle", {5});
  CHECK_THROWS_AS(extract_reducible(c5, c5.degrees()), HypothesisNotMet);
  CHECK_THROWS_AS(extract_reducible(c5, c5.degrees(), VertexSet({0, 2})), HypothesisNotMet);
  CHECK_THROWS_AS(extract_reducible(c4, c4.degrees(), VertexSet({0, 1})), ArgumentError);
  CHECK_THROWS_AS(extract_reducible(c4, {4, 2, 2, 2}), ArgumentError);
}

TEST_CASE("extraction succeeds on every connected non-Gallai graph up to 7 vertices") {
  int extracted = 0;
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : enumerate_graphs(n, true)) {
      if (oracle::gallai_tree(g)) {
        CHECK_THROWS_AS(extract_reducible(g, g.degrees()), HypothesisNotMet);
        continue;
      }
      require_certificate(g, g.degrees(), extract_reducible(g, g.degrees()));
      ++extracted;
    }
  }
  CHECK(extracted > 800);
}

TEST_CASE("extraction with random budgets meeting the weight condition") {
  std::mt19937_64 rng(19);
  int tested = 0;
  while (tested < 300) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const Graph g = oracle::random_graph(rng, n, 0.5);
    const VertexSet a = maximum_independent_set(g, g.vertices());
    DegreeTable f(n);
    int need = 0;
    int have = 0;
    for (int v = 0; v < n; ++v) {
      f[v] = 1 + static_cast<int>(rng() % (g.degree(v) + 1));
      need += g.degree(v) + 1 - f[v];
      if (a.contains(v)) have += g.degree(v);
    }
    if (have < need) {
      CHECK_THROWS_AS(extract_reducible(g, f, a), HypothesisNotMet);
      continue;
    }
    ++tested;
    const Certificate c = extract_reducible(g, f, a);
    require_certificate(g, f, c);
    if (c.h_vertices.size() <= 5) {
      REQUIRE(is_online_f_choosable(g.induced(c.h_vertices), [&] {
        DegreeTable sub;
        for (int v : c.h_vertices) sub.push_back(c.f_h[v]);
        return sub;
      }()));
    }
  }
}

TEST_CASE("OC-reducibility examples") {
  CHECK_FALSE(is_oc_reducible(make_named("cycle", {5})));
  CHECK_FALSE(is_oc_reducible(make_named("complete", {4})));
  const auto c4 = is_oc_reducible(make_named("cycle", {4}));
  REQUIRE(c4);
  CHECK(c4->h == VertexSet({0, 1, 2, 3}));
  CHECK(c4->f_h == DegreeTable{2, 2, 2, 2});
  CHECK_THROWS_AS(is_oc_reducible(Graph(8)), SizeError);
}

TEST_CASE("OC-reducibility agrees with the unpruned solver; parallel matches serial") {
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : enumerate_graphs(n, false)) {
      const auto serial = is_oc_reducible(g);
      REQUIRE(serial.has_value() == oc_reducible_oracle(g));
      const auto parallel = is_oc_reducible(g, Execution::parallel(4));
      REQUIRE(parallel.has_value() == serial.has_value());
      if (serial) {
        REQUIRE(parallel->h == serial->h);
        REQUIRE(parallel->f_h == serial->f_h);
      }
    }
  }
}

TEST_CASE("mic strength") {
  const MicStrength c5 = check_mic_strength(make_named("cycle", {5}));
  CHECK(c5.irreducible);
  CHECK(c5.mic == 4);
  CHECK(c5.bound == 4);
  CHECK(c5.holds);
  const MicStrength k4 = check_mic_strength(make_named("complete", {4}));
  CHECK(k4.irreducible);
  CHECK(k4.mic == 3);
  CHECK(k4.bound == 3);
  CHECK(k4.holds);
  const MicStrength c4 = check_mic_strength(make_named("cycle", {4}));
  CHECK_FALSE(c4.irreducible);
  CHECK(c4.holds);
  CHECK(c4.reduction);
  CHECK_THROWS_AS(check_mic_strength(Graph(0)), ArgumentError);
}

TEST_CASE("cut lemma") {
  const Graph c4 = make_named("cycle", {4});
  const CutLemmaCheck edge = cut_lemma_check(c4, {2, 2, 2, 2}, VertexSet({0, 1}));
  CHECK(edge.rest_choosable);
  CHECK(edge.whole_choosable);
  CHECK(edge.holds());
  const CutLemmaCheck k4 = cut_lemma_check(make_named("complete", {4}), {3, 3, 3, 3},
                                           VertexSet({0, 1, 2}));
  CHECK_FALSE(k4.part_choosable);
  CHECK(k4.holds());
  CHECK_THROWS_AS(cut_lemma_check(Graph(7), DegreeTable(7, 1), VertexSet({0})), SizeError);
}

TEST_CASE("precursor checks and the sigma gap") {
  const Graph p3 = make_named("path", {3});
  CHECK(sigma_bound_gap(p3) == Rational(2));
  const auto checks = ore_precursor_checks(p3, true);
  bool found = false;
  for (const PrecursorCheck& c : checks) {
    if (c.name != "sigma-bound") continue;
    found = true;
    CHECK_FALSE(c.applicable);
    CHECK(c.skip_reason == "min degree below 3");
  }
  CHECK(found);
  for (const PrecursorCheck& c : ore_precursor_checks(make_named("cycle", {4}), false)) {
    CHECK_FALSE(c.applicable);
    CHECK(c.skip_reason == "OC-reducible");
  }
  CHECK_THROWS_AS(sigma_bound_gap(make_named("complete", {3})), ArgumentError);

  for (int n = 2; n <= 7; ++n) {
    for (const Graph& g : enumerate_graphs(n, true)) {
      const LowHighSplit split = low_high_split(g);
      if (!split.high_edgeless || !split.max_is_min_plus_one) continue;
      const int delta = min_degree(g);
      const Rational expected = (Rational(2, delta) - 1) *
                                (split.low.size() - (delta - 1) * split.high.size());
      REQUIRE(sigma_bound_gap(g) == expected);
    }
  }
}

TEST_CASE("d0-KP witnesses of connected non-Gallai graphs") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_graphs(n, true)) {
      if (oracle::gallai_tree(g)) {
        CHECK_THROWS_AS(d0_kp_witness(g), HypothesisNotMet);
        continue;
      }
      const Digraph w = d0_kp_witness(g);
      REQUIRE(w.covers(g));
      for (int v = 0; v < n; ++v) REQUIRE(w.out_degree(v) <= g.degree(v) - 1);
      REQUIRE(oracle::kernel_perfect(w));
    }
  }
  CHECK_THROWS_AS(d0_kp_witness(disjoint_union(make_named("cycle", {4}), Graph(1))),
                  ArgumentError);
}
