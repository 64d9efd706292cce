#include <doctest.h>

#include "indcover/enumerate.hpp"
#include "indcover/errors.hpp"
#include "indcover/generators.hpp"
#include "indcover/orient.hpp"
#include "indcover/stats.hpp"
#include "oracles.hpp"

using namespace indcover;

namespace {

Digraph random_digraph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  Digraph d(n);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && coin(rng)) d.add_arc(u, v);
    }
  }
  return d;
}

VertexSet random_independent(std::mt19937_64& rng, const Graph& g) {
  VertexSet a;
  for (int v = 0; v < g.order(); ++v) {
    if (rng() % 2 == 0 && !g.neighbors(v).intersects(a)) a.insert(v);
  }
  return a;
}

}  // namespace

TEST_CASE("orientation with in-degree demands agrees with brute force") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const Graph g = oracle::random_graph(rng, n, 0.5);
    if (g.size() > 14) continue;
    DegreeTable demand(n);
    for (int v = 0; v < n; ++v) demand[v] = static_cast<int>(rng() % (g.degree(v) + 2));
    const OrientationResult r = orient_with_indegrees(g, demand);
    REQUIRE(r.feasible() == oracle::orientable(g, demand));
    if (r.feasible()) {
      const Digraph& d = *r.orientation;
      REQUIRE(d.arc_count() == g.size());
      REQUIRE(d.covers(g));
      for (int v = 0; v < n; ++v) REQUIRE(d.in_degree(v) >= demand[v]);
    } else {
      REQUIRE(r.deficiency > 0);
      REQUIRE(orientation_deficiency(g, demand, r.violating) == r.deficiency);
    }
  }
}

TEST_CASE("orientation errors and an infeasible example") {
  const Graph k3 = make_named("complete", {3});
  CHECK_THROWS_AS(orient_with_indegrees(k3, {1, 1}), ArgumentError);
  CHECK_THROWS_AS(orient_with_indegrees(k3, {1, -1, 0}), ArgumentError);
  const OrientationResult r = orient_with_indegrees(k3, {2, 2, 0});
  CHECK_FALSE(r.feasible());
  CHECK(r.deficiency == 1);
  CHECK(r.violating == VertexSet({0, 1}));
}

TEST_CASE("build_kernel_perfect yields kernel-perfect digraphs within the budget") {
  std::mt19937_64 rng(5);
  int built = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const Graph g = oracle::random_graph(rng, n, 0.5);
    const VertexSet a = random_independent(rng, g);
    DegreeTable f(n);
    for (int v = 0; v < n; ++v) f[v] = 1 + static_cast<int>(rng() % (g.degree(v) + 1));
    const OrientationResult r = build_kernel_perfect(g, a, f);
    if (!r.feasible()) {
      REQUIRE(r.deficiency > 0);
      continue;
    }
    ++built;
    const Digraph& d = *r.orientation;
    REQUIRE(d.covers(g));
    for (int v = 0; v < n; ++v) REQUIRE(d.out_degree(v) <= f[v] - 1);
    REQUIRE(is_kernel_perfect(d).perfect);
    if (n <= 6) REQUIRE(oracle::kernel_perfect(d));
  }
  CHECK(built > 50);
}

TEST_CASE("build_kernel_perfect argument checks") {
  const Graph p3 = make_named("path", {3});
  CHECK_THROWS_AS(build_kernel_perfect(p3, VertexSet({0, 1}), {1, 2, 1}), ArgumentError);
  CHECK_THROWS_AS(build_kernel_perfect(p3, VertexSet({0}), {3, 1, 1}), ArgumentError);
  CHECK_THROWS_AS(build_kernel_perfect(p3, VertexSet({0}), {1, 1, 1}, VertexSet({1, 2})),
                  ArgumentError);
}

TEST_CASE("kernels: examples") {
  const Digraph triangle(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK_FALSE(find_kernel(triangle));
  const KernelPerfectVerdict v = is_kernel_perfect(triangle);
  CHECK_FALSE(v.perfect);
  CHECK(v.offending == VertexSet({0, 1, 2}));

  const Digraph path(3, {{0, 1}, {1, 2}});
  CHECK(find_kernel(path) == VertexSet({0, 2}));
  CHECK(is_kernel(path, VertexSet({0, 2}), path.vertices()));
  CHECK_FALSE(is_kernel(path, VertexSet({1}), path.vertices()));
  CHECK(is_kernel_perfect(path).perfect);
  CHECK(find_kernel(Digraph(0)) == VertexSet());

  Digraph lemma_shaped(4, {{2, 0}, {1, 2}, {0, 3}, {3, 1}});
  lemma_shaped.add_double(2, 3);
  CHECK(find_kernel(lemma_shaped, VertexSet({0, 1})) == VertexSet({0, 1}));
  CHECK_THROWS_AS(is_kernel_perfect(Digraph(11)), SizeError);
}

TEST_CASE("kernel search agrees with brute force; parallel matches serial") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    const Digraph d = random_digraph(rng, n, 0.3);
    const VertexSet within(rng() & d.vertices().bits());
    const auto k = find_kernel_exhaustive(d, within);
    REQUIRE(k.has_value() == oracle::has_kernel(d, within.bits()));
    if (k) REQUIRE(is_kernel(d, *k, within));
    const KernelPerfectVerdict serial = is_kernel_perfect(d);
    REQUIRE(serial.perfect == oracle::kernel_perfect(d));
    const KernelPerfectVerdict parallel = is_kernel_perfect(d, Execution::parallel(4));
    REQUIRE(parallel.perfect == serial.perfect);
    REQUIRE(parallel.offending == serial.offending);
  }
}

TEST_CASE("constructive kernel matches exhaustive existence on every graph up to 8 vertices") {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 8; ++n) {
    for (const Graph& g : enumerate_graphs(n, false)) {
      const VertexSet a = random_independent(rng, g);
      Digraph d(n);
      for (auto [u, v] : g.edges()) {
        if (a.contains(u)) {
          d.add_arc(v, u);
        } else if (a.contains(v)) {
          d.add_arc(u, v);
        } else {
          d.add_double(u, v);
        }
      }
      const auto k = find_kernel(d, a);
      REQUIRE(k.has_value());
      REQUIRE(is_kernel(d, *k, d.vertices()));
      REQUIRE(find_kernel_exhaustive(d, d.vertices()).has_value());
    }
  }
  const Digraph one_way(2, {{0, 1}});
  CHECK_THROWS_AS(find_kernel(one_way, VertexSet()), ArgumentError);
}

TEST_CASE("Alon-Tarsi counts agree with brute force") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const Digraph d = random_digraph(rng, n, 0.4);
    if (d.arc_count() > 16) continue;
    const AlonTarsiCount c = alon_tarsi_diff(d);
    const auto [even, odd] = oracle::eulerian_counts(d);
    REQUIRE(c.even == even);
    REQUIRE(c.odd == odd);
  }
  const Digraph acyclic(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {1, 3}});
  CHECK(alon_tarsi_diff(acyclic).diff() == 1);
  const Digraph triangle(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(alon_tarsi_diff(triangle).even == 1);
  CHECK(alon_tarsi_diff(triangle).odd == 1);
  Digraph big(2);
  for (int i = 0; i < 25; ++i) big.add_arc(0, 1);
  CHECK_THROWS_AS(alon_tarsi_diff(big), SizeError);
}

TEST_CASE("f-AT: examples and parallel matches serial") {
  const Graph c4 = make_named("cycle", {4});
  const AtVerdict even = is_f_AT(c4, {2, 2, 2, 2});
  CHECK(even.is_at);
  REQUIRE(even.witness);
  for (int v = 0; v < 4; ++v) CHECK(even.witness->out_degree(v) <= 1);
  CHECK_FALSE(is_f_AT(make_named("cycle", {5}), {2, 2, 2, 2, 2}).is_at);
  CHECK(is_f_AT(make_named("cycle", {5}), {3, 2, 2, 2, 2}).is_at);
  CHECK_FALSE(is_f_AT(make_named("complete", {4}), {3, 3, 3, 3}).is_at);
  CHECK_THROWS_AS(is_f_AT(make_named("complete", {6}), DegreeTable(6, 6)), SizeError);

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const Graph g = oracle::random_graph(rng, n, 0.5);
    DegreeTable f(n);
    for (int v = 0; v < n; ++v) f[v] = 1 + static_cast<int>(rng() % (g.degree(v) + 1));
    const AtVerdict serial = is_f_AT(g, f);
    const AtVerdict parallel = is_f_AT(g, f, Execution::parallel(4));
    REQUIRE(serial.is_at == parallel.is_at);
    REQUIRE(serial.witness_index == parallel.witness_index);
    if (serial.is_at) {
      const Digraph& d = *serial.witness;
      for (int v = 0; v < n; ++v) REQUIRE(d.out_degree(v) <= f[v] - 1);
      const auto [ee, eo] = oracle::eulerian_counts(d);
      REQUIRE(ee != eo);
    }
  }
}

TEST_CASE("f-KP on K4-e") {
  const Graph k4e = make_named("K4_minus_e");
  const DegreeTable d0 = k4e.degrees();
  CHECK_FALSE(is_f_KP(k4e, d0, KpSearchSpace::strict_orientations()).is_kp);
  const std::vector<Digraph> witnesses = f_KP_witnesses(k4e, d0);
  CHECK(witnesses.size() == 2);
  for (const Digraph& w : witnesses) {
    CHECK(w.multiplicity(2, 3) == 1);
    CHECK(w.multiplicity(3, 2) == 1);
    CHECK(w.covers(k4e));
    CHECK(oracle::kernel_perfect(w));
    for (int v = 0; v < 4; ++v) CHECK(w.out_degree(v) <= d0[v] - 1);
  }
  CHECK(is_f_KP(k4e, d0).is_kp);
  CHECK_THROWS_AS(is_f_KP(Graph(6), DegreeTable(6, 1)), SizeError);
}

TEST_CASE("f-KP witnesses satisfy the definition") {
  for (int n = 1; n <= 4; ++n) {
    for (const Graph& g : enumerate_graphs(n, false)) {
      const KpVerdict v = is_f_KP(g, g.degrees(), KpSearchSpace::strict_orientations());
      if (!v.is_kp) continue;
      const Digraph& w = *v.witness;
      REQUIRE(w.arc_count() == g.size());
      REQUIRE(w.covers(g));
      REQUIRE(oracle::kernel_perfect(w));
    }
  }
  CHECK_FALSE(is_f_KP(Graph(1), {0}).is_kp);
  CHECK(is_f_KP(Graph(1), {1}).is_kp);
}

TEST_CASE("extend_d0_kp grows a witness by one neighbourhood") {
  const Graph k4e = make_named("K4_minus_e");
  Graph g(6, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {4, 5}, {0, 5}});
  const VertexSet h({0, 1, 2, 3});
  Digraph hw(6);
  const std::vector<Digraph> witnesses = f_KP_witnesses(k4e, k4e.degrees());
  for (auto [u, v] : witnesses.front().arcs()) hw.add_arc(u, v);

  const Digraph grown = extend_d0_kp(g, h, hw);
  CHECK(grown.covers(g));
  CHECK(grown.multiplicity(0, 4) == 1);
  CHECK(grown.multiplicity(4, 5) == 1);
  CHECK(grown.multiplicity(5, 4) == 1);
  CHECK(oracle::kernel_perfect(grown));
  for (int v = 0; v < 6; ++v) CHECK(grown.out_degree(v) <= g.degree(v) - 1);

  CHECK_THROWS_AS(extend_d0_kp(g, g.vertices(), hw), ArgumentError);
  CHECK_THROWS_AS(extend_d0_kp(g, VertexSet(), Digraph(6)), ArgumentError);
  Digraph leaking = hw;
  leaking.add_arc(1, 4);
  CHECK_THROWS_AS(extend_d0_kp(g, h, leaking), ArgumentError);
  Digraph heavy(6);
  for (auto [u, v] : k4e.edges()) heavy.add_double(u, v);
  CHECK_THROWS_AS(extend_d0_kp(g, h, heavy), ArgumentError);
  const Graph split(3, {{1, 2}});
  CHECK_THROWS_AS(extend_d0_kp(split, VertexSet({0}), Digraph(3)), ArgumentError);
}
