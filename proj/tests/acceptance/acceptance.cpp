// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "indcover/certificate_io.hpp"
#include "indcover/enumerate.hpp"
#include "indcover/generators.hpp"
#include "indcover/graph6.hpp"
#include "indcover/reduce.hpp"
#include "indcover/stats.hpp"
#include "indcover/structure.hpp"
#include "indcover/suite.hpp"
#include "oracles.hpp"

using namespace indcover;

namespace {

constexpr double kLogSideTolerance = 1e-9;
constexpr double kMinutes = 60.0;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (cond) return;
    if (ok) detail = what;
    ok = false;
  }
};

struct Timed {
  SuiteReport report;
  double seconds = 0.0;
};

Timed run(const std::string& suite, std::optional<int> max_n = std::nullopt,
          std::optional<int> samples = std::nullopt) {
  SuiteOptions options;
  options.max_n = max_n;
  options.samples = samples;
  options.jobs = 0;
  const auto begin = std::chrono::steady_clock::now();
  Timed t{run_suite(suite, options), 0.0};
  t.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - begin).count();
  return t;
}

std::string canonical_g6(const Graph& g) { return encode_graph6(canonical_form(g)); }

bool has_note(const Record& r, const std::string& prefix) {
  for (const std::string& note : r.notes) {
    if (note.rfind(prefix, 0) == 0) return true;
  }
  return false;
}

std::string counts(const SuiteReport& report) {
  return std::to_string(report.records.size()) + " records, " +
         std::to_string(report.count(Verdict::pass)) + " pass, " +
         std::to_string(report.count(Verdict::counterexample)) + " counterexamples, " +
         std::to_string(report.count(Verdict::skip)) + " skipped";
}

void common(Outcome& o, const Timed& t, double limit_seconds) {
  o.require(t.report.passed(), "counterexample found");
  if (limit_seconds > 0) o.require(t.seconds < limit_seconds, "runtime limit exceeded");
  char buf[64];
  std::snprintf(buf, sizeof buf, "; %.2fs", t.seconds);
  if (o.ok) o.detail = counts(t.report) + buf;
}

// ---- criteria

Outcome mic_basics() {
  Outcome o;
  const Timed t = run("mic-basics", 7);
  o.require(t.report.records.size() == 996, "expected all 996 connected graphs up to 7 vertices");
  o.require(t.report.count(Verdict::skip) == 0, "unexpected skips");
  for (const Record& r : t.report.records) {
    const Graph g = parse_graph6(r.graph6);
    const bool gallai = oracle::gallai_tree(g);
    const int m = oracle::mic(g);
    o.require(r.data.at("mic") == m, "mic differs from brute force at " + r.graph6);
    o.require(gallai ? m == g.order() - 1 : m >= g.order(), "dichotomy fails at " + r.graph6);
  }
  common(o, t, 2 * kMinutes);
  return o;
}

Outcome main_lemma() {
  Outcome o;
  const Timed t = run("main-lemma-d0", 7);
  int certificates = 0;
  for (const Record& r : t.report.records) {
    const Graph g = parse_graph6(r.graph6);
    o.require(r.data.at("gallai_tree") == oracle::gallai_tree(g), "Gallai flag at " + r.graph6);
    if (r.data.at("gallai_tree")) continue;
    ++certificates;
    const CertificateFile file = certificate_from_json(r.data.at("certificate"));
    o.require(validate_certificate(file.certificate, file.graph, file.f).valid,
              "certificate fails revalidation at " + r.graph6);
    if (g.order() <= 6) o.require(r.data.at("online_d0") == true, "online check at " + r.graph6);
  }
  o.require(certificates > 0, "no certificates issued");
  common(o, t, 10 * kMinutes);
  if (o.ok) o.detail += "; " + std::to_string(certificates) + " certificates";
  return o;
}

Outcome kernel_game() {
  Outcome o;
  const Timed t = run("kernel-game", 6);
  int expected = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_graphs(n, true)) expected += oracle::gallai_tree(g) ? 0 : 1;
  }
  o.require(t.report.count(Verdict::pass) == expected, "not every certificate was played");
  common(o, t, 0);
  return o;
}

Outcome in_orient() {
  Outcome o;
  const Timed t = run("in-orient-oracle", 5);
  o.require(t.report.records.size() == 52, "expected all 52 graphs up to 5 vertices");
  o.require(t.report.count(Verdict::pass) == 52, "not every graph was checked");
  common(o, t, 0);
  return o;
}

Outcome at_classify() {
  Outcome o;
  const Timed t = run("at-classify", 6);
  for (const Record& r : t.report.records) {
    if (r.verdict != Verdict::skip) continue;
    o.require(r.data.value("m", 0) > 12, "skip below the edge limit at " + r.graph6);
  }
  common(o, t, 15 * kMinutes);
  return o;
}

Outcome kp_classify() {
  Outcome o;
  const Timed t = run("kp-classify", 6);
  const std::string k4e = canonical_g6(make_named("K4_minus_e"));
  bool pair_checked = false;
  int exhaustive = 0;
  int constructive = 0;
  for (const Record& r : t.report.records) {
    if (r.data.contains("d0_KP")) {
      ++exhaustive;
      o.require(r.data.at("d0_KP") == !r.data.at("gallai_tree").get<bool>(),
                "exhaustive f-KP disagrees at " + r.graph6);
    }
    if (r.data.contains("constructive_arcs")) ++constructive;
    if (r.graph6 == k4e) {
      pair_checked = has_note(r, "K4-e pair checked");
      o.require(r.data.at("strict_witnesses") == 0, "K4-e has a strict witness");
      o.require(r.data.at("full_witnesses") > 0, "K4-e has no witness");
      o.require(r.data.at("all_double_shared_edge") == true,
                "a K4-e witness does not double the shared edge");
    }
  }
  o.require(pair_checked, "K4-e pair not checked");
  o.require(exhaustive == 1 + 1 + 2 + 6 + 21, "exhaustive check did not cover n <= 5");
  o.require(constructive > 0, "no constructive witnesses");
  common(o, t, 0);
  return o;
}

Outcome mic_strength() {
  Outcome o;
  const Timed t = run("mic-strength", 7);
  std::set<std::string> tight;
  for (const Record& r : t.report.records) {
    if (has_note(r, "tight")) tight.insert(r.graph6);
  }
  o.require(tight.count(canonical_g6(make_named("cycle", {5}))) == 1, "C5 not tight");
  o.require(tight.count(canonical_g6(make_named("complete", {4}))) == 1, "K4 not tight");
  common(o, t, 0);
  if (o.ok) o.detail += "; " + std::to_string(tight.size()) + " tight";
  return o;
}

Outcome triangle_free() {
  Outcome o;
  const Timed t = run("triangle-free-mic", 9);
  int checked = 0;
  for (const Record& r : t.report.records) {
    if (r.verdict != Verdict::pass) continue;
    ++checked;
    o.require(r.data.at("mic").get<double>() + kLogSideTolerance >= r.data.at("rhs").get<double>(),
              "bound fails at " + r.graph6);
  }
  o.require(checked > 1700, "corpus too small");
  common(o, t, 5 * kMinutes);
  return o;
}

Outcome gallai_count() {
  Outcome o;
  const Timed t = run("gallai-count");
  std::map<int, int> per_k;
  bool k5_tight = false;
  const std::string k5 = encode_graph6(make_named("complete", {5}));
  for (const Record& r : t.report.records) {
    const int k = r.data.at("k");
    ++per_k[k];
    if (k == 6 && r.graph6 == k5) k5_tight = has_note(r, "tight at k=6");
  }
  for (int k : {6, 7, 8}) o.require(per_k[k] == 1000, "expected 1000 forests for each k");
  o.require(k5_tight, "K5 at k=6 missing or not tight");
  common(o, t, 0);
  return o;
}

Outcome edges_4critical() {
  Outcome o;
  const Timed t = run("edges-4critical", 7);
  std::set<std::string> critical;
  for (const Record& r : t.report.records) {
    if (has_note(r, "4-critical")) critical.insert(r.graph6);
  }
  o.require(critical.count(canonical_g6(make_named("complete", {4}))) == 1, "K4 missing");
  o.require(critical.count(canonical_g6(make_named("moser_spindle"))) == 1, "Moser spindle missing");
  common(o, t, 0);
  if (o.ok) o.detail += "; " + std::to_string(critical.size()) + " 4-critical";
  return o;
}

Outcome brooks_alpha() {
  Outcome o;
  const Timed t = run("brooks-alpha", 8);
  o.require(t.report.count(Verdict::pass) > 10000, "corpus too small");
  common(o, t, 2 * kMinutes);
  return o;
}

Outcome ore_and_cut() {
  Outcome o;
  const Timed ore = run("ore-precursors", 7);
  const Timed cut = run("cut-lemma", 6, 500);
  int gap_cases = 0;
  for (const Record& r : ore.report.records) {
    if (!has_note(r, "sigma-bound: skipped (min degree below 3)")) continue;
    ++gap_cases;
    const Graph g = parse_graph6(r.graph6);
    const LowHighSplit split = low_high_split(g);
    const int delta = min_degree(g);
    const Rational identity =
        (Rational(2, delta) - 1) * (split.low.size() - (delta - 1) * split.high.size());
    o.require(sigma_bound_gap(g) == identity, "sigma gap identity fails at " + r.graph6);
  }
  o.require(cut.report.records.size() == 500, "expected 500 cut-lemma samples");
  common(o, ore, 0);
  if (o.ok) {
    const std::string ore_detail = o.detail;
    common(o, cut, 0);
    if (o.ok) {
      o.detail = "ore-precursors " + ore_detail + "; cut-lemma " + o.detail + "; " +
                 std::to_string(gap_cases) + " sigma-bound skips below min degree 3 match the gap identity";
    }
  }
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"mic-basics", mic_basics},
      {"main-lemma-d0", main_lemma},
      {"kernel-game", kernel_game},
      {"in-orient-oracle", in_orient},
      {"at-classify", at_classify},
      {"kp-classify", kp_classify},
      {"mic-strength", mic_strength},
      {"triangle-free-mic", triangle_free},
      {"gallai-count", gallai_count},
      {"edges-4critical", edges_4critical},
      {"brooks-alpha", brooks_alpha},
      {"ore-precursors + cut-lemma", ore_and_cut},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failures += o.ok ? 0 : 1;
    std::printf("%s %2d %s: %s\n", o.ok ? "PASS" : "FAIL", index, name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}
