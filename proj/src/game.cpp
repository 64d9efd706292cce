#include <algorithm>
#include <random>
#include <string>
#include <unordered_set>

#include "indcover/errors.hpp"
#include "indcover/game.hpp"
#include "indcover/orient.hpp"

namespace indcover {

namespace {

std::uint64_t state_key(VertexSet remaining, const std::vector<int>& budget) {
  std::uint64_t key = remaining.bits();
  for (int v : remaining) key |= static_cast<std::uint64_t>(budget[v] & 0xF) << (8 + 4 * v);
  return key;
}

void check_order(const Graph& g) {
  if (g.order() > kMaxGameOrder) {
    throw SizeError("the game solver supports at most 7 vertices, got " +
                    std::to_string(g.order()));
  }
}

void check_table(const Graph& g, const DegreeTable& f) {
  if (static_cast<int>(f.size()) != g.order()) throw ArgumentError("f table size mismatch");
  for (int x : f) {
    if (x < 0) throw ArgumentError("f must be nonnegative");
  }
}

VertexSet resolve_arena(const Graph& g, std::optional<VertexSet> arena) {
  const VertexSet a = arena.value_or(g.vertices());
  if (!a.is_subset_of(g.vertices())) throw ArgumentError("arena leaves the vertex set");
  return a;
}

std::vector<VertexSet> independent_subsets(const Graph& g, VertexSet s) {
  std::vector<VertexSet> out;
  for_each_subset(s, [&](VertexSet sub) {
    if (g.is_independent(sub)) out.push_back(sub);
  });
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

bool is_maximal_independent(const Graph& g, VertexSet s, VertexSet i) {
  if (!g.is_independent(i)) return false;
  for (int v : s - i) {
    if (!g.neighbors(v).intersects(i)) return false;
  }
  return true;
}

void check_answer(const Graph& g, VertexSet listed, VertexSet painted) {
  if (!painted.is_subset_of(listed) || !g.is_independent(painted)) {
    throw ArgumentError("painter answered " + to_string(painted) + " to " + to_string(listed) +
                        ", not an independent subset");
  }
}

}  // namespace

OnlineSolver::OnlineSolver(const Graph& g) : g_(g) { check_order(g); }

const std::vector<VertexSet>& OnlineSolver::maximal_independent(VertexSet s) {
  auto [it, fresh] = maximal_.try_emplace(s.bits());
  if (fresh) {
    for_each_subset(s, [&](VertexSet sub) {
      if (is_maximal_independent(g_, s, sub)) it->second.push_back(sub);
    });
  }
  return it->second;
}

bool OnlineSolver::wins(const GameState& state) {
  if (!state.remaining.is_subset_of(g_.vertices())) throw ArgumentError("state leaves the graph");
  if (static_cast<int>(state.budget.size()) != g_.order()) {
    throw ArgumentError("budget table size mismatch");
  }
  std::vector<int> budget(state.budget.begin(), state.budget.end());
  for (int v : state.remaining) {
    budget[v] = std::min(budget[v], g_.degree_in(v, state.remaining) + 1);
  }
  return solve(state.remaining, budget);
}

bool OnlineSolver::solve(VertexSet remaining, std::vector<int>& budget) {
  for (bool dropped = true; dropped;) {
    dropped = false;
    for (int v : VertexSet(remaining)) {
      if (budget[v] > g_.degree_in(v, remaining)) {
        remaining.erase(v);
        dropped = true;
      }
    }
  }
  if (remaining.empty()) return true;
  for (int v : remaining) {
    if (budget[v] <= 0) return false;
  }
  const std::uint64_t key = state_key(remaining, budget);
  if (auto hit = memo_.find(key); hit != memo_.end()) return hit->second;

  bool result = true;
  const std::uint64_t all = remaining.bits();
  for (std::uint64_t bits = all; bits != 0 && result; bits = (bits - 1) & all) {
    const VertexSet listed(bits);
    bool answered = false;
    for (VertexSet painted : maximal_independent(listed)) {
      const VertexSet missed = listed - painted;
      for (int v : missed) --budget[v];
      answered = solve(remaining - painted, budget);
      for (int v : missed) ++budget[v];
      if (answered) break;
    }
    result = answered;
  }
  memo_.emplace(key, result);
  return result;
}

ReferenceOnlineSolver::ReferenceOnlineSolver(const Graph& g) : g_(g) { check_order(g); }

bool ReferenceOnlineSolver::wins(VertexSet remaining, const DegreeTable& budget) {
  if (static_cast<int>(budget.size()) != g_.order()) {
    throw ArgumentError("budget table size mismatch");
  }
  for (int v : remaining) {
    if (budget[v] > kMaxGameBudget) throw SizeError("budget above 7");
  }
  std::vector<int> b(budget.begin(), budget.end());
  return solve(remaining, b);
}

bool ReferenceOnlineSolver::solve(VertexSet remaining, std::vector<int>& budget) {
  if (remaining.empty()) return true;
  for (int v : remaining) {
    if (budget[v] <= 0) return false;
  }
  const std::uint64_t key = state_key(remaining, budget);
  if (auto hit = memo_.find(key); hit != memo_.end()) return hit->second;

  bool result = true;
  for_each_subset(remaining, [&](VertexSet listed) {
    if (!result || listed.empty()) return;
    bool answered = false;
    for_each_subset(listed, [&](VertexSet painted) {
      if (answered || !g_.is_independent(painted)) return;
      const VertexSet missed = listed - painted;
      for (int v : missed) --budget[v];
      answered = solve(remaining - painted, budget);
      for (int v : missed) ++budget[v];
    });
    result = answered;
  });
  memo_.emplace(key, result);
  return result;
}

bool is_online_f_choosable(const Graph& g, const DegreeTable& f, std::optional<VertexSet> arena) {
  check_order(g);
  check_table(g, f);
  OnlineSolver solver(g);
  return solver.wins(resolve_arena(g, arena), f);
}

bool is_online_f_choosable_reference(const Graph& g, const DegreeTable& f) {
  check_order(g);
  check_table(g, f);
  return ReferenceOnlineSolver(g).wins(g.vertices(), f);
}

PainterStrategy kernel_painter(const Digraph& d) {
  return [d](const GameState&, VertexSet listed) {
    auto kernel = find_kernel_exhaustive(d, listed);
    if (!kernel) throw ArgumentError("digraph has no kernel on " + to_string(listed));
    return *kernel;
  };
}

PainterStrategy checked_kernel_painter(const Graph& g, const Digraph& d, VertexSet arena) {
  if (d.order() != g.order()) throw ArgumentError("digraph order differs from graph order");
  const Graph part = g.induced(arena);
  if (!d.induced(arena).covers(part)) {
    throw ArgumentError("digraph does not cover the graph on " + to_string(arena));
  }
  return kernel_painter(d);
}

PainterStrategy greedy_painter(const Graph& g) {
  return [g](const GameState& state, VertexSet listed) {
    std::vector<int> order = listed.to_vector();
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return state.budget[a] < state.budget[b]; });
    VertexSet painted;
    for (int v : order) {
      if (!g.neighbors(v).intersects(painted)) painted.insert(v);
    }
    return painted;
  };
}

PainterStrategy optimal_painter(std::shared_ptr<OnlineSolver> solver) {
  return [solver](const GameState& state, VertexSet listed) {
    const Graph& g = solver->graph();
    const auto options = independent_subsets(g, listed);
    for (VertexSet painted : options) {
      DegreeTable next = state.budget;
      for (int v : listed - painted) --next[v];
      if (solver->wins(state.remaining - painted, next)) return painted;
    }
    for (VertexSet painted : options) {
      if (is_maximal_independent(g, listed, painted)) return painted;
    }
    return VertexSet();
  };
}

ListerStrategy optimal_lister(std::shared_ptr<OnlineSolver> solver) {
  return [solver](const GameState& state) {
    const Graph& g = solver->graph();
    std::vector<VertexSet> moves;
    for_each_subset(state.remaining, [&](VertexSet s) {
      if (!s.empty()) moves.push_back(s);
    });
    std::sort(moves.begin(), moves.end(), lex_less);
    for (VertexSet listed : moves) {
      bool answered = false;
      for (VertexSet painted : independent_subsets(g, listed)) {
        DegreeTable next = state.budget;
        for (int v : listed - painted) --next[v];
        bool alive = true;
        for (int v : listed - painted) alive = alive && next[v] > 0;
        if (alive && solver->wins(state.remaining - painted, next)) {
          answered = true;
          break;
        }
      }
      if (!answered) return listed;
    }
    return state.remaining;
  };
}

ListerStrategy random_lister(std::uint64_t seed) {
  auto rng = std::make_shared<std::mt19937_64>(seed);
  return [rng](const GameState& state) {
    if (state.remaining.empty()) return VertexSet();
    while (true) {
      VertexSet s;
      for (int v : state.remaining) {
        if ((*rng)() & 1) s.insert(v);
      }
      if (!s.empty()) return s;
    }
  };
}

ListerStrategy scripted_lister(std::vector<VertexSet> script) {
  auto cursor = std::make_shared<std::size_t>(0);
  return [script = std::move(script), cursor](const GameState& state) {
    while (*cursor < script.size()) {
      const VertexSet s = script[(*cursor)++] & state.remaining;
      if (!s.empty()) return s;
    }
    return state.remaining;
  };
}

GameOutcome play_paint_game(const Graph& g, const DegreeTable& f, const PainterStrategy& painter,
                            const ListerStrategy& lister, std::optional<VertexSet> arena) {
  check_table(g, f);
  GameState state{resolve_arena(g, arena), f};
  GameOutcome out;
  for (int v : state.remaining) {
    if (state.budget[v] <= 0) return out;
  }
  while (!state.remaining.empty()) {
    const VertexSet listed = lister(state) & state.remaining;
    if (listed.empty()) throw ArgumentError("lister produced an empty set");
    const VertexSet painted = painter(state, listed);
    check_answer(g, listed, painted);
    bool starved = false;
    for (int v : listed - painted) starved = --state.budget[v] <= 0 || starved;
    state.remaining -= painted;
    out.transcript.push_back({listed, painted, state.budget});
    ++out.states;
    if (starved) return out;
  }
  out.painter_wins = true;
  return out;
}

namespace {

class AllListers {
 public:
  AllListers(const Graph& g, const PainterStrategy& painter) : g_(g), painter_(painter) {}

  // A losing line from this state, or nullopt when Painter survives everything.
  std::optional<std::vector<Round>> explore(GameState& state) {
    if (state.remaining.empty()) return std::nullopt;
    std::vector<int> budget(state.budget.begin(), state.budget.end());
    const std::uint64_t key = state_key(state.remaining, budget);
    if (safe_.count(key)) return std::nullopt;
    ++states;
    std::optional<std::vector<Round>> lost;
    const std::uint64_t all = state.remaining.bits();
    for (std::uint64_t bits = all; bits != 0 && !lost; bits = (bits - 1) & all) {
      const VertexSet listed(bits);
      const VertexSet painted = painter_(state, listed);
      check_answer(g_, listed, painted);
      const VertexSet missed = listed - painted;
      bool starved = false;
      for (int v : missed) starved = --state.budget[v] <= 0 || starved;
      state.remaining -= painted;
      Round round{listed, painted, state.budget};
      if (starved) {
        lost = std::vector<Round>{round};
      } else if (auto rest = explore(state)) {
        rest->insert(rest->begin(), round);
        lost = std::move(rest);
      }
      state.remaining |= painted;
      for (int v : missed) ++state.budget[v];
    }
    if (!lost) safe_.insert(key);
    return lost;
  }

  std::uint64_t states = 0;

 private:
  const Graph& g_;
  const PainterStrategy& painter_;
  std::unordered_set<std::uint64_t> safe_;
};

}  // namespace

GameOutcome play_against_all_listers(const Graph& g, const DegreeTable& f,
                                     const PainterStrategy& painter,
                                     std::optional<VertexSet> arena) {
  check_order(g);
  check_table(g, f);
  GameState state{resolve_arena(g, arena), f};
  GameOutcome out;
  for (int v : state.remaining) {
    if (state.budget[v] <= 0) return out;
    if (state.budget[v] > kMaxGameBudget) throw SizeError("budget above 7");
  }
  AllListers search(g, painter);
  auto lost = search.explore(state);
  out.states = search.states;
  if (lost) {
    out.transcript = std::move(*lost);
  } else {
    out.painter_wins = true;
  }
  return out;
}

}  // namespace indcover
