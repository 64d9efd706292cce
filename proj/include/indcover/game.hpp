#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "indcover/digraph.hpp"
#include "indcover/graph.hpp"

namespace indcover {

inline constexpr int kMaxGameOrder = 7;
inline constexpr int kMaxGameBudget = 7;

/// Uncoloured vertices and their residual list sizes. Budgets are indexed by vertex of the
/// whole graph; entries outside `remaining` are ignored.
struct GameState {
  VertexSet remaining;
  DegreeTable budget;
};

/// Memoized minimax for the online list-colouring game on induced subgraphs of one graph.
/// Painter answers only with maximal independent subsets of S, and a vertex whose budget
/// exceeds its degree among the remaining vertices is dropped. The memo is keyed on
/// (remaining, budgets), so one solver serves every arena of the same graph.
class OnlineSolver {
 public:
  explicit OnlineSolver(const Graph& g);

  /// Painter wins from this state.
  bool wins(const GameState& state);
  bool wins(VertexSet remaining, const DegreeTable& budget) { return wins({remaining, budget}); }

  const Graph& graph() const { return g_; }
  std::size_t memo_size() const { return memo_.size(); }

 private:
  bool solve(VertexSet remaining, std::vector<int>& budget);
  const std::vector<VertexSet>& maximal_independent(VertexSet s);

  Graph g_;
  std::unordered_map<std::uint64_t, bool> memo_;
  std::unordered_map<std::uint64_t, std::vector<VertexSet>> maximal_;
};

/// The same game without pruning: every nonempty S, every independent I ⊆ S.
class ReferenceOnlineSolver {
 public:
  explicit ReferenceOnlineSolver(const Graph& g);
  /// Throws SizeError if a budget exceeds kMaxGameBudget.
  bool wins(VertexSet remaining, const DegreeTable& budget);

 private:
  bool solve(VertexSet remaining, std::vector<int>& budget);

  Graph g_;
  std::unordered_map<std::uint64_t, bool> memo_;
};

/// Online f-choosability of g[arena] (default: all of g). Nonempty Lister moves only.
/// f(v) is clamped to d_arena(v)+1 first. Throws SizeError above kMaxGameOrder vertices,
/// ArgumentError on a size mismatch or negative f.
bool is_online_f_choosable(const Graph& g, const DegreeTable& f,
                           std::optional<VertexSet> arena = std::nullopt);
bool is_online_f_choosable_reference(const Graph& g, const DegreeTable& f);

/// Answer to a listed set S: an independent subset of S.
using PainterStrategy = std::function<VertexSet(const GameState&, VertexSet listed)>;
/// Next nonempty subset of the remaining vertices.
using ListerStrategy = std::function<VertexSet(const GameState&)>;

/// Kernel of the certificate digraph induced on S.
PainterStrategy kernel_painter(const Digraph& d);
/// Scans S by increasing budget (then index) and keeps what stays independent.
PainterStrategy greedy_painter(const Graph& g);
/// Lexicographically smallest winning independent subset, falling back to the smallest
/// maximal one when none wins.
PainterStrategy optimal_painter(std::shared_ptr<OnlineSolver> solver);

/// Lexicographically smallest S that defeats every answer, else all remaining vertices.
ListerStrategy optimal_lister(std::shared_ptr<OnlineSolver> solver);
/// Uniformly random nonempty subset of the remaining vertices.
ListerStrategy random_lister(std::uint64_t seed);
/// Plays the script in order (each entry cut down to the remaining vertices, empty entries
/// skipped), then lists every remaining vertex.
ListerStrategy scripted_lister(std::vector<VertexSet> script);

struct Round {
  VertexSet listed;
  VertexSet painted;
  DegreeTable budget;  ///< residual budgets after the round
};

struct GameOutcome {
  bool painter_wins = false;
  std::vector<Round> transcript;  ///< the line played, or a losing line for Painter
  std::uint64_t states = 0;       ///< positions examined
};

/// Plays one game on g[arena] from budgets f. Painter loses as soon as a listed, unpainted
/// vertex runs out of budget. Throws ArgumentError if Painter answers with a set that is not
/// an independent subset of S, or if f has the wrong size.
GameOutcome play_paint_game(const Graph& g, const DegreeTable& f, const PainterStrategy& painter,
                            const ListerStrategy& lister,
                            std::optional<VertexSet> arena = std::nullopt);

/// Every line of play against a fixed Painter. The painter must be a function of the state.
/// On a loss the transcript is one losing line. Throws SizeError above kMaxGameOrder vertices.
GameOutcome play_against_all_listers(const Graph& g, const DegreeTable& f,
                                     const PainterStrategy& painter,
                                     std::optional<VertexSet> arena = std::nullopt);

/// Kernel painter for a certificate-style digraph after checking that d covers g[arena].
/// Throws ArgumentError otherwise.
PainterStrategy checked_kernel_painter(const Graph& g, const Digraph& d, VertexSet arena);

}  // namespace indcover
