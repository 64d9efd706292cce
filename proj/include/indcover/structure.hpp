#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "indcover/blocks.hpp"
#include "indcover/graph.hpp"
#include "indcover/rational.hpp"

namespace indcover {

enum class BlockKind { clique, odd_cycle, other };

const char* to_string(BlockKind kind);

struct GallaiVerdict {
  bool is_gallai = false;
  BlockTree blocks;
  std::vector<BlockKind> kinds;        ///< parallel to blocks.blocks
  std::optional<VertexSet> offending;  ///< first block that is neither clique nor odd cycle
};

BlockKind classify_block(const Graph& g, VertexSet block);

/// Every block is a clique or an odd cycle. Throws ArgumentError on a disconnected or
/// empty graph; use is_gallai_forest for those.
GallaiVerdict is_gallai_tree(const Graph& g);
GallaiVerdict is_gallai_forest(const Graph& g);

struct EvenCycle {
  std::vector<int> cycle;              ///< consecutive vertices; closing edge back() ~ front()
  std::optional<Edge> chord;
};

/// Edges of g joining two cycle vertices that are not consecutive on the cycle.
std::vector<Edge> chords_of(const Graph& g, const std::vector<int>& cycle);

/// Even cycle with at most one chord in a 2-connected graph that is neither complete nor
/// an odd cycle. Constructive: diamond search, then shortest ears off a maximal clique or a
/// girth cycle. Throws ArgumentError when the precondition fails.
EvenCycle find_even_cycle_one_chord(const Graph& g);

/// Maximum independent cover: max over independent I of sum of degrees.
struct MicResult {
  int value = 0;
  VertexSet witness;  ///< lexicographically smallest optimal set
};

MicResult mic(const Graph& g);

struct LowHighSplit {
  VertexSet high;  ///< degree > delta
  VertexSet low;   ///< degree == delta
  bool high_edgeless = true;
  bool max_is_min_plus_one = false;  ///< Delta == delta + 1
};

LowHighSplit low_high_split(const Graph& g);

/// (delta - 1 + 2/delta)|L| - 2||L||, exactly. Throws UndefinedStatistic when delta == 0.
Rational sigma(const Graph& g);

/// Independence number of the subgraph induced on the degree-t vertices.
int beta_t(const Graph& g, int t);

struct InequalitySides {
  Rational lhs;
  Rational rhs;
  bool holds = false;
};

/// (k-1) beta_{k-1} + sum (k-1-d(v)) >= 2(k-3)/(k-2) |G| - (k-1)(k-4)/(k-2) c(G).
/// Requires k >= 6, a Gallai forest, Delta <= k-1 and no K_k; ArgumentError otherwise.
InequalitySides gallai_count_check(const Graph& forest, int k);

struct GallaiTreeParams {
  int block_count = 1;
  int max_block_size = 2;
  std::uint64_t seed = 0;
  std::optional<int> max_degree;  ///< blocks are shrunk or skipped to respect the cap
};

/// Random connected Gallai tree glued from endblocks at uniformly chosen existing vertices.
/// Each block is a clique (size 2..max_block_size) or, with probability 1/2, an odd cycle
/// (length 3..max_block_size). Reproducible from the seed. With a degree cap, generation
/// stops early once no vertex can take another block; order never exceeds 64.
Graph random_gallai_tree(const GallaiTreeParams& params);
inline Graph random_gallai_tree(int block_count, int max_block_size, std::uint64_t seed) {
  return random_gallai_tree({block_count, max_block_size, seed, std::nullopt});
}

struct TriangleFreeMic {
  int mic = 0;
  double rhs = 0.0;  ///< (1/4) sum lg d(v)
  bool holds = false;
};

/// Tolerance applied to the logarithmic side of triangle_free_mic_check.
inline constexpr double kLogTolerance = 1e-9;

/// Throws ArgumentError if g has a triangle or a vertex of degree 0.
TriangleFreeMic triangle_free_mic_check(const Graph& g);

}  // namespace indcover
