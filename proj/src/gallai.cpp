#include "indcover/structure.hpp"

#include <algorithm>
#include <random>

#include "indcover/errors.hpp"
#include "indcover/stats.hpp"

namespace indcover {

namespace {

GallaiVerdict classify_all(const Graph& g) {
  GallaiVerdict out;
  out.blocks = block_decomposition(g);
  out.is_gallai = true;
  for (VertexSet b : out.blocks.blocks) {
    const BlockKind kind = classify_block(g, b);
    out.kinds.push_back(kind);
    if (kind == BlockKind::other && !out.offending) {
      out.offending = b;
      out.is_gallai = false;
    }
  }
  return out;
}

// Unbiased enough for test-instance generation and identical on every standard library.
int draw(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace

const char* to_string(BlockKind kind) {
  switch (kind) {
    case BlockKind::clique: return "clique";
    case BlockKind::odd_cycle: return "odd_cycle";
    case BlockKind::other: return "other";
  }
  return "other";
}

BlockKind classify_block(const Graph& g, VertexSet block) {
  const int k = block.size();
  const int m = g.edges_within(block);
  if (m == k * (k - 1) / 2) return BlockKind::clique;
  if (k % 2 == 1 && m == k) {
    bool all_two = true;
    for (int v : block) all_two = all_two && g.degree_in(v, block) == 2;
    if (all_two) return BlockKind::odd_cycle;
  }
  return BlockKind::other;
}

GallaiVerdict is_gallai_tree(const Graph& g) {
  if (g.order() == 0 || !is_connected(g)) {
    throw ArgumentError("is_gallai_tree needs a nonempty connected graph; use is_gallai_forest");
  }
  return classify_all(g);
}

GallaiVerdict is_gallai_forest(const Graph& g) { return classify_all(g); }

InequalitySides gallai_count_check(const Graph& forest, int k) {
  if (k < 6) throw ArgumentError("gallai_count_check requires k >= 6");
  if (!is_gallai_forest(forest).is_gallai) throw ArgumentError("input is not a Gallai forest");
  if (max_degree(forest) > k - 1) throw ArgumentError("maximum degree exceeds k-1");
  if (contains_clique(forest, k)) throw ArgumentError("input contains K_k");

  InequalitySides s;
  std::int64_t lhs = static_cast<std::int64_t>(k - 1) * beta_t(forest, k - 1);
  for (int v = 0; v < forest.order(); ++v) lhs += k - 1 - forest.degree(v);
  s.lhs = Rational(lhs);
  const auto c = static_cast<std::int64_t>(components(forest).size());
  s.rhs = Rational(2 * (k - 3), k - 2) * forest.order() - Rational((k - 1) * (k - 4), k - 2) * c;
  s.holds = s.lhs >= s.rhs;
  return s;
}

Graph random_gallai_tree(const GallaiTreeParams& params) {
  if (params.block_count < 1) throw ArgumentError("block_count must be >= 1");
  if (params.max_block_size < 2) throw ArgumentError("max_block_size must be >= 2");
  if (params.max_degree && *params.max_degree < 1) throw ArgumentError("max_degree must be >= 1");

  std::mt19937_64 rng(params.seed);
  std::vector<Edge> edges;
  std::vector<int> degree;
  int n = 0;

  struct Shape {
    bool cycle;
    int size;
  };
  auto pick_shape = [&]() {
    const bool cycle = params.max_block_size >= 3 && draw(rng, 0, 1) == 1;
    if (cycle) {
      const int odd_choices = (params.max_block_size - 1) / 2;  // 3, 5, ..., <= max
      return Shape{true, 3 + 2 * draw(rng, 0, odd_choices - 1)};
    }
    return Shape{false, draw(rng, 2, params.max_block_size)};
  };
  // Degree gained by the attachment vertex.
  auto gain = [](Shape s) { return s.cycle ? 2 : s.size - 1; };
  // Lays out a block on `anchor` plus fresh vertices.
  auto place = [&](Shape s, int anchor) {
    std::vector<int> members{anchor};
    for (int i = 1; i < s.size; ++i) {
      members.push_back(n++);
      degree.push_back(0);
    }
    auto join = [&](int a, int b) {
      edges.emplace_back(a, b);
      ++degree[a];
      ++degree[b];
    };
    if (s.cycle) {
      for (int i = 0; i < s.size; ++i) join(members[i], members[(i + 1) % s.size]);
    } else {
      for (int i = 0; i < s.size; ++i) {
        for (int j = i + 1; j < s.size; ++j) join(members[i], members[j]);
      }
    }
  };
  auto fits_cap = [&](int d) { return !params.max_degree || d <= *params.max_degree; };

  Shape first = pick_shape();
  while (!fits_cap(first.cycle ? 2 : first.size - 1)) {
    first = first.cycle || first.size <= 2 ? Shape{false, 2} : Shape{false, first.size - 1};
  }
  n = 1;
  degree.push_back(0);
  place(first, 0);

  for (int b = 1; b < params.block_count; ++b) {
    Shape s = pick_shape();
    while (true) {
      if (n + s.size - 1 > kMaxVertices) {
        s = Shape{false, std::max(2, kMaxVertices - n + 1)};
        if (n >= kMaxVertices) break;
      }
      std::vector<int> hosts;
      for (int v = 0; v < n; ++v) {
        if (fits_cap(degree[v] + gain(s))) hosts.push_back(v);
      }
      if (!hosts.empty()) {
        place(s, hosts[static_cast<std::size_t>(draw(rng, 0, static_cast<int>(hosts.size()) - 1))]);
        break;
      }
      if (!s.cycle && s.size == 2) break;
      s = s.cycle ? Shape{false, 2} : Shape{false, s.size - 1};
    }
    if (n >= kMaxVertices) break;
  }
  return Graph(n, edges);
}

}  // namespace indcover
