#include "indcover/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>

#include "indcover/errors.hpp"
#include "indcover/graph6.hpp"
#include "indcover/stats.hpp"

namespace indcover {

namespace {

using Partition = std::vector<VertexSet>;
using Form = std::vector<std::uint64_t>;

// Equitable refinement: split every cell by the number of neighbours in each splitter cell,
// sub-cells ordered by that count, until nothing changes.
void refine(const Graph& g, Partition& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t w = 0; w < cells.size(); ++w) {
      const VertexSet splitter = cells[w];
      Partition next;
      next.reserve(cells.size() + 4);
      for (VertexSet cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::map<int, VertexSet> by_count;
        for (int v : cell) by_count[g.degree_in(v, splitter)].insert(v);
        if (by_count.size() > 1) changed = true;
        for (const auto& [count, part] : by_count) next.push_back(part);
      }
      cells = std::move(next);
    }
  }
}

Form form_of(const Graph& g, const Partition& cells) {
  std::vector<int> position(static_cast<std::size_t>(g.order()));
  for (std::size_t i = 0; i < cells.size(); ++i) position[cells[i].first()] = static_cast<int>(i);
  Form rows(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    std::uint64_t row = 0;
    for (int w : g.neighbors(cells[i].first())) row |= std::uint64_t{1} << position[w];
    rows[i] = row;
  }
  return rows;
}

bool are_twins(const Graph& g, int u, int v) {
  const VertexSet pair{u, v};
  return (g.neighbors(u) - pair) == (g.neighbors(v) - pair);
}

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g) {}

  Graph run() {
    Partition root;
    if (g_.order() > 0) root.push_back(g_.vertices());
    search(std::move(root));
    Graph out(g_.order());
    for (int i = 0; i < g_.order(); ++i) {
      for (int j = i + 1; j < g_.order(); ++j) {
        if ((best_[i] >> j) & 1U) out.add_edge(i, j);
      }
    }
    return out;
  }

 private:
  void search(Partition cells) {
    refine(g_, cells);
    auto target = std::find_if(cells.begin(), cells.end(), [](VertexSet c) { return c.size() > 1; });
    if (target == cells.end()) {
      Form f = form_of(g_, cells);
      if (!have_best_ || f < best_) {
        best_ = std::move(f);
        have_best_ = true;
      }
      return;
    }
    const auto t = static_cast<std::size_t>(target - cells.begin());
    const VertexSet cell = cells[t];
    std::vector<int> tried;
    for (int v : cell) {
      bool twin = std::any_of(tried.begin(), tried.end(), [&](int u) { return are_twins(g_, u, v); });
      if (twin) continue;
      tried.push_back(v);
      Partition child;
      child.reserve(cells.size() + 1);
      child.insert(child.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(t));
      child.push_back(VertexSet::single(v));
      child.push_back(cell - VertexSet::single(v));
      child.insert(child.end(), cells.begin() + static_cast<std::ptrdiff_t>(t) + 1, cells.end());
      search(std::move(child));
    }
  }

  const Graph& g_;
  Form best_;
  bool have_best_ = false;
};

std::vector<Graph> extend_level(const std::vector<Graph>& previous,
                                const std::function<bool(const Graph&)>& keep) {
  std::map<std::string, Graph> seen;
  for (const Graph& base : previous) {
    const int k = base.order();
    for_each_subset(VertexSet::range(k), [&](VertexSet nbrs) {
      Graph g(k + 1);
      for (auto [u, v] : base.edges()) g.add_edge(u, v);
      for (int v : nbrs) g.add_edge(v, k);
      if (keep && !keep(g)) return;
      Graph c = canonical_form(g);
      seen.try_emplace(encode_graph6(c), std::move(c));
    });
  }
  std::vector<Graph> out;
  out.reserve(seen.size());
  for (auto& [key, g] : seen) out.push_back(std::move(g));
  std::stable_sort(out.begin(), out.end(),
                   [](const Graph& a, const Graph& b) { return a.size() < b.size(); });
  return out;
}

std::vector<Graph> select(const std::vector<Graph>& all, bool connected_only) {
  if (!connected_only) return all;
  std::vector<Graph> out;
  for (const Graph& g : all) {
    if (is_connected(g)) out.push_back(g);
  }
  return out;
}

}  // namespace

Graph canonical_form(const Graph& g) { return Canonizer(g).run(); }

std::vector<Graph> enumerate_graphs(int n, bool connected_only) {
  if (n < 0) throw ArgumentError("negative vertex count");
  if (n > kMaxEnumerateOrder) {
    throw SizeError("enumerate_graphs supports n <= 8; use a graph6 corpus file for n = " +
                    std::to_string(n));
  }
  static std::mutex mutex;
  static std::vector<std::vector<Graph>> levels{{Graph(0)}};
  std::lock_guard lock(mutex);
  while (static_cast<int>(levels.size()) <= n) levels.push_back(extend_level(levels.back(), {}));
  return select(levels[static_cast<std::size_t>(n)], connected_only);
}

std::vector<Graph> enumerate_hereditary(int n, bool connected_only,
                                        const std::function<bool(const Graph&)>& keep) {
  if (n < 0) throw ArgumentError("negative vertex count");
  if (n > kMaxHereditaryOrder) {
    throw SizeError("enumerate_hereditary supports n <= 10, got " + std::to_string(n));
  }
  std::vector<Graph> level{Graph(0)};
  if (keep && !keep(level.front())) return {};
  for (int k = 1; k <= n; ++k) level = extend_level(level, keep);
  return select(level, connected_only);
}

}  // namespace indcover
