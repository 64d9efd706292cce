#include "indcover/blocks.hpp"

#include <algorithm>

#include "indcover/stats.hpp"

namespace indcover {

namespace {

class Biconnected {
 public:
  explicit Biconnected(const Graph& g)
      : g_(g), disc_(g.order(), -1), low_(g.order(), 0) {}

  BlockTree run() {
    for (int v = 0; v < g_.order(); ++v) {
      if (disc_[v] >= 0) continue;
      if (g_.degree(v) == 0) {
        disc_[v] = timer_++;
        out_.blocks.push_back(VertexSet::single(v));
        continue;
      }
      int children = 0;
      dfs(v, -1, children);
      if (children > 1) out_.cutvertices.insert(v);
    }
    std::sort(out_.blocks.begin(), out_.blocks.end(), [](VertexSet a, VertexSet b) {
      if (a.first() != b.first()) return a.first() < b.first();
      return a.bits() < b.bits();
    });
    return out_;
  }

 private:
  void dfs(int v, int parent, int& root_children) {
    disc_[v] = low_[v] = timer_++;
    for (int w : g_.neighbors(v)) {
      if (disc_[w] < 0) {
        stack_.emplace_back(v, w);
        if (parent < 0) ++root_children;
        int ignored = 0;
        dfs(w, v, ignored);
        low_[v] = std::min(low_[v], low_[w]);
        if (low_[w] >= disc_[v]) {
          if (parent >= 0) out_.cutvertices.insert(v);
          VertexSet block;
          while (true) {
            auto [a, b] = stack_.back();
            stack_.pop_back();
            block.insert(a);
            block.insert(b);
            if (a == v && b == w) break;
          }
          out_.blocks.push_back(block);
        }
      } else if (w != parent && disc_[w] < disc_[v]) {
        stack_.emplace_back(v, w);
        low_[v] = std::min(low_[v], disc_[w]);
      }
    }
  }

  const Graph& g_;
  std::vector<int> disc_;
  std::vector<int> low_;
  std::vector<Edge> stack_;
  int timer_ = 0;
  BlockTree out_;
};

}  // namespace

std::vector<int> BlockTree::blocks_containing(int v) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].contains(v)) out.push_back(static_cast<int>(i));
  }
  return out;
}

BlockTree block_decomposition(const Graph& g) { return Biconnected(g).run(); }

bool is_two_connected(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  return block_decomposition(g).cutvertices.empty();
}

}  // namespace indcover
