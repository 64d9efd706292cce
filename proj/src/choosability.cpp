#include <numeric>
#include <string>

#include "indcover/choosability.hpp"
#include "indcover/errors.hpp"

namespace indcover {

namespace {

class ListColorer {
 public:
  ListColorer(const Graph& g, const ListAssignment& lists, VertexSet active)
      : g_(g), lists_(lists), order_(active.to_vector()), color_(g.order(), -1) {}

  bool run() { return place(0); }
  const std::vector<int>& coloring() const { return color_; }

 private:
  bool place(std::size_t index) {
    if (index == order_.size()) return true;
    const int v = order_[index];
    for (int c : lists_[v]) {
      bool clash = false;
      for (int w : g_.neighbors(v)) {
        if (color_[w] == c) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      color_[v] = c;
      if (place(index + 1)) return true;
    }
    color_[v] = -1;
    return false;
  }

  const Graph& g_;
  const ListAssignment& lists_;
  std::vector<int> order_;
  std::vector<int> color_;
};

// Assigns lists to `order` one vertex at a time; stops at the first uncolourable assignment.
class AssignmentSearch {
 public:
  AssignmentSearch(const Graph& g, const DegreeTable& f, VertexSet core)
      : g_(g), f_(f), order_(core.to_vector()), lists_(g.order()) {}

  bool find_bad() { return extend(0, 0); }
  const ListAssignment& lists() const { return lists_; }

 private:
  bool extend(std::size_t index, int palette) {
    if (index == order_.size()) {
      VertexSet core;
      for (int v : order_) core.insert(v);
      return !ListColorer(g_, lists_, core).run();
    }
    const int v = order_[index];
    const int need = f_[v];
    // old colours: a subset of [0, palette) of size j; new colours: palette .. palette+need-j-1
    std::vector<int> chosen;
    return choose_old(index, palette, v, need, 0, chosen);
  }

  bool choose_old(std::size_t index, int palette, int v, int need, int next,
                  std::vector<int>& chosen) {
    const int fresh = need - static_cast<int>(chosen.size());
    {
      lists_[v] = chosen;
      for (int c = 0; c < fresh; ++c) lists_[v].push_back(palette + c);
      if (extend(index + 1, palette + fresh)) return true;
    }
    if (fresh == 0) return false;
    for (int c = next; c < palette; ++c) {
      chosen.push_back(c);
      if (choose_old(index, palette, v, need, c + 1, chosen)) return true;
      chosen.pop_back();
    }
    return false;
  }

  const Graph& g_;
  const DegreeTable& f_;
  std::vector<int> order_;
  ListAssignment lists_;
};

}  // namespace

std::optional<std::vector<int>> list_coloring(const Graph& g, const ListAssignment& lists) {
  if (static_cast<int>(lists.size()) != g.order()) throw ArgumentError("list table size mismatch");
  ListColorer colorer(g, lists, g.vertices());
  if (!colorer.run()) return std::nullopt;
  return colorer.coloring();
}

ChoosabilityVerdict is_f_choosable(const Graph& g, const DegreeTable& f) {
  if (g.order() > kMaxChoosabilityOrder) {
    throw SizeError("is_f_choosable supports at most 8 vertices, got " +
                    std::to_string(g.order()));
  }
  if (static_cast<int>(f.size()) != g.order()) throw ArgumentError("f table size mismatch");
  for (int x : f) {
    if (x < 0) throw ArgumentError("f must be nonnegative");
  }
  if (std::accumulate(f.begin(), f.end(), 0) > kMaxChoosabilityListTotal) {
    throw SizeError("is_f_choosable supports list sizes summing to at most 20");
  }

  VertexSet core = g.vertices();
  for (bool dropped = true; dropped;) {
    dropped = false;
    for (int v : VertexSet(core)) {
      if (f[v] > g.degree_in(v, core)) {
        core.erase(v);
        dropped = true;
      }
    }
  }

  AssignmentSearch search(g, f, core);
  ChoosabilityVerdict out;
  if (!search.find_bad()) return out;
  ListAssignment lists = search.lists();
  int palette = 0;
  for (const auto& list : lists) {
    for (int c : list) palette = std::max(palette, c + 1);
  }
  for (int v : g.vertices() - core) {
    lists[v].clear();
    for (int c = 0; c < f[v]; ++c) lists[v].push_back(palette++);
  }
  out.choosable = false;
  out.counterexample = std::move(lists);
  return out;
}

}  // namespace indcover
