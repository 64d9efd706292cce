#include <algorithm>
#include <deque>
#include <limits>

#include "indcover/errors.hpp"
#include "indcover/stats.hpp"
#include "indcover/structure.hpp"

namespace indcover {

namespace {

using Path = std::vector<int>;

EvenCycle make_result(const Graph& g, Path cycle) {
  EvenCycle out;
  auto chords = chords_of(g, cycle);
  out.cycle = std::move(cycle);
  if (!chords.empty()) out.chord = chords.front();
  return out;
}

Path walk_cycle_graph(const Graph& g) {
  Path cycle{0};
  int prev = -1;
  int cur = 0;
  while (true) {
    int next = -1;
    for (int w : g.neighbors(cur)) {
      if (w != prev) {
        next = w;
        break;
      }
    }
    if (next == 0) break;
    cycle.push_back(next);
    prev = cur;
    cur = next;
  }
  return cycle;
}

// Edge s1s2 with two nonadjacent common neighbours a, b.
std::optional<Path> find_diamond(const Graph& g) {
  for (auto [s1, s2] : g.edges()) {
    const VertexSet common = g.neighbors(s1) & g.neighbors(s2);
    for (int a : common) {
      const VertexSet far = common - g.neighbors(a) - VertexSet::single(a);
      if (!far.empty()) return Path{a, s1, far.first(), s2};
    }
  }
  return std::nullopt;
}

// Shortest u-v path in g[allowed] (u, v in allowed), or empty.
Path shortest_path(const Graph& g, int u, int v, VertexSet allowed) {
  std::vector<int> parent(static_cast<std::size_t>(g.order()), -1);
  std::deque<int> queue{u};
  VertexSet seen = VertexSet::single(u);
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    if (x == v) break;
    for (int w : g.neighbors(x) & allowed) {
      if (seen.contains(w)) continue;
      seen.insert(w);
      parent[w] = x;
      queue.push_back(w);
    }
  }
  if (!seen.contains(v)) return {};
  Path p{v};
  while (p.back() != u) p.push_back(parent[p.back()]);
  std::reverse(p.begin(), p.end());
  return p;
}

// Shortest cycle of g (simple, hence chordless).
Path girth_cycle(const Graph& g) {
  Path best;
  for (auto [u, v] : g.edges()) {
    Graph h = g;
    h.remove_edge(u, v);
    Path p = shortest_path(h, u, v, h.vertices());
    if (!p.empty() && (best.empty() || p.size() < best.size())) best = std::move(p);
  }
  return best;
}

// Shortest path x, p1..pm, y with x != y in `core` and every pi outside `core`, m >= 1.
Path shortest_ear(const Graph& g, VertexSet core) {
  Path best;
  const VertexSet outside = g.vertices() - core;
  for (int x : core) {
    for (int p : g.neighbors(x) & outside) {
      for (int y : core) {
        if (y == x) continue;
        for (int q : g.neighbors(y) & outside) {
          Path mid = shortest_path(g, p, q, outside);
          if (mid.empty()) continue;
          if (!best.empty() && mid.size() + 2 >= best.size()) continue;
          Path ear{x};
          ear.insert(ear.end(), mid.begin(), mid.end());
          ear.push_back(y);
          best = std::move(ear);
        }
      }
    }
  }
  return best;
}

// Path along `cycle` from index i forward to index j (inclusive).
Path arc(const Path& cycle, std::size_t i, std::size_t j) {
  Path out;
  const std::size_t len = cycle.size();
  for (std::size_t k = i;; k = (k + 1) % len) {
    out.push_back(cycle[k]);
    if (k == j) break;
  }
  return out;
}

// Joins path a (x..y) and path b (x..y) into a cycle.
Path join(const Path& a, const Path& b) {
  Path c = a;
  for (auto it = b.rbegin() + 1; it + 1 != b.rend(); ++it) c.push_back(*it);
  return c;
}

// Three internally disjoint x-y paths; two share a parity and close an even cycle.
Path even_from_theta(const Path& p1, const Path& p2, const Path& p3) {
  const Path* paths[3] = {&p1, &p2, &p3};
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      if ((paths[i]->size() + paths[j]->size()) % 2 == 0) return join(*paths[i], *paths[j]);
    }
  }
  return {};
}

// Diamond-free graph with a triangle: ear off a maximal clique.
Path from_clique(const Graph& g, const Path& triangle) {
  VertexSet clique;
  for (int v : triangle) clique.insert(v);
  for (int v = 0; v < g.order(); ++v) {
    if (!clique.contains(v) && clique.is_subset_of(g.neighbors(v))) clique.insert(v);
  }
  const Path ear = shortest_ear(g, clique);
  const int x = ear.front();
  const int y = ear.back();
  const int z = (clique - VertexSet{x, y}).first();
  // x..y along the ear closed by xy, or closed through z: lengths differ by one.
  if (ear.size() % 2 == 0) return ear;
  Path c = ear;
  c.push_back(z);
  return c;
}

// Triangle-free graph: girth cycle plus one shortest ear.
Path from_girth(const Graph& g) {
  const Path cycle = girth_cycle(g);
  if (cycle.size() % 2 == 0) return cycle;
  VertexSet core;
  for (int v : cycle) core.insert(v);
  const Path ear = shortest_ear(g, core);
  const auto pos = [&](int v) {
    return static_cast<std::size_t>(std::find(cycle.begin(), cycle.end(), v) - cycle.begin());
  };

  if (ear.size() == 3) {
    // One outside vertex p; its attachments on the cycle, in cycle order.
    const int p = ear[1];
    std::vector<std::size_t> at;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (g.has_edge(p, cycle[i])) at.push_back(i);
    }
    if (at.size() >= 3) {
      const std::size_t k = at.size();
      auto gap = [&](std::size_t i) {  // arc length from at[i] to at[i+1]
        return (at[(i + 1) % k] + cycle.size() - at[i]) % cycle.size();
      };
      for (std::size_t i = 0; i < k; ++i) {
        if (gap(i) % 2 == 0) {
          Path c = arc(cycle, at[i], at[(i + 1) % k]);
          c.push_back(p);
          return c;
        }
      }
      // All gaps odd: two consecutive gaps close an even cycle whose only chord is the
      // middle spoke, provided the complementary stretch has length >= 2.
      for (std::size_t i = 0; i < k; ++i) {
        const std::size_t rest = cycle.size() - gap(i) - gap((i + 1) % k);
        if (rest >= 2) {
          Path c = arc(cycle, at[i], at[(i + 2) % k]);
          c.push_back(p);
          return c;
        }
      }
    }
  }
  const std::size_t i = pos(ear.front());
  const std::size_t j = pos(ear.back());
  return even_from_theta(ear, arc(cycle, i, j), [&] {
    Path back = arc(cycle, j, i);
    std::reverse(back.begin(), back.end());
    return back;
  }());
}

}  // namespace

std::vector<Edge> chords_of(const Graph& g, const std::vector<int>& cycle) {
  std::vector<Edge> out;
  const std::size_t len = cycle.size();
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = i + 2; j < len; ++j) {
      if (i == 0 && j == len - 1) continue;
      if (g.has_edge(cycle[i], cycle[j])) {
        out.emplace_back(std::min(cycle[i], cycle[j]), std::max(cycle[i], cycle[j]));
      }
    }
  }
  return out;
}

EvenCycle find_even_cycle_one_chord(const Graph& g) {
  if (!is_two_connected(g)) throw ArgumentError("find_even_cycle_one_chord needs a 2-connected graph");
  const int n = g.order();
  if (g.size() == n * (n - 1) / 2) throw ArgumentError("find_even_cycle_one_chord: graph is complete");
  bool is_cycle = true;
  for (int v = 0; v < n; ++v) is_cycle = is_cycle && g.degree(v) == 2;
  if (is_cycle) {
    if (n % 2 == 1) throw ArgumentError("find_even_cycle_one_chord: graph is an odd cycle");
    return make_result(g, walk_cycle_graph(g));
  }
  if (auto diamond = find_diamond(g)) return make_result(g, *diamond);
  for (auto [u, v] : g.edges()) {
    const VertexSet common = g.neighbors(u) & g.neighbors(v);
    if (!common.empty()) return make_result(g, from_clique(g, {u, v, common.first()}));
  }
  return make_result(g, from_girth(g));
}

}  // namespace indcover
