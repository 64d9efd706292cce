#pragma once

// Brute-force reference implementations. Deliberately naive and independent of the library
// algorithms they check; they only use Graph/Digraph accessors.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "indcover/digraph.hpp"
#include "indcover/graph.hpp"

namespace oracle {

using indcover::Digraph;
using indcover::Graph;
using indcover::VertexSet;

inline bool bit(std::uint64_t x, int i) { return (x >> i) & 1U; }

// graph6 straight from the format description: N(n) then the upper triangle column by
// column, six bits per byte, each byte offset by 63.
inline std::string graph6(const Graph& g) {
  const int n = g.order();
  std::string out(1, static_cast<char>(63 + n));
  std::vector<int> bits;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j) ? 1 : 0);
  }
  while (bits.size() % 6 != 0) bits.push_back(0);
  for (std::size_t k = 0; k < bits.size(); k += 6) {
    int value = 0;
    for (int b = 0; b < 6; ++b) value = value * 2 + bits[k + b];
    out.push_back(static_cast<char>(63 + value));
  }
  return out;
}

inline bool independent(const Graph& g, std::uint64_t s) {
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (bit(s, u) && bit(s, v) && g.has_edge(u, v)) return false;
    }
  }
  return true;
}

inline int alpha(const Graph& g) {
  int best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.order()); ++s) {
    if (independent(g, s)) best = std::max(best, std::popcount(s));
  }
  return best;
}

inline int clique(const Graph& g) {
  int best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.order()); ++s) {
    bool ok = true;
    for (int u = 0; u < g.order() && ok; ++u) {
      for (int v = u + 1; v < g.order() && ok; ++v) {
        if (bit(s, u) && bit(s, v) && !g.has_edge(u, v)) ok = false;
      }
    }
    if (ok) best = std::max(best, std::popcount(s));
  }
  return best;
}

inline int mic(const Graph& g) {
  int best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.order()); ++s) {
    if (!independent(g, s)) continue;
    int total = 0;
    for (int v = 0; v < g.order(); ++v) {
      if (bit(s, v)) total += g.degree(v);
    }
    best = std::max(best, total);
  }
  return best;
}

inline bool connected_on(const Graph& g, std::uint64_t s) {
  if (s == 0) return true;
  std::uint64_t seen = s & (~s + 1);
  for (bool grew = true; grew;) {
    grew = false;
    for (int v = 0; v < g.order(); ++v) {
      if (!bit(seen, v)) continue;
      for (int w = 0; w < g.order(); ++w) {
        if (bit(s, w) && !bit(seen, w) && g.has_edge(v, w)) {
          seen |= std::uint64_t{1} << w;
          grew = true;
        }
      }
    }
  }
  return seen == s;
}

inline bool two_connected_on(const Graph& g, std::uint64_t s) {
  if (std::popcount(s) < 3 || !connected_on(g, s)) return false;
  for (int v = 0; v < g.order(); ++v) {
    if (bit(s, v) && !connected_on(g, s & ~(std::uint64_t{1} << v))) return false;
  }
  return true;
}

// Blocks: maximal 2-connected vertex sets, plus bridges and isolated vertices.
inline std::vector<std::uint64_t> blocks(const Graph& g) {
  const int n = g.order();
  std::vector<std::uint64_t> cores;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    if (two_connected_on(g, s)) cores.push_back(s);
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t s : cores) {
    bool maximal = true;
    for (std::uint64_t t : cores) {
      if (t != s && (s & t) == s) maximal = false;
    }
    if (maximal) out.push_back(s);
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v)) continue;
      const std::uint64_t pair = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
      bool inside = false;
      for (std::uint64_t s : out) inside = inside || (s & pair) == pair;
      if (!inside) out.push_back(pair);
    }
    if (g.degree(u) == 0) out.push_back(std::uint64_t{1} << u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline int edges_on(const Graph& g, std::uint64_t s) {
  int m = 0;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) m += bit(s, u) && bit(s, v) && g.has_edge(u, v);
  }
  return m;
}

inline bool gallai_tree(const Graph& g) {
  if (!connected_on(g, (std::uint64_t{1} << g.order()) - 1)) return false;
  for (std::uint64_t b : blocks(g)) {
    const int k = std::popcount(b);
    const int m = edges_on(g, b);
    const bool complete = m == k * (k - 1) / 2;
    const bool odd_cycle = k % 2 == 1 && m == k;
    if (!complete && !odd_cycle) return false;
  }
  return true;
}

inline int chromatic(const Graph& g) {
  const int n = g.order();
  for (int k = 0;; ++k) {
    std::vector<int> c(n, 0);
    const std::uint64_t total = static_cast<std::uint64_t>(std::pow(k, n) + 0.5);
    if (n == 0) return 0;
    for (std::uint64_t code = 0; code < total; ++code) {
      std::uint64_t x = code;
      for (int v = 0; v < n; ++v) {
        c[v] = static_cast<int>(x % k);
        x /= k;
      }
      bool ok = true;
      for (int u = 0; u < n && ok; ++u) {
        for (int v = u + 1; v < n && ok; ++v) ok = !(g.has_edge(u, v) && c[u] == c[v]);
      }
      if (ok) return k;
    }
  }
}

// Kernel of d on `within` by trying every subset.
inline bool has_kernel(const Digraph& d, std::uint64_t within) {
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << d.order()); ++k) {
    if ((k & ~within) != 0) continue;
    bool ok = true;
    for (auto [u, v] : d.arcs()) {
      if (bit(k, u) && bit(k, v)) ok = false;
    }
    for (int v = 0; v < d.order() && ok; ++v) {
      if (!bit(within, v) || bit(k, v)) continue;
      bool absorbed = false;
      for (auto [a, b] : d.arcs()) absorbed = absorbed || (a == v && bit(k, b));
      ok = absorbed;
    }
    if (ok) return true;
  }
  return false;
}

inline bool kernel_perfect(const Digraph& d) {
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << d.order()); ++s) {
    if (!has_kernel(d, s)) return false;
  }
  return true;
}

// (EE, EO) over all arc subsets.
inline std::pair<std::int64_t, std::int64_t> eulerian_counts(const Digraph& d) {
  const auto& arcs = d.arcs();
  std::int64_t even = 0;
  std::int64_t odd = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << arcs.size()); ++s) {
    std::vector<int> balance(d.order(), 0);
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      if (bit(s, static_cast<int>(i))) {
        ++balance[arcs[i].first];
        --balance[arcs[i].second];
      }
    }
    if (std::all_of(balance.begin(), balance.end(), [](int b) { return b == 0; })) {
      (std::popcount(s) % 2 == 0 ? even : odd) += 1;
    }
  }
  return {even, odd};
}

// Some orientation gives every v in-degree >= demand(v).
inline bool orientable(const Graph& g, const std::vector<int>& demand) {
  const auto edges = g.edges();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << edges.size()); ++s) {
    std::vector<int> in(g.order(), 0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      ++in[bit(s, static_cast<int>(i)) ? edges[i].first : edges[i].second];
    }
    bool ok = true;
    for (int v = 0; v < g.order() && ok; ++v) ok = in[v] >= demand[v];
    if (ok) return true;
  }
  return false;
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
  Graph out(g.order());
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

}  // namespace oracle

namespace oracle {

// Some even cycle whose vertex set induces at most one extra edge, by DFS over simple cycles.
inline bool has_even_cycle_one_chord(const Graph& g) {
  const int n = g.order();
  std::vector<int> path;
  std::uint64_t used = 0;
  bool found = false;
  auto close = [&]() {
    const int len = static_cast<int>(path.size());
    if (len < 4 || len % 2 != 0 || !g.has_edge(path.back(), path.front())) return;
    std::uint64_t on = 0;
    for (int v : path) on |= std::uint64_t{1} << v;
    if (edges_on(g, on) <= len + 1) found = true;
  };
  std::function<void(int)> grow = [&](int v) {
    if (found) return;
    close();
    for (int w = path.front() + 1; w < n; ++w) {
      if (!bit(used, w) && g.has_edge(v, w)) {
        path.push_back(w);
        used |= std::uint64_t{1} << w;
        grow(w);
        used &= ~(std::uint64_t{1} << w);
        path.pop_back();
      }
    }
  };
  for (int s = 0; s < n && !found; ++s) {
    path = {s};
    used = std::uint64_t{1} << s;
    grow(s);
  }
  return found;
}

}  // namespace oracle
