#include "indcover/generators.hpp"

#include "indcover/errors.hpp"

namespace indcover {

namespace {

void expect_params(std::string_view name, const std::vector<int>& params, std::size_t count) {
  if (params.size() != count) {
    throw ArgumentError(std::string(name) + " expects " + std::to_string(count) +
                        " parameter(s), got " + std::to_string(params.size()));
  }
}

void expect_at_least(std::string_view name, int value, int minimum) {
  if (value < minimum) {
    throw ArgumentError(std::string(name) + " requires parameter >= " + std::to_string(minimum));
  }
}

Graph complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph o_graph(int n) {
  // K_n - xy on 0..n-1 with x=0, y=1; K_{n-1} on n..2n-2.
  Graph g(2 * n - 1);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!(i == 0 && j == 1)) g.add_edge(i, j);
    }
  }
  for (int i = n; i < 2 * n - 1; ++i) {
    for (int j = i + 1; j < 2 * n - 1; ++j) g.add_edge(i, j);
  }
  const int to_x = (n - 1) / 2;
  for (int k = 0; k < n - 1; ++k) g.add_edge(k < to_x ? 0 : 1, n + k);
  return g;
}

}  // namespace

std::vector<std::string> named_families() {
  return {"complete", "empty",   "cycle",         "path",       "complete_bipartite",
          "star",     "wheel",   "bowtie",        "petersen",   "moser_spindle",
          "K4_minus_e", "O_n"};
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(u + a.order(), v + a.order());
  return g;
}

Graph make_named(std::string_view name, const std::vector<int>& params) {
  if (name == "complete") {
    expect_params(name, params, 1);
    expect_at_least(name, params[0], 0);
    return complete(params[0]);
  }
  if (name == "empty") {
    expect_params(name, params, 1);
    expect_at_least(name, params[0], 0);
    return Graph(params[0]);
  }
  if (name == "cycle") {
    expect_params(name, params, 1);
    expect_at_least(name, params[0], 3);
    return cycle(params[0]);
  }
  if (name == "path") {
    expect_params(name, params, 1);
    expect_at_least(name, params[0], 1);
    Graph g(params[0]);
    for (int i = 0; i + 1 < params[0]; ++i) g.add_edge(i, i + 1);
    return g;
  }
  if (name == "complete_bipartite") {
    expect_params(name, params, 2);
    expect_at_least(name, params[0], 0);
    expect_at_least(name, params[1], 0);
    const int a = params[0];
    Graph g(a + params[1]);
    for (int i = 0; i < a; ++i) {
      for (int j = a; j < a + params[1]; ++j) g.add_edge(i, j);
    }
    return g;
  }
  if (name == "star") {
    expect_params(name, params, 1);
    expect_at_least(name, params[0], 0);
    return make_named("complete_bipartite", {1, params[0]});
  }
  if (name == "wheel") {
    expect_params(name, params, 1);
    expect_at_least(name, params[0], 3);
    const int k = params[0];
    Graph g(k + 1);
    for (int i = 0; i < k; ++i) {
      g.add_edge(0, 1 + i);
      g.add_edge(1 + i, 1 + (i + 1) % k);
    }
    return g;
  }
  if (name == "bowtie") {
    expect_params(name, params, 0);
    return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
  }
  if (name == "petersen") {
    expect_params(name, params, 0);
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
      g.add_edge(i, (i + 1) % 5);
      g.add_edge(i, i + 5);
      g.add_edge(i + 5, (i + 2) % 5 + 5);
    }
    return g;
  }
  if (name == "moser_spindle") {
    expect_params(name, params, 0);
    return Graph(7, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3},
                     {0, 4}, {0, 5}, {4, 5}, {4, 6}, {5, 6}, {3, 6}});
  }
  if (name == "K4_minus_e") {
    expect_params(name, params, 0);
    return Graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  }
  if (name == "O_n") {
    expect_params(name, params, 1);
    expect_at_least(name, params[0], 3);
    if (2 * params[0] - 1 > kMaxVertices) throw ArgumentError("O_n too large for 64 vertices");
    return o_graph(params[0]);
  }
  throw ArgumentError("unknown graph family '" + std::string(name) + "'");
}

}  // namespace indcover
