#include "homtopo/corpus.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "homtopo/errors.hpp"

namespace homtopo {

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

Graph wheel_graph(int spokes) {
  if (spokes < 3) throw DomainError("wheel_graph: need at least 3 spokes");
  Graph g = disjoint_union(cycle_graph(spokes), Graph(1));
  for (int i = 0; i < spokes; ++i) g.add_edge(i, spokes);
  return g;
}

Graph prism_graph(int k) {
  Graph g = disjoint_union(cycle_graph(k), cycle_graph(k));
  for (int i = 0; i < k; ++i) g.add_edge(i, k + i);
  return g;
}

Graph octahedron_graph() { return complement(disjoint_union(disjoint_union(complete_graph(2), complete_graph(2)), complete_graph(2)), false); }

std::vector<NamedGraph> named_corpus() {
  std::vector<NamedGraph> out;
  for (int n = 1; n <= 5; ++n) out.push_back({"K" + std::to_string(n), complete_graph(n)});
  for (int m = 3; m <= 8; ++m) out.push_back({"C" + std::to_string(m), cycle_graph(m)});
  for (int n = 2; n <= 6; ++n) out.push_back({"L" + std::to_string(n), path_graph(n)});
  out.push_back({"star:3", star_graph(3)});
  out.push_back({"star:4", star_graph(4)});
  out.push_back({"K2,3", complete_bipartite(2, 3)});
  out.push_back({"K3,3", complete_bipartite(3, 3)});
  out.push_back({"wheel:5", wheel_graph(5)});
  out.push_back({"prism:3", prism_graph(3)});
  out.push_back({"octahedron", octahedron_graph()});
  out.push_back({"petersen", petersen_graph()});
  out.push_back({"Q", q_graph()});
  out.push_back({"K2o", looped_complete_graph(2)});
  out.push_back({"K3o", looped_complete_graph(3)});
  return out;
}

std::vector<NamedGraph> loopless_corpus(int max_vertices) {
  std::vector<NamedGraph> out;
  for (auto& ng : named_corpus())
    if (!ng.graph.has_loops() && ng.graph.order() <= max_vertices) out.push_back(std::move(ng));
  return out;
}

namespace {

Graph tree_from_pruefer(const std::vector<int>& code, int n) {
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int v : code) ++degree[static_cast<std::size_t>(v)];
  Graph t(n);
  for (int v : code) {
    for (int leaf = 0; leaf < n; ++leaf) {
      if (degree[static_cast<std::size_t>(leaf)] == 1) {
        t.add_edge(leaf, v);
        --degree[static_cast<std::size_t>(leaf)];
        --degree[static_cast<std::size_t>(v)];
        break;
      }
    }
  }
  int a = -1;
  for (int v = 0; v < n; ++v) {
    if (degree[static_cast<std::size_t>(v)] != 1) continue;
    if (a < 0) {
      a = v;
    } else {
      t.add_edge(a, v);
      break;
    }
  }
  return t;
}

}  // namespace

std::vector<Graph> all_trees(int n) {
  if (n < 1 || n > 10) throw DomainError("all_trees: need 1 <= n <= 10");
  if (n == 1) return {Graph(1)};
  if (n == 2) return {complete_graph(2)};
  std::vector<Graph> out;
  std::vector<int> code(static_cast<std::size_t>(n - 2), 0);
  while (true) {
    Graph t = tree_from_pruefer(code, n);
    const bool seen = std::any_of(out.begin(), out.end(), [&](const Graph& o) { return are_isomorphic(o, t); });
    if (!seen) out.push_back(std::move(t));
    std::size_t i = 0;
    while (i < code.size() && ++code[i] == n) code[i++] = 0;
    if (i == code.size()) break;
  }
  return out;
}

std::vector<Graph> all_forests(int n) {
  if (n < 1 || n > 10) throw DomainError("all_forests: need 1 <= n <= 10");
  // (size, index) pairs enumerated in non-increasing order give each multiset once
  std::vector<std::vector<Graph>> trees(static_cast<std::size_t>(n + 1));
  for (int k = 1; k <= n; ++k) trees[static_cast<std::size_t>(k)] = all_trees(k);
  std::vector<Graph> out;
  std::function<void(int, int, int, Graph)> extend = [&](int left, int max_size, int max_index, Graph acc) {
    if (left == 0) {
      out.push_back(std::move(acc));
      return;
    }
    for (int s = std::min(left, max_size); s >= 1; --s) {
      const auto& ts = trees[static_cast<std::size_t>(s)];
      const int top = s == max_size ? max_index : static_cast<int>(ts.size()) - 1;
      for (int i = top; i >= 0; --i) extend(left - s, s, i, disjoint_union(acc, ts[static_cast<std::size_t>(i)]));
    }
  };
  extend(n, n, static_cast<int>(trees[static_cast<std::size_t>(n)].size()) - 1, Graph(0));
  return out;
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

}  // namespace homtopo
