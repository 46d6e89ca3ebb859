#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "homtopo/graphs.hpp"

namespace homtopo {

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// Small named graphs used across the test and verification suites: complete
/// graphs, cycles, paths, stars, Petersen, K_{2,3}, K_{3,3}, wheel, prism,
/// octahedron, Q and looped complete graphs.
std::vector<NamedGraph> named_corpus();
/// Loopless members of named_corpus with at most `max_vertices` vertices.
std::vector<NamedGraph> loopless_corpus(int max_vertices);

/// One representative of every isomorphism class of trees on n vertices.
std::vector<Graph> all_trees(int n);
/// Every forest on n vertices up to isomorphism, as disjoint unions of trees.
std::vector<Graph> all_forests(int n);

/// G(n, p) sample with a fixed seed.
Graph random_graph(int n, double p, std::uint64_t seed);

Graph complete_bipartite(int a, int b);
Graph wheel_graph(int spokes);
Graph prism_graph(int k);
Graph octahedron_graph();

}  // namespace homtopo
