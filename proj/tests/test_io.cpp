#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "homtopo/corpus.hpp"
#include "homtopo/errors.hpp"
#include "homtopo/io.hpp"
#include "homtopo/verify.hpp"

using namespace homtopo;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("homtopo_test_" + name);
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST(GraphJson, RoundTrip) {
  for (const auto& ng : named_corpus()) EXPECT_EQ(parse_graph_json(graph_to_json(ng.graph)), ng.graph) << ng.name;
  EXPECT_EQ(graph_to_json(path_graph(3)), "{\"n\":3,\"edges\":[[0,1],[1,2]]}\n");
  EXPECT_TRUE(parse_graph_json(R"({"n": 2, "edges": [[0, 0], [0, 1]]})").has_loop(0));
}

TEST(GraphJson, Errors) {
  EXPECT_THROW(parse_graph_json("{"), DomainError);
  EXPECT_THROW(parse_graph_json(R"({"edges": []})"), DomainError);
  EXPECT_THROW(parse_graph_json(R"({"n": 2, "edges": [[0, 2]]})"), DomainError);
  EXPECT_THROW(parse_graph_json(R"({"n": 2, "edges": [[0]]})"), DomainError);
  EXPECT_THROW(parse_graph_json(R"({"n": 65, "edges": []})"), DomainError);
  EXPECT_THROW(parse_graph_json(R"({"n": "x", "edges": []})"), DomainError);
}

TEST(EdgeList, RoundTripAndComments) {
  for (const auto& ng : named_corpus()) EXPECT_EQ(parse_edge_list(graph_to_edge_list(ng.graph)), ng.graph) << ng.name;
  const Graph g = parse_edge_list("# a path\nn 3\n0 1  # first\n\n1 2\n");
  EXPECT_EQ(g, path_graph(3));
}

TEST(EdgeList, Errors) {
  EXPECT_THROW(parse_edge_list(""), DomainError);
  EXPECT_THROW(parse_edge_list("0 1\n"), DomainError);
  EXPECT_THROW(parse_edge_list("n 3\n0\n"), DomainError);
  EXPECT_THROW(parse_edge_list("n 3\na b\n"), DomainError);
  EXPECT_THROW(parse_edge_list("n 3\n0 3\n"), DomainError);
}

TEST(LoadGraph, NamesAndFiles) {
  EXPECT_EQ(load_graph("K5"), complete_graph(5));
  EXPECT_EQ(load_graph("wheel:5"), wheel_graph(5));
  EXPECT_EQ(load_graph("prism:4"), prism_graph(4));
  EXPECT_EQ(load_graph("petersen"), petersen_graph());
  EXPECT_TRUE(are_isomorphic(load_graph("Kneser:2,5"), petersen_graph()));
  EXPECT_EQ(load_graph(write_temp("g.json", graph_to_json(cycle_graph(5))).string()), cycle_graph(5));
  EXPECT_EQ(load_graph(write_temp("g.txt", graph_to_edge_list(star_graph(3))).string()), star_graph(3));
  EXPECT_THROW(load_graph("no-such-graph"), DomainError);
  EXPECT_THROW(load_graph("wheel:x"), DomainError);
  EXPECT_THROW(load_graph("wheel:5x"), DomainError);
  EXPECT_THROW(load_graph("wheel:2"), DomainError);
}

TEST(Corpus, TreeAndForestCounts) {
  const std::vector<std::size_t> trees{1, 1, 1, 2, 3, 6, 11, 23};
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(all_trees(n).size(), trees[static_cast<std::size_t>(n - 1)]) << n;
  const std::vector<std::size_t> forests{1, 2, 3, 6, 10, 20, 37};
  for (int n = 1; n <= 7; ++n) {
    const auto fs = all_forests(n);
    EXPECT_EQ(fs.size(), forests[static_cast<std::size_t>(n - 1)]) << n;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      EXPECT_TRUE(is_forest(fs[i]));
      EXPECT_EQ(fs[i].order(), n);
      for (std::size_t j = 0; j < i; ++j) EXPECT_FALSE(are_isomorphic(fs[i], fs[j]));
    }
  }
  for (const Graph& t : all_trees(7)) {
    EXPECT_EQ(component_count(t), 1);
    EXPECT_EQ(t.edge_count(), 6u);
  }
  EXPECT_THROW(all_trees(0), DomainError);
}

TEST(Corpus, NamedGraphs) {
  const auto corpus = named_corpus();
  for (const auto& ng : loopless_corpus(64)) EXPECT_FALSE(ng.graph.has_loops()) << ng.name;
  for (const auto& ng : loopless_corpus(6)) EXPECT_LE(ng.graph.order(), 6);
  EXPECT_EQ(chromatic_number(octahedron_graph()), 3);
  EXPECT_EQ(chromatic_number(wheel_graph(5)), 4);
  EXPECT_EQ(random_graph(9, 0.3, 5), random_graph(9, 0.3, 5));
}

TEST(Reports, JsonShapes) {
  ColoringBound b;
  b.free = true;
  b.quotient_betti = {1, 1};
  b.sw_height = 1;
  b.bound = 3;
  EXPECT_EQ(equivariant_json(b), "{\"free\":true,\"quotient_betti\":[1,1],\"sw_height\":1,\"bound\":3}\n");
  ReductionTrace t;
  t.removed = {{2, 0}};
  t.core_vertices = {0, 1};
  EXPECT_EQ(trace_json(t), "{\"removed\":[[2,0]],\"core_vertices\":[0,1]}\n");
}

TEST(Reports, StableVerificationJsonIsDeterministic) {
  VerifyOptions opts;
  opts.only = {"formula-agreement", "cycle-examples"};
  opts.jobs = 2;
  const VerificationReport a = run_verification(opts);
  const VerificationReport b = run_verification(opts);
  EXPECT_TRUE(a.all_pass());
  EXPECT_EQ(a.to_json(true), b.to_json(true));
  EXPECT_EQ(a.to_json(true).find("seconds"), std::string::npos);
  EXPECT_NE(a.to_json(false).find("seconds"), std::string::npos);
  ASSERT_EQ(a.checks.size(), 2u);
  EXPECT_EQ(a.checks[0].name, "formula-agreement");
  opts.only = {"nonsense"};
  EXPECT_THROW(run_verification(opts), DomainError);
}
