#include <gtest/gtest.h>

#include "sepenum/errors.hpp"
#include "sepenum/oracle.hpp"
#include "support.hpp"

namespace sepenum {
namespace {

using oracle::brute_chordless_paths_through;
using oracle::brute_important;
using oracle::brute_minimal_separators;
using oracle::brute_minimum_separators;
using testing::id;
using testing::names;
using Names = std::set<std::string>;

std::vector<std::string> path_labels(const Graph& g,
                                     const std::vector<VertexId>& path) {
  std::vector<std::string> out;
  for (VertexId v : path) out.push_back(g.label(v));
  return out;
}

TEST(Oracle, FixturesMatchTheirEdgeLists) {
  auto p4 = oracle::p4();
  EXPECT_EQ(p4.graph.vertex_count(), 4u);
  EXPECT_EQ(p4.graph.edge_count(), 3u);
  auto diamond = oracle::diamond();
  EXPECT_EQ(diamond.graph.edge_count(), 4u);
  auto theta = oracle::theta();
  EXPECT_EQ(theta.graph.vertex_count(), 5u);
  EXPECT_EQ(theta.graph.edge_count(), 5u);
  EXPECT_EQ(oracle::fixtures().size(), 3u);
  EXPECT_THROW(oracle::fixture_text("K5"), Error);
}

TEST(Oracle, MinimalSeparatorsOfFixtures) {
  auto p4 = oracle::p4();
  EXPECT_EQ(names(p4.graph, brute_minimal_separators(p4.graph, p4.terminals)),
            (Names{"a", "b"}));
  auto diamond = oracle::diamond();
  EXPECT_EQ(names(diamond.graph,
                  brute_minimal_separators(diamond.graph, diamond.terminals)),
            (Names{"a,b"}));
  auto theta = oracle::theta();
  EXPECT_EQ(
      names(theta.graph, brute_minimal_separators(theta.graph, theta.terminals)),
      (Names{"a,b", "a,c"}));
}

TEST(Oracle, ImportantSeparatorsFollowTheDefinition) {
  auto p4 = oracle::p4();
  EXPECT_EQ(names(p4.graph, brute_important(p4.graph, p4.terminals, 1)),
            (Names{"a"}));
  // {b} has the larger s-side {s,a} and is dominated by {a}.
  EXPECT_EQ(names(p4.graph, brute_important(p4.graph, p4.terminals, 2)),
            (Names{"a"}));
  auto theta = oracle::theta();
  EXPECT_EQ(names(theta.graph, brute_important(theta.graph, theta.terminals, 2)),
            (Names{"a,b"}));
  EXPECT_TRUE(brute_important(theta.graph, theta.terminals, 1).empty());
}

TEST(Oracle, MinimumSeparatorsOfFixtures) {
  auto p4 = oracle::p4();
  EXPECT_EQ(names(p4.graph, brute_minimum_separators(p4.graph, p4.terminals)),
            (Names{"a", "b"}));
  auto diamond = oracle::diamond();
  EXPECT_EQ(names(diamond.graph,
                  brute_minimum_separators(diamond.graph, diamond.terminals)),
            (Names{"a,b"}));
  auto theta = oracle::theta();
  EXPECT_EQ(
      names(theta.graph, brute_minimum_separators(theta.graph, theta.terminals)),
      (Names{"a,b", "a,c"}));
}

TEST(Oracle, ChordlessPathsThroughVertex) {
  auto p4 = oracle::p4();
  auto paths = brute_chordless_paths_through(p4.graph, p4.terminals,
                                             id(p4.graph, "a"));
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_EQ(path_labels(p4.graph, paths[0]),
            (std::vector<std::string>{"s", "a", "b", "t"}));

  auto theta = oracle::theta();
  paths = brute_chordless_paths_through(theta.graph, theta.terminals,
                                        id(theta.graph, "c"));
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_EQ(path_labels(theta.graph, paths[0]),
            (std::vector<std::string>{"s", "b", "c", "t"}));

  auto diamond = oracle::diamond();
  paths = brute_chordless_paths_through(diamond.graph, diamond.terminals,
                                        id(diamond.graph, "a"));
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_EQ(path_labels(diamond.graph, paths[0]),
            (std::vector<std::string>{"s", "a", "t"}));
}

TEST(Oracle, ChordedPathIsRejected) {
  // s-a-b-t with chord s-b: the only chordless route is s-b-t.
  Graph g = parse_graph("s a\na b\nb t\ns b\n");
  Terminals term{id(g, "s"), id(g, "t")};
  EXPECT_TRUE(brute_chordless_paths_through(g, term, id(g, "a")).empty());
  EXPECT_FALSE(oracle::find_chordless_path_through(g, term, id(g, "a"), 20));
  EXPECT_EQ(brute_chordless_paths_through(g, term, id(g, "b")).size(), 1u);
}

TEST(Oracle, RandomGraphIsDeterministic) {
  Graph k4 = oracle::random_graph(4, 1.0, 7);
  EXPECT_EQ(k4.edge_count(), 6u);
  Graph empty = oracle::random_graph(3, 0.0, 7);
  EXPECT_EQ(empty.vertex_count(), 3u);
  EXPECT_EQ(empty.edge_count(), 0u);
  EXPECT_EQ(format_graph(oracle::random_graph(8, 0.35, 42)),
            format_graph(oracle::random_graph(8, 0.35, 42)));
  EXPECT_THROW(oracle::random_graph(3, 1.5, 1), Error);
}

TEST(Oracle, SizeGuardsFailHard) {
  Graph big = oracle::random_graph(17, 0.3, 1);
  Terminals term{0, 1};
  try {
    brute_minimal_separators(big, term);
    FAIL() << "expected TooLarge";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooLarge);
  }
  Graph mid = oracle::random_graph(15, 0.3, 1);
  EXPECT_THROW(brute_important(mid, term, 2), Error);
  EXPECT_THROW(brute_chordless_paths_through(mid, term, 3), Error);
  EXPECT_THROW(brute_minimum_separators(big, term), Error);
}

}  // namespace
}  // namespace sepenum
