#include <gtest/gtest.h>

#include "sepenum/errors.hpp"
#include "sepenum/mincut.hpp"
#include "sepenum/oracle.hpp"
#include "sepenum/small_minimal.hpp"
#include "support.hpp"

namespace sepenum {
namespace {

using testing::ids;
using testing::names;

std::vector<std::string> stream(const oracle::Fixture& f, std::size_t k) {
  std::vector<std::string> out;
  enumerate_small_minimal(f.graph, f.terminals, k, [&](const Separator& x) {
    out.push_back(names(f.graph, x));
    return true;
  });
  return out;
}

TEST(SmallMinimal, Fixtures) {
  EXPECT_EQ(stream(oracle::p4(), 1), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(stream(oracle::theta(), 2),
            (std::vector<std::string>{"a,b", "a,c"}));
  EXPECT_TRUE(stream(oracle::diamond(), 1).empty());
}

TEST(SmallMinimal, AdjacentTerminalsIsBottom) {
  Graph g = parse_graph("s t\ns a\na t\n");
  try {
    enumerate_small_minimal(g, {0, 1}, 2, [](const Separator&) { return true; });
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTerminalsAdjacent);
  }
}

TEST(SmallMinimal, SinkCanStopEarly) {
  auto f = oracle::p4();
  std::size_t seen = 0;
  auto n = enumerate_small_minimal(f.graph, f.terminals, 1,
                                   [&](const Separator&) { return ++seen < 1; });
  EXPECT_EQ(n, 1u);
  EXPECT_EQ(seen, 1u);
}

TEST(PopKey, Examples) {
  auto theta = oracle::theta();
  const Graph& g = theta.graph;
  VertexId s = theta.terminals.s;
  EXPECT_EQ(pop_key(g, s, ids(g, {"a", "b"})).component_size, 1u);
  EXPECT_EQ(pop_key(g, s, ids(g, {"a", "c"})).component_size, 2u);
  EXPECT_LT(pop_key(g, s, ids(g, {"a", "b"})), pop_key(g, s, ids(g, {"a", "c"})));
  auto p4 = oracle::p4();
  OrderKey key = pop_key(p4.graph, p4.terminals.s, ids(p4.graph, {"b"}));
  EXPECT_EQ(key.component_size, 2u);
  EXPECT_EQ(names(p4.graph, key.members), "b");
}

TEST(SmallMinimal, ExactOnceOrderedAndComplete) {
  for (const auto& inst : testing::connected_corpus(40, 5, 9)) {
    const Graph& g = inst.graph;
    for (Terminals term : testing::separable_pairs(g)) {
      auto all = oracle::brute_minimal_separators(g, term);
      for (std::size_t k : {std::size_t{1}, (g.vertex_count() + 1) / 2,
                            g.vertex_count()}) {
        std::vector<Separator> got;
        std::size_t last_side = 0;
        enumerate_small_minimal(g, term, k, [&](const Separator& x) {
          std::size_t side = component_of(g, x, term.s).size();
          EXPECT_GE(side, last_side);
          last_side = side;
          got.push_back(x);
          return true;
        });
        oracle::SeparatorFamily unique(got.begin(), got.end());
        EXPECT_EQ(unique.size(), got.size());
        oracle::SeparatorFamily expected;
        for (const auto& x : all) {
          if (x.size() <= k) expected.insert(x);
        }
        ASSERT_EQ(unique, expected) << "seed " << inst.seed << " k " << k;
      }
    }
  }
}

}  // namespace
}  // namespace sepenum
