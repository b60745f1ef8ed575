#include <gtest/gtest.h>

#include "sepenum/errors.hpp"
#include "sepenum/mincut.hpp"
#include "sepenum/oracle.hpp"
#include "sepenum/ranked.hpp"
#include "support.hpp"

namespace sepenum {
namespace {

using testing::names;

template <typename Enumerate>
std::vector<std::string> stream(const oracle::Fixture& f, Enumerate enumerate) {
  std::vector<std::string> out;
  enumerate(f.graph, f.terminals, [&](const Separator& x) {
    out.push_back(names(f.graph, x));
    return true;
  });
  return out;
}

TEST(Ranked, Fixtures) {
  EXPECT_EQ(stream(oracle::p4(), ranked_separators),
            (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(stream(oracle::diamond(), ranked_separators),
            (std::vector<std::string>{"a,b"}));
  EXPECT_EQ(stream(oracle::theta(), ranked_separators),
            (std::vector<std::string>{"a,b", "a,c"}));
}

TEST(Minimum, Fixtures) {
  EXPECT_EQ(stream(oracle::theta(), minimum_separators),
            (std::vector<std::string>{"a,b", "a,c"}));
  EXPECT_EQ(stream(oracle::p4(), minimum_separators),
            (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(stream(oracle::diamond(), minimum_separators),
            (std::vector<std::string>{"a,b"}));
}

TEST(Ranked, Errors) {
  Graph adj = parse_graph("s t\n");
  EXPECT_THROW(ranked_separators(adj, {0, 1}, [](const Separator&) { return true; }),
               Error);
  Graph split = parse_graph("s a\nb t\n");
  EXPECT_THROW(
      minimum_separators(split, {0, 3}, [](const Separator&) { return true; }),
      Error);
}

TEST(Ranked, LadderEmitsNonMinimalSeparatorsToo) {
  // 2 x 4 grid: s=(0,0), t=(1,3).
  Graph g = parse_graph(
      "s a\na b\nb c\nd e\ne f\nf t\ns d\na e\nb f\nc t\n");
  Terminals term{*g.find("s"), *g.find("t")};
  std::vector<Separator> got;
  ranked_separators(g, term, [&](const Separator& x) {
    got.push_back(x);
    return true;
  });
  auto minimal = oracle::brute_minimal_separators(g, term);
  oracle::SeparatorFamily unique(got.begin(), got.end());
  EXPECT_EQ(unique.size(), got.size());
  for (const auto& x : minimal) EXPECT_TRUE(unique.count(x));
  for (std::size_t i = 1; i < got.size(); ++i) {
    EXPECT_LE(got[i - 1].size(), got[i].size());
  }
}

TEST(Ranked, PropertiesOnRandomGraphs) {
  for (const auto& inst : testing::connected_corpus(60, 5, 10)) {
    const Graph& g = inst.graph;
    for (Terminals term : testing::separable_pairs(g)) {
      std::vector<Separator> got;
      ranked_separators(g, term, [&](const Separator& x) {
        got.push_back(x);
        return true;
      });
      oracle::SeparatorFamily unique(got.begin(), got.end());
      ASSERT_EQ(unique.size(), got.size()) << "seed " << inst.seed;
      for (std::size_t i = 0; i < got.size(); ++i) {
        EXPECT_TRUE(is_separator(g, term, got[i]));
        if (i > 0) EXPECT_LE(got[i - 1].size(), got[i].size());
      }
      for (const auto& x : oracle::brute_minimal_separators(g, term)) {
        EXPECT_TRUE(unique.count(x)) << "seed " << inst.seed;
      }
      auto minimum = oracle::brute_minimum_separators(g, term);
      ASSERT_GE(got.size(), minimum.size());
      EXPECT_EQ(oracle::SeparatorFamily(got.begin(), got.begin() + minimum.size()),
                minimum);

      std::vector<Separator> mins;
      minimum_separators(g, term, [&](const Separator& x) {
        mins.push_back(x);
        return true;
      });
      EXPECT_EQ(mins.size(), minimum.size());
      EXPECT_EQ(oracle::SeparatorFamily(mins.begin(), mins.end()), minimum);
    }
  }
}

TEST(MinSeparatorContaining, MatchesBruteForceForRandomSets) {
  std::size_t draw = 0;
  for (const auto& inst : testing::connected_corpus(60, 5, 10)) {
    const Graph& g = inst.graph;
    auto pairs = testing::separable_pairs(g);
    if (pairs.empty()) continue;
    Terminals term = pairs[draw % pairs.size()];
    auto minimum = oracle::brute_minimum_separators(g, term);
    for (VertexId a = 0; a < g.vertex_count(); ++a) {
      for (VertexId b = a; b < g.vertex_count(); ++b) {
        if (a == term.s || a == term.t || b == term.s || b == term.t) continue;
        VertexSet include{a, b};
        bool exists = std::any_of(
            minimum.begin(), minimum.end(),
            [&](const auto& x) { return include.is_subset_of(x); });
        auto got = min_separator_containing(g, term, include);
        ASSERT_EQ(got.has_value(), exists) << "seed " << inst.seed;
        if (got) {
          EXPECT_TRUE(minimum.count(*got));
          EXPECT_TRUE(include.is_subset_of(*got));
        }
      }
    }
    ++draw;
  }
}

}  // namespace
}  // namespace sepenum
