#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "specgap/families.hpp"
#include "specgap/graph.hpp"
#include "specgap/transforms.hpp"

namespace specgap {
namespace {

TEST(Graph6, DecodesK4) {
  const Graph g = parse_graph6("C~");
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.size(), 6);
  EXPECT_EQ(g, complete(4));
}

TEST(Graph6, EmptyAndSingleVertex) {
  const Graph two = parse_graph6("A?");
  EXPECT_EQ(two.order(), 2);
  EXPECT_EQ(two.size(), 0);
  EXPECT_EQ(to_graph6(Graph(1)), "@");
  EXPECT_EQ(to_graph6(complete(4)), "C~");
}

TEST(Graph6, MatchesNetworkxFixtures) {
  const auto fixtures = oracle::load_graph6_fixtures(std::string(SPECGAP_FIXTURES) + "/graph6_fixtures.txt");
  ASSERT_GE(fixtures.size(), 30U);
  for (const auto& f : fixtures) {
    SCOPED_TRACE(f.code.substr(0, 20));
    const Graph g = parse_graph6(f.code);
    EXPECT_EQ(g.order(), f.n);
    EXPECT_EQ(g.edges(), f.edges);
    EXPECT_EQ(to_graph6(g), f.code);
    EXPECT_EQ(to_graph6(Graph::from_edges(f.n, f.edges)), f.code);
  }
}

TEST(Graph6, ToleratesNewlineAndHeader) {
  EXPECT_EQ(parse_graph6("C~\n"), complete(4));
  EXPECT_EQ(parse_graph6("C~\r\n"), complete(4));
  EXPECT_EQ(parse_graph6(">>graph6<<C~"), complete(4));
}

TEST(Graph6, RejectsMalformedInputWithOffset) {
  auto offset_of = [](const std::string& text) -> long {
    try {
      parse_graph6(text);
    } catch (const Graph6Error& e) {
      return static_cast<long>(e.offset());
    }
    return -1;
  };
  EXPECT_EQ(offset_of(""), 0);
  EXPECT_EQ(offset_of("C"), 1);         // missing edge bytes
  EXPECT_EQ(offset_of("C~~"), 2);       // too many bytes
  EXPECT_EQ(offset_of("C\x7f"), 1);     // byte out of range
  EXPECT_EQ(offset_of("A`"), 1);        // padding bit set
  EXPECT_EQ(offset_of("A_"), -1);
  EXPECT_GE(offset_of("~?@A"), 0);      // 65 vertices
  EXPECT_EQ(offset_of("\x20"), 0);
}

TEST(Graph6, RoundTripsRandomGraphs) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(rng() % 65);
    const Graph g = oracle::random_graph(rng, n, 0.3);
    ASSERT_EQ(parse_graph6(to_graph6(g)), g);
  }
}

TEST(Graph, RowsStaySymmetricAndLoopFree) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 64), 0.2);
    for (int v = 0; v < g.order(); ++v) {
      EXPECT_FALSE(g.has_edge(v, v));
      EXPECT_EQ(g.row(v) & ~g.vertex_mask(), 0U);
      for (int u = 0; u < g.order(); ++u) EXPECT_EQ(g.has_edge(u, v), g.has_edge(v, u));
    }
  }
}

TEST(Graph, RejectsBadEdges) {
  Graph g(3);
  EXPECT_THROW(g.add_edge(0, 0), std::invalid_argument);
  EXPECT_THROW(g.add_edge(0, 3), std::out_of_range);
  EXPECT_THROW(Graph(65), std::invalid_argument);
}

TEST(Girth, KnownValues) {
  EXPECT_EQ(girth(guo_mohar(3)), 4);
  EXPECT_EQ(girth(heawood()), 6);
  EXPECT_EQ(girth(petersen()), 5);
  EXPECT_FALSE(girth(Graph::from_edges(5, std::vector<Edge>{{0, 1}, {1, 2}, {1, 3}, {3, 4}})).has_value());
  EXPECT_FALSE(girth(Graph(3)).has_value());
}

TEST(Girth, FamiliesHaveExpectedGirth) {
  for (int k = 2; k <= 10; ++k) {
    EXPECT_EQ(girth(guo_mohar(k)), 4) << k;
    EXPECT_EQ(girth(kollar_sarnak(k)), 3) << k;
  }
}

TEST(Girth, AgreesWithBfsOracle) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_graph(rng, 3 + static_cast<int>(rng() % 14), 0.2);
    const auto got = girth(g);
    EXPECT_EQ(got.value_or(0), oracle::girth_bfs(g));
  }
}

TEST(Bipartition, Examples) {
  const auto cube_classes = bipartition(guo_mohar(2));
  ASSERT_TRUE(cube_classes.has_value());
  EXPECT_EQ(popcount(cube_classes->classes[0]), 4);
  EXPECT_EQ(popcount(cube_classes->classes[1]), 4);
  EXPECT_FALSE(bipartition(kollar_sarnak(3)).has_value());
  const auto single = bipartition(Graph(1));
  ASSERT_TRUE(single.has_value());
  EXPECT_EQ(single->classes[0], Row{1});
  EXPECT_EQ(single->classes[1], Row{0});
}

TEST(Bipartition, ClassesAreProperColouring) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(rng, 2 + static_cast<int>(rng() % 20), 0.12);
    const auto parts = bipartition(g);
    if (!parts) continue;
    EXPECT_EQ(parts->classes[0] | parts->classes[1], g.vertex_mask());
    EXPECT_EQ(parts->classes[0] & parts->classes[1], 0U);
    for (const auto& [u, v] : g.edges()) EXPECT_NE(parts->colour(u), parts->colour(v));
  }
}

TEST(Connectivity, Examples) {
  EXPECT_FALSE(is_connected(distance_two_graph(heawood())));
  EXPECT_EQ(components(distance_two_graph(heawood())).size(), 2U);
  EXPECT_TRUE(is_connected(complete(4)));
  EXPECT_EQ(degrees(complete(4)), (std::vector<int>{3, 3, 3, 3}));
  EXPECT_FALSE(is_connected(Graph(2)));
}

TEST(Graph, DisjointUnionAndInduced) {
  const Graph u = disjoint_union(complete(4), cycle(5));
  EXPECT_EQ(u.order(), 9);
  EXPECT_EQ(u.size(), 11);
  EXPECT_EQ(u.induced(Row{0x1f0}), cycle(5));
  EXPECT_EQ(components(u).size(), 2U);
}

}  // namespace
}  // namespace specgap
