#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include <json.hpp>

#include "oracles.hpp"
#include "specgap/canon.hpp"
#include "specgap/covers.hpp"
#include "specgap/decomp.hpp"
#include "specgap/families.hpp"
#include "specgap/spectra.hpp"
#include "specgap/transforms.hpp"

namespace specgap {
namespace {

TEST(BaseGraph, Shape) {
  const Graph b2 = base_graph(2);
  EXPECT_EQ(b2.order(), 8);
  EXPECT_EQ(b2.size(), 10);
  auto deg = degrees(b2);
  std::sort(deg.begin(), deg.end());
  EXPECT_EQ(deg, (std::vector<int>{2, 2, 2, 2, 3, 3, 3, 3}));
  for (int k = 2; k <= 16; ++k) EXPECT_TRUE(is_bipartite(base_graph(k))) << k;
  EXPECT_THROW(base_graph(1), std::invalid_argument);
  EXPECT_THROW(base_graph(17), std::invalid_argument);
}

TEST(BaseGraph, EdgeListOfFiveCycles) {
  const Graph b5 = base_graph(5);
  std::vector<Edge> expected;
  auto add = [&](int u, int v) { expected.emplace_back(std::min(u, v), std::max(u, v)); };
  for (int i = 0; i < 5; ++i) {
    add(w_vertex(i), b_vertex(i));
    add(w_vertex(i), b_prime_vertex(i));
    add(w_prime_vertex(i), b_vertex(i));
    add(w_prime_vertex(i), b_prime_vertex(i));
    if (i + 1 < 5) {
      add(b_vertex(i), w_vertex(i + 1));
      add(b_prime_vertex(i), w_prime_vertex(i + 1));
    }
  }
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(b5.edges(), expected);
  // Degree-2 vertices are the two white ones at the start and two black at the end.
  for (int v : {w_vertex(0), w_prime_vertex(0), b_vertex(4), b_prime_vertex(4)}) EXPECT_EQ(b5.degree(v), 2);
}

TEST(Families, CubicWithExpectedStructure) {
  for (int k = 2; k <= 16; ++k) {
    const Graph ks = kollar_sarnak(k);
    const Graph gm = guo_mohar(k);
    EXPECT_TRUE(is_regular(ks, 3));
    EXPECT_TRUE(is_regular(gm, 3));
    EXPECT_EQ(ks.order(), 4 * k);
    EXPECT_FALSE(is_bipartite(ks));
    EXPECT_TRUE(is_bipartite(gm));
    EXPECT_EQ(triangles(ks).size(), 4U);
    EXPECT_TRUE(ks.has_edge(w_vertex(0), w_prime_vertex(0)));
    EXPECT_TRUE(gm.has_edge(w_vertex(0), b_vertex(k - 1)));
  }
}

TEST(Families, GuoMoharTwoIsTheCube) { EXPECT_TRUE(are_isomorphic(guo_mohar(2), cube())); }

TEST(Families, GuoMoharSixIsACirculantLadderOfFourCycles) {
  // Contracting each 4-cycle C_i of GM(6) gives a 6-cycle.
  const Graph g = guo_mohar(6);
  for (int i = 0; i < 6; ++i) {
    const int j = (i + 1) % 6;
    int between = 0;
    for (int u = 4 * i; u < 4 * i + 4; ++u) {
      for (int v = 4 * j; v < 4 * j + 4; ++v) between += g.has_edge(u, v);
    }
    EXPECT_EQ(between, 2) << i;
  }
  EXPECT_EQ(girth(g), 4);
}

TEST(Families, GapCertifiedForKUpToTen) {
  for (int k = 2; k <= 10; ++k) {
    EXPECT_TRUE(certify_gap(kollar_sarnak(k)).verdict) << k;
    EXPECT_TRUE(certify_gap(guo_mohar(k)).verdict) << k;
  }
}

TEST(Named, Constructors) {
  EXPECT_TRUE(are_isomorphic(generalized_petersen(5, 2), petersen()));
  EXPECT_TRUE(is_regular(circulant(12, {1, 2, 3}), 6));
  EXPECT_EQ(circulant(12, {1, 2, 3}).order(), 12);
  EXPECT_TRUE(is_regular(k3_box_k3_plus(), 6));
  EXPECT_EQ(k3_box_k3_plus().order(), 12);
  EXPECT_TRUE(is_regular(shrikhande(), 6));
  EXPECT_EQ(girth(heawood()), 6);
  EXPECT_EQ(oracle::automorphism_count(heawood()), 336U);
  EXPECT_EQ(oracle::automorphism_count(moebius_kantor()), 96U);
  EXPECT_EQ(oracle::automorphism_count(desargues()), 240U);
  EXPECT_THROW(generalized_petersen(5, 3), std::invalid_argument);
  EXPECT_THROW(circulant(6, {0}), std::invalid_argument);
}

TEST(Named, ShrikhandeIsStronglyRegular) {
  const Graph g = shrikhande();
  for (int u = 0; u < 16; ++u) {
    for (int v = u + 1; v < 16; ++v) {
      EXPECT_EQ(popcount(g.row(u) & g.row(v)), 2);
    }
  }
  EXPECT_EQ(oracle::automorphism_count(g), 192U);
}

TEST(Named, ExceptionalHost) {
  const Graph x = exceptional_host();
  EXPECT_EQ(x.order(), 16);
  EXPECT_TRUE(is_regular(x, 6));
  EXPECT_TRUE(is_connected(x));
  EXPECT_FALSE(oracle::isomorphic_backtrack(x, shrikhande()));
  EXPECT_EQ(oracle::automorphism_count(x), 6U);
  const auto ev = oracle::eigenvalues(x);
  EXPECT_NEAR(ev.front(), -2.0, 1e-9);
  EXPECT_EQ(triangle_decompositions(x).size(), 1U);
}

TEST(Named, ThreeByThreeRookPlusThreeApexes) {
  const Graph g = k3_box_k3_plus();
  // v01 = 9 is joined to the six vertices with first coordinate 0 or 1.
  for (int v = 0; v < 9; ++v) EXPECT_EQ(g.has_edge(9, v), v / 3 != 2);
  for (int v = 0; v < 9; ++v) EXPECT_EQ(g.has_edge(10, v), v / 3 != 1);
  for (int v = 0; v < 9; ++v) EXPECT_EQ(g.has_edge(11, v), v / 3 != 0);
}

TEST(Truncate, Examples) {
  const Graph tt = truncate(complete(4), {0, 1, 2, 3});
  EXPECT_EQ(tt.order(), 12);
  EXPECT_TRUE(is_regular(tt, 3));
  EXPECT_EQ(triangles(tt).size(), 4U);
  EXPECT_TRUE(are_isomorphic(truncate(complete_bipartite(3, 3), {0, 1}), sporadic(3).graph));
  EXPECT_TRUE(are_isomorphic(truncate(cube(), {0, 3, 5, 6}), sporadic(8).graph));
  EXPECT_THROW(truncate(base_graph(2), {0}), std::invalid_argument);
  EXPECT_THROW(truncate(complete(4), {0, 0}), std::invalid_argument);
}

TEST(Truncate, CornerAssignmentDoesNotMatter) {
  std::mt19937_64 rng(31);
  const Graph g = petersen();
  const Graph reference = truncate(g, {0, 2, 7});
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<std::array<int, 3>> orders;
    for (int j = 0; j < 3; ++j) {
      std::array<int, 3> o{0, 1, 2};
      std::shuffle(o.begin(), o.end(), rng);
      orders.push_back(o);
    }
    EXPECT_TRUE(are_isomorphic(truncate(g, {0, 2, 7}, orders), reference));
    EXPECT_TRUE(are_isomorphic(truncate(g, {7, 0, 2}), reference));
  }
}

TEST(Registry, OrdersFlagsAndCertificates) {
  const std::vector<int> orders = {4, 10, 10, 12, 12, 14, 16, 16, 20, 20, 24, 24, 32, 32};
  const std::vector<bool> bipartite = {false, false, false, false, false, true, true,
                                       false, true,  true,  true,  true,  true, true};
  const auto& rows = sporadic_registry();
  ASSERT_EQ(rows.size(), 14U);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    SCOPED_TRACE(rows[i].id);
    EXPECT_EQ(rows[i].id, static_cast<int>(i) + 1);
    EXPECT_EQ(rows[i].order, orders[i]);
    EXPECT_EQ(rows[i].graph.order(), orders[i]);
    EXPECT_EQ(rows[i].bipartite, bipartite[i]);
    EXPECT_EQ(is_bipartite(rows[i].graph), bipartite[i]);
    EXPECT_TRUE(is_regular(rows[i].graph, 3));
    EXPECT_TRUE(is_connected(rows[i].graph));
    EXPECT_TRUE(certify_gap(rows[i].graph).verdict);
    EXPECT_EQ(rows[i].graph6, canonical_form(rows[i].graph).bytes);
  }
  EXPECT_THROW(sporadic(0), std::out_of_range);
  EXPECT_THROW(sporadic(15), std::out_of_range);
}

TEST(Registry, PairwiseDistinctAndNotInFamilies) {
  const auto& rows = sporadic_registry();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) EXPECT_NE(rows[i].graph6, rows[j].graph6);
    for (int k = 2; k <= 8; ++k) {
      EXPECT_FALSE(are_isomorphic(rows[i].graph, kollar_sarnak(k)));
      EXPECT_FALSE(are_isomorphic(rows[i].graph, guo_mohar(k)));
    }
  }
}

TEST(Registry, NamedRows) {
  EXPECT_TRUE(are_isomorphic(sporadic(1).graph, complete(4)));
  EXPECT_TRUE(are_isomorphic(sporadic(6).graph, heawood()));
  EXPECT_TRUE(are_isomorphic(sporadic(7).graph, generalized_petersen(8, 3)));
  EXPECT_TRUE(are_isomorphic(sporadic(9).graph, generalized_petersen(10, 3)));
  EXPECT_TRUE(are_isomorphic(sporadic(14).graph, bipartite_double(truncate(cube(), {0, 3, 5, 6}))));
}

TEST(Registry, DesarguesMateIsCospectral) {
  EXPECT_EQ(char_poly(sporadic(9).graph), char_poly(sporadic(10).graph));
  EXPECT_FALSE(oracle::isomorphic_backtrack(sporadic(9).graph, sporadic(10).graph));
}

TEST(Registry, BothTwelveVertexRowsHaveTheSameDouble) {
  const Graph d4 = bipartite_double(sporadic(4).graph);
  const Graph d5 = bipartite_double(sporadic(5).graph);
  EXPECT_TRUE(are_isomorphic(d4, sporadic(11).graph));
  EXPECT_TRUE(are_isomorphic(d5, sporadic(11).graph));
  EXPECT_TRUE(oracle::isomorphic_backtrack(d4, d5));
}

TEST(Registry, ThirtyTwoVertexRowsComeFromDifferentHosts) {
  const Graph h13 = distance_two_graph(sporadic(13).graph);
  const Graph h14 = distance_two_graph(sporadic(14).graph);
  for (Row c : components(h13)) EXPECT_TRUE(are_isomorphic(h13.induced(c), exceptional_host()));
  for (Row c : components(h14)) EXPECT_TRUE(are_isomorphic(h14.induced(c), shrikhande()));
  EXPECT_EQ(group_order(automorphisms(sporadic(13).graph), 32), 12U);
}

TEST(Registry, SixIntegralSpectraWithoutZero) {
  std::vector<Graph> pool;
  for (const auto& row : sporadic_registry()) pool.push_back(row.graph);
  for (int k = 2; k <= 5; ++k) {
    pool.push_back(guo_mohar(k));
    pool.push_back(kollar_sarnak(k));
  }
  std::vector<Graph> integral;
  for (const auto& g : pool) {
    bool all_integral = true;
    for (double e : oracle::eigenvalues(g)) all_integral = all_integral && std::abs(e - std::round(e)) < 1e-8;
    if (all_integral) integral.push_back(g);
  }
  ASSERT_EQ(integral.size(), 6U);
  const std::vector<Graph> expected = {complete(4), cube(), petersen(), sporadic(3).graph, desargues(),
                                       sporadic(10).graph};
  for (const auto& g : expected) {
    EXPECT_TRUE(std::any_of(integral.begin(), integral.end(),
                            [&](const Graph& h) { return oracle::isomorphic_backtrack(g, h); }));
  }
}

TEST(Registry, JsonManifest) {
  const auto j = nlohmann::json::parse(registry_json());
  ASSERT_EQ(j.size(), 14U);
  EXPECT_EQ(j[0]["id"], 1);
  EXPECT_EQ(j[0]["n"], 4);
  EXPECT_EQ(j[0]["bipartite"], false);
  EXPECT_EQ(j[0]["graph6"], "C~");
  EXPECT_EQ(j[13]["n"], 32);
}

TEST(FamilyTag, Text) {
  EXPECT_EQ((FamilyTag{FamilyTag::Kind::GuoMohar, 4}).to_string(), "GM(4)");
  EXPECT_EQ((FamilyTag{FamilyTag::Kind::KollarSarnak, 2}).to_string(), "KS(2)");
  EXPECT_EQ((FamilyTag{FamilyTag::Kind::Sporadic, 7}).to_string(), "sporadic #7");
}

}  // namespace
}  // namespace specgap
