#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "trapset/error.hpp"
#include "trapset/normal_graph.hpp"

namespace trapset {
namespace {

NormalGraph cycle_graph(int n) {
  std::vector<NormalEdge> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return NormalGraph(n, e);
}

NormalGraph complete_bipartite_33() {
  std::vector<NormalEdge> e;
  for (int i = 0; i < 3; ++i) {
    for (int j = 3; j < 6; ++j) e.push_back({i, j});
  }
  return NormalGraph(6, e);
}

NormalGraph prism() {
  return NormalGraph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

NormalGraph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<NormalEdge> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) e.push_back({i, j});
    }
  }
  return NormalGraph(n, e);
}

TEST(NormalGraph, ConstructionNormalises) {
  const NormalGraph g(3, {{2, 0}, {1, 0}});
  ASSERT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.edges()[0], (NormalEdge{0, 1}));
  EXPECT_EQ(g.edges()[1], (NormalEdge{0, 2}));
  EXPECT_EQ(g.degree(0), 2);
  EXPECT_EQ(g.min_degree(), 1);
  EXPECT_EQ(g.max_degree(), 2);
  EXPECT_TRUE(g.is_connected());
  EXPECT_EQ(g.girth(), kAcyclic);
}

TEST(NormalGraph, RejectsBadEdges) {
  EXPECT_THROW(NormalGraph(3, {{0, 0}}), InvalidArgument);
  EXPECT_THROW(NormalGraph(3, {{0, 1}, {1, 0}}), InvalidArgument);
  EXPECT_THROW(NormalGraph(3, {{0, 3}}), InvalidArgument);
  EXPECT_THROW(NormalGraph(33, {}), InvalidArgument);
}

TEST(NormalGraph, GirthAndConnectivity) {
  EXPECT_EQ(cycle_graph(5).girth(), 5);
  EXPECT_EQ(complete_bipartite_33().girth(), 4);
  EXPECT_EQ(prism().girth(), 3);
  const NormalGraph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  EXPECT_FALSE(two_triangles.is_connected());
}

TEST(NormalGraph, FromNormalToNormalRoundTrip) {
  const NormalGraph g = prism();
  for (int dl = 3; dl <= 6; ++dl) {
    const TannerGraph t = from_normal(g, dl);
    EXPECT_EQ(t.num_vars(), 6u);
    EXPECT_EQ(t.left_degree(), dl);
    EXPECT_EQ(t.num_checks(), g.edge_count() + static_cast<std::size_t>(normal_b(g, dl)));
    const VarSet all = t.all_vars();
    const auto rec = classify(t, all);
    EXPECT_EQ(rec.b, static_cast<std::size_t>(normal_b(g, dl)));
    EXPECT_TRUE(rec.is_ets_in_t());
    EXPECT_EQ(to_normal(t, all), g);
  }
  EXPECT_THROW(from_normal(g, 2), InvalidArgument);
}

TEST(NormalGraph, NormalBFormula) {
  // a·d_l − 2|E|.
  EXPECT_EQ(normal_b(prism(), 3), 0);
  EXPECT_EQ(normal_b(prism(), 4), 6);
  EXPECT_EQ(normal_b(cycle_graph(7), 3), 7);
}

TEST(NormalGraph, ToNormalOfSubset) {
  const TannerGraph t = from_normal(prism(), 3);
  // The first triangle: checks of edges 0-1, 1-2, 0-2 are internal.
  const VarSet s = t.make_set({0, 1, 2});
  const NormalGraph n = to_normal(t, s);
  EXPECT_EQ(n, cycle_graph(3));
  EXPECT_THROW(to_normal(t, t.make_set({0, 4})), InvalidArgument);
}

TEST(NormalGraph, ToNormalRejectsNonElementary) {
  const TannerGraph t(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}});
  EXPECT_THROW(to_normal(t, t.all_vars()), InvalidArgument);
}

TEST(NormalGraph, CycleCountsOfKnownGraphs) {
  // K3,3: nine 4-cycles (Tanner length 8) and six 6-cycles.
  const auto census = normal_cycle_lengths(complete_bipartite_33());
  EXPECT_EQ(census.count(8), 9u);
  EXPECT_EQ(census.count(12), 6u);
  EXPECT_EQ(census.count(6), 0u);
  std::vector<int> multiset(9, 8);
  multiset.insert(multiset.end(), 6, 12);
  EXPECT_EQ(census.lengths(), multiset);
  // Prism: two triangles, three squares, and longer cycles.
  const auto p = normal_cycle_lengths(prism());
  EXPECT_EQ(p.count(6), 2u);
  EXPECT_EQ(p.count(8), 3u);
  EXPECT_EQ(normal_cycles_of_length(cycle_graph(6), 6).size(), 1u);
  EXPECT_TRUE(normal_cycles(NormalGraph(4, {{0, 1}, {1, 2}, {2, 3}})).empty());
}

TEST(NormalGraph, CyclesMatchBruteForce) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 5);
    const NormalGraph g = random_graph(n, 0.5, rng);
    const auto brute = oracle::brute_normal_cycle_counts(g);
    std::map<int, std::size_t> ours;
    for (const auto& c : normal_cycles(g)) {
      ++ours[c.tanner_length / 2];
      EXPECT_EQ(std::popcount(c.node_mask), c.tanner_length / 2);
      EXPECT_EQ(c.nodes.size(), static_cast<std::size_t>(c.tanner_length / 2));
      for (std::size_t i = 0; i < c.nodes.size(); ++i) {
        EXPECT_TRUE(g.adjacent(c.nodes[i], c.nodes[(i + 1) % c.nodes.size()]));
      }
    }
    EXPECT_EQ(ours, brute) << to_text(g);
  }
}

TEST(NormalGraph, CycleLengthCap) {
  const auto short_only = normal_cycles(prism(), 4);
  for (const auto& c : short_only) EXPECT_LE(c.tanner_length, 8);
  EXPECT_EQ(short_only.size(), 5u);
}

TEST(NormalGraph, TextRoundTripAndErrors) {
  const NormalGraph g = prism();
  EXPECT_EQ(parse_normal_text(to_text(g)), g);
  EXPECT_THROW(parse_normal_text("3 1\n1 0\n"), ParseError);
  EXPECT_THROW(parse_normal_text("3 2\n0 1\n"), ParseError);
  EXPECT_THROW(parse_normal_text("3 1\n0 x\n"), ParseError);
  EXPECT_THROW(parse_normal_text("3 1\n0 5\n"), ParseError);
  EXPECT_THROW(parse_normal_text(""), ParseError);
}

TEST(Graph6, KnownStrings) {
  // networkx: nx.to_graph6_bytes(nx.cycle_graph(5), header=False) == b"Dhc\n".
  EXPECT_EQ(to_graph6(cycle_graph(5)), "Dhc");
  EXPECT_EQ(from_graph6("Dhc"), cycle_graph(5));
  EXPECT_EQ(from_graph6(">>graph6<<Dhc\n"), cycle_graph(5));
  // K3,3 as labeled above.
  EXPECT_EQ(to_graph6(complete_bipartite_33()), "EFz_");
}

TEST(Graph6, RandomRoundTrip) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 20);
    const NormalGraph g = random_graph(n, 0.3, rng);
    EXPECT_EQ(from_graph6(to_graph6(g)), g);
  }
  EXPECT_THROW(from_graph6(""), ParseError);
  EXPECT_THROW(from_graph6("D"), ParseError);
  EXPECT_THROW(from_graph6("D\x7f\x7f"), ParseError);
}

}  // namespace
}  // namespace trapset
