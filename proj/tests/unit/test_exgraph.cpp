#include <gtest/gtest.h>

#include <bit>
#include <random>

#include "exbound/error.hpp"
#include "exbound/exgraph.hpp"

using namespace exbound;
using namespace exbound::graph;

namespace {

// Largest independent set by enumerating every vertex subset.
std::size_t brute_force_alpha(const ExclusivityGraph& g) {
  std::size_t best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.n()); ++s) {
    bool independent = true;
    for (std::size_t i = 0; i < g.n() && independent; ++i) {
      if ((s >> i & 1) && (g.neighbor_mask(i) & s)) independent = false;
    }
    if (independent) best = std::max<std::size_t>(best, std::popcount(s));
  }
  return best;
}

ExclusivityGraph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng)) edges.emplace_back(i, j);
    }
  }
  return {n, edges};
}

template <typename F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no exception";
  return ErrorKind::InvariantViolation;
}

const ExclusivityGraph kChsh = circulant({8, {3, 4}});
const ExclusivityGraph kNc = circulant({8, {1, 2}});

}  // namespace

TEST(ExclusivityGraph, CanonicalizesEdges) {
  const ExclusivityGraph g(4, {{2, 1}, {1, 2}, {0, 3}});
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 3}, {1, 2}}));
  EXPECT_TRUE(g.adjacent(3, 0));
  EXPECT_EQ(g.degree(1), 1u);
  EXPECT_EQ(g.neighbors(0), std::vector<std::size_t>{3});
}

TEST(ExclusivityGraph, RejectsBadInput) {
  EXPECT_EQ(kind_of([] { ExclusivityGraph(65, {}); }), ErrorKind::TooLarge);
  EXPECT_EQ(kind_of([] { ExclusivityGraph(3, {{0, 3}}); }), ErrorKind::IndexOutOfRange);
  EXPECT_EQ(kind_of([] { ExclusivityGraph(3, {{1, 1}}); }), ErrorKind::InvariantViolation);
}

TEST(Circulant, EdgeCounts) {
  EXPECT_EQ(kChsh.edge_count(), 12u);
  EXPECT_EQ(kNc.edge_count(), 16u);
  for (std::size_t i = 0; i < 8; ++i) {
    EXPECT_EQ(kChsh.degree(i), 3u);
    EXPECT_EQ(kNc.degree(i), 4u);
  }
}

TEST(Circulant, RejectsBadDistances) {
  EXPECT_EQ(kind_of([] { circulant({8, {}}); }), ErrorKind::InvalidDistance);
  EXPECT_EQ(kind_of([] { circulant({8, {0}}); }), ErrorKind::InvalidDistance);
  EXPECT_EQ(kind_of([] { circulant({8, {5}}); }), ErrorKind::InvalidDistance);
}

TEST(Circulant, CircularDistance) {
  EXPECT_EQ(circular_distance(0, 7, 8), 1u);
  EXPECT_EQ(circular_distance(1, 5, 8), 4u);
  EXPECT_EQ(circular_distance(6, 1, 8), 3u);
}

TEST(Complement, CircularDistancesPartition) {
  EXPECT_EQ(complement(kChsh), kNc);
  EXPECT_EQ(complement(kNc), kChsh);
  EXPECT_EQ(complement(edgeless(5)), complete(5));
}

TEST(VertexTransitivity, CirculantsAreTransitive) {
  EXPECT_TRUE(is_vertex_transitive(kChsh));
  EXPECT_TRUE(is_vertex_transitive(kNc));
  EXPECT_TRUE(is_vertex_transitive(complete(6)));
}

TEST(VertexTransitivity, PathIsNot) {
  EXPECT_FALSE(is_vertex_transitive(ExclusivityGraph(4, {{0, 1}, {1, 2}, {2, 3}})));
  // 2-regular, but a triangle and a square cannot be swapped.
  const ExclusivityGraph two_components(7, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 6}, {6, 3}});
  EXPECT_FALSE(is_vertex_transitive(two_components));
}

TEST(VertexTransitivity, AutomorphismMapsVertex) {
  const auto perm = find_automorphism(kChsh, 0, 5);
  ASSERT_TRUE(perm.has_value());
  EXPECT_EQ((*perm)[0], 5u);
  for (auto [a, b] : kChsh.edges()) EXPECT_TRUE(kChsh.adjacent((*perm)[a], (*perm)[b]));
}

TEST(VertexTransitivity, TooLarge) {
  EXPECT_EQ(kind_of([] { is_vertex_transitive(edgeless(17)); }), ErrorKind::TooLarge);
}

TEST(IndependenceNumber, NchvBounds) {
  EXPECT_EQ(independence_number(kChsh), 3u);
  EXPECT_EQ(independence_number(kNc), 2u);
  EXPECT_EQ(brute_force_alpha(kChsh), 3u);
  EXPECT_EQ(brute_force_alpha(kNc), 2u);
}

TEST(IndependenceNumber, MatchesBruteForceOnRandomGraphs) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + trial % 14;
    const double p = 0.15 + 0.7 * (trial % 5) / 4.0;
    const auto g = random_graph(n, p, rng);
    EXPECT_EQ(independence_number(g), brute_force_alpha(g)) << "n = " << n;
  }
}

TEST(IndependenceNumber, EdgeCases) {
  EXPECT_EQ(independence_number(edgeless(0)), 0u);
  EXPECT_EQ(independence_number(edgeless(9)), 9u);
  EXPECT_EQ(independence_number(complete(9)), 1u);
  EXPECT_EQ(kind_of([] { independence_number(edgeless(25)); }), ErrorKind::TooLarge);
}

TEST(Cliques, MaximalCliquesOfScenarioGraphs) {
  // C8(3,4) is triangle-free: its maximal cliques are its 12 edges.
  const auto chsh = maximal_cliques(kChsh);
  for (const auto& c : chsh) {
    EXPECT_TRUE(is_clique(kChsh, c));
    EXPECT_EQ(c.size(), 2u);
  }
  EXPECT_EQ(chsh.size(), 12u);
  // C8(1,2): the eight consecutive triples.
  const auto nc = maximal_cliques(kNc);
  EXPECT_EQ(nc.size(), 8u);
  for (const auto& c : nc) EXPECT_EQ(c.size(), 3u);
  EXPECT_FALSE(is_clique(kNc, {0, 3}));
}

TEST(DisjunctiveProduct, EdgeCountMatchesCountingFormula) {
  const auto p = disjunctive_product(kChsh, kNc);
  EXPECT_EQ(p.n(), 64u);
  // Non-adjacent pairs are those non-adjacent in both factors:
  // (i, i') non-adjacent or equal in G_a and (j, j') non-adjacent or equal in G_b.
  const std::size_t na = 8 * (1 + 4);  // ordered pairs, including i == i'
  const std::size_t nb = 8 * (1 + 3);
  const std::size_t non_edges = (na * nb - 64) / 2;
  EXPECT_EQ(p.edge_count(), 64u * 63u / 2 - non_edges);
  EXPECT_EQ(p.edge_count(), 1408u);
}

TEST(DisjunctiveProduct, AdjacencyRule) {
  const auto p = disjunctive_product(kChsh, kNc);
  for (std::size_t a = 0; a < 64; ++a) {
    for (std::size_t b = a + 1; b < 64; ++b) {
      const bool expected = kChsh.adjacent(a / 8, b / 8) || kNc.adjacent(a % 8, b % 8);
      ASSERT_EQ(p.adjacent(a, b), expected) << a << "," << b;
    }
  }
  EXPECT_EQ(kind_of([] { disjunctive_product(edgeless(9), edgeless(8)); }), ErrorKind::TooLarge);
}

TEST(Serialization, DotRoundTrip) {
  const auto p = disjunctive_product(kChsh, kNc);
  EXPECT_EQ(from_dot(to_dot(p)), p);
  const std::vector<std::string> labels{"a", "b \"q\"", "c", "d", "e", "f", "g", "h"};
  const auto dot = to_dot(kNc, labels, "F1c");
  EXPECT_NE(dot.find("0 -- 1;"), std::string::npos);
  EXPECT_EQ(from_dot(dot), kNc);
}

TEST(Serialization, JsonRoundTrip) {
  EXPECT_EQ(from_json(to_json(kChsh)), kChsh);
  EXPECT_EQ(from_json(to_json(kNc, {"0", "1", "2", "3", "4", "5", "6", "7"})), kNc);
}

TEST(Serialization, MalformedInput) {
  EXPECT_EQ(kind_of([] { from_dot("digraph { a -> b }"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { from_json("{\"n\": 3, \"edges\": [[0]]}"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { from_json("not json"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { to_dot(kNc, {"only one"}); }), ErrorKind::DimensionMismatch);
}
