#include "symcap/quotient.hpp"

#include <gtest/gtest.h>

#include "json.hpp"
#include "oracles.hpp"
#include "symcap/error.hpp"
#include "symcap/transport.hpp"

namespace symcap {
namespace {

const Graph kPentagon = construct_named(Family::kCycle, 5);

// Relabels g by the ranks of the unit configurations in G[1].
Graph unit_relabelled(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> es;
  const std::size_t n = g.vertex_count();
  for (const auto& [u, v] : g.edges())
    es.emplace_back(rank(Configuration::point_mass(n, u, 1)), rank(Configuration::point_mass(n, v, 1)));
  return Graph(n, es);
}

TEST(BuildQuotient, WeightOneRecoversBase) {
  for (const Graph& g : {kPentagon, construct_named(Family::kPath, 3), construct_named(Family::kPetersen, 0),
                         construct_named(Family::kComplete, 4), construct_named(Family::kEmpty, 3)}) {
    const QuotientGraph q = build_quotient(g, 1);
    EXPECT_EQ(q.as_graph(), unit_relabelled(g));
  }
}

TEST(BuildQuotient, PentagonWeightTwoHasFifteenVertices) {
  const QuotientGraph q = build_quotient(kPentagon, 2);
  EXPECT_EQ(q.vertex_count(), 15U);
}

TEST(BuildQuotient, TriangleGivesCompleteGraphs) {
  const oracle::Matrix triangle = oracle::adjacency_matrix(3, {{0, 1}, {1, 2}, {0, 2}});
  for (Weight k = 0; k <= 6; ++k) {
    const QuotientGraph q = build_quotient(construct_named(Family::kComplete, 3), k);
    const std::size_t size = q.vertex_count();
    EXPECT_EQ(q.edge_count(), size * (size - 1) / 2);
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = i + 1; j < size; ++j)
        EXPECT_TRUE(oracle::transport_exists(triangle, q.configuration(i).weights(), q.configuration(j).weights()));
  }
}

TEST(BuildQuotient, Extremes) {
  for (Weight k = 0; k <= 4; ++k) {
    EXPECT_EQ(build_quotient(construct_named(Family::kEmpty, 3), k).edge_count(), 0U);
    const QuotientGraph q = build_quotient(construct_named(Family::kComplete, 4), k);
    EXPECT_EQ(q.edge_count(), q.vertex_count() * (q.vertex_count() - 1) / 2);
  }
}

TEST(BuildQuotient, RowsMatchAdjacencyOracle) {
  const QuotientGraph q = build_quotient(kPentagon, 3);
  for (std::size_t i = 0; i < q.vertex_count(); ++i) {
    EXPECT_FALSE(q.adjacency[i].test(i));
    for (std::size_t j = 0; j < q.vertex_count(); ++j) {
      EXPECT_EQ(q.adjacency[i].test(j), q.adjacency[j].test(i));
      EXPECT_EQ(q.adjacency[i].test(j), adjacent(kPentagon, q.configuration(i), q.configuration(j)));
    }
  }
}

TEST(BuildQuotient, ThreadCountDoesNotChangeResult) {
  const QuotientGraph one = build_quotient(kPentagon, 5, {.threads = 1});
  const QuotientGraph four = build_quotient(kPentagon, 5, {.threads = 4});
  EXPECT_EQ(one.adjacency, four.adjacency);
}

TEST(BuildQuotient, CapIsEnforced) {
  EXPECT_THROW(build_quotient(kPentagon, 9, {.vertex_cap = 700}), CapExceeded);
}

TEST(StrongPowerOracle, EdgeSquared) {
  const QuotientGraph q = strong_power_quotient_oracle(construct_named(Family::kComplete, 2), 2);
  ASSERT_EQ(q.vertex_count(), 3U);
  EXPECT_EQ(q.configuration(0), Configuration({2, 0}));
  EXPECT_EQ(q.configuration(1), Configuration({1, 1}));
  EXPECT_EQ(q.configuration(2), Configuration({0, 2}));
  EXPECT_EQ(q.edge_count(), 3U);
}

TEST(StrongPowerOracle, AgreesWithTransportConstruction) {
  EXPECT_EQ(strong_power_quotient_oracle(kPentagon, 1).adjacency, build_quotient(kPentagon, 1).adjacency);
  const Graph p3 = construct_named(Family::kPath, 3);
  EXPECT_EQ(strong_power_quotient_oracle(p3, 2).adjacency, build_quotient(p3, 2).adjacency);
  for (Weight k = 0; k <= 3; ++k)
    EXPECT_EQ(strong_power_quotient_oracle(kPentagon, k).adjacency, build_quotient(kPentagon, k).adjacency);
}

TEST(StrongPowerOracle, CapIsEnforced) {
  EXPECT_THROW(strong_power_quotient_oracle(kPentagon, 9), CapExceeded);
  EXPECT_THROW(strong_power_quotient_oracle(kPentagon, 3, 100), CapExceeded);
}

TEST(LiftAutomorphism, PreservesAdjacency) {
  const QuotientGraph q = build_quotient(kPentagon, 4);
  const auto lifted = quotient_symmetries(q);
  EXPECT_EQ(lifted.size(), 10U);
  for (const auto& perm : lifted)
    for (std::size_t i = 0; i < q.vertex_count(); ++i)
      q.adjacency[i].for_each([&](std::size_t j) { EXPECT_TRUE(q.adjacency[perm[i]].test(perm[j])); });
}

TEST(RankMap, ListsEveryConfiguration) {
  const QuotientGraph q = build_quotient(kPentagon, 2);
  const auto j = nlohmann::json::parse(rank_map_json(q));
  EXPECT_EQ(j["k"], 2);
  EXPECT_EQ(j["ranks"].size(), 15U);
  EXPECT_EQ(j["ranks"]["0"], "2,0,0,0,0");
  EXPECT_EQ(parse_graph(to_edge_list(q.as_graph())), q.as_graph());
}

}  // namespace
}  // namespace symcap
