#include "symcap/c5_lab.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "symcap/binomial.hpp"
#include "symcap/bounds.hpp"
#include "symcap/error.hpp"
#include "symcap/quotient.hpp"

namespace symcap::c5 {
namespace {

oracle::Matrix pentagon_matrix() {
  return oracle::adjacency_matrix(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
}

// 0-based edges missing from S_j: e_{j-1} and e_{j+1} in 1-based terms.
bool in_s_set(std::size_t j, const oracle::Weights& psi) {
  return psi[(j + 3) % 5] == 0 && psi[j % 5] == 0;
}

EdgeConfiguration edge_config(const oracle::Weights& w) { return EdgeConfiguration{Configuration(w)}; }

TEST(EdgeConfigs, Counts) {
  EXPECT_EQ(enumerate_edge_configs(1).size(), 5U);
  EXPECT_EQ(enumerate_edge_configs(2).size(), 15U);
  EXPECT_EQ(enumerate_edge_configs(0).size(), 1U);
  for (Weight k = 0; k <= 8; ++k) {
    const auto all = enumerate_edge_configs(k);
    ASSERT_EQ(all.size(), oracle::compositions(5, k).size());
    for (std::size_t i = 0; i < all.size(); ++i) EXPECT_EQ(all[i].load.weights(), oracle::compositions(5, k)[i]);
  }
}

TEST(EdgeConfigs, Endpoints) {
  for (std::size_t e = 0; e < kEdges; ++e) {
    const auto [a, b] = edge_endpoints(e);
    EXPECT_EQ(a, e);
    EXPECT_EQ(b, (e + 1) % 5);
  }
}

TEST(SSets, WeightOneExample) {
  // S_1 avoids e_5 and e_2, leaving single pebbles on e_1, e_3, e_4.
  const auto members = s_set_members(1, 1);
  ASSERT_EQ(members.size(), 3U);
  std::vector<std::size_t> edges;
  for (const auto& m : members)
    for (std::size_t e = 0; e < kEdges; ++e)
      if (m[e] == 1) edges.push_back(e);
  std::sort(edges.begin(), edges.end());
  EXPECT_EQ(edges, (std::vector<std::size_t>{0, 2, 3}));
}

TEST(SSets, MatchBruteForceMembership) {
  for (Weight k = 0; k <= 6; ++k)
    for (std::size_t j = 1; j <= 5; ++j) {
      std::vector<oracle::Weights> expected;
      for (const auto& w : oracle::compositions(5, k))
        if (in_s_set(j, w)) expected.push_back(w);
      std::vector<oracle::Weights> got;
      for (const auto& m : s_set_members(j, k)) got.push_back(m.load.weights());
      EXPECT_EQ(got, expected) << "j=" << j << " k=" << k;
    }
}

TEST(SSets, Cardinalities) {
  for (Weight k = 0; k <= 50; ++k) {
    std::uint64_t total = 0;
    for (std::size_t j = 1; j <= 5; ++j) {
      const auto size = s_set_members(j, k).size();
      ASSERT_EQ(Count{size}, binomial(k + 2, 2));
      total += size;
    }
    EXPECT_EQ(Count{total}, Count{5} * binomial(k + 2, 2));
  }
  EXPECT_THROW(s_set_members(0, 1), InvalidArgument);
  EXPECT_THROW(s_set_members(6, 1), InvalidArgument);
}

TEST(VeAdjacent, Examples) {
  // A pebble on v_0 can go to e_0 or e_4, nowhere else.
  EXPECT_TRUE(ve_adjacent(Configuration({1, 0, 0, 0, 0}), edge_config({1, 0, 0, 0, 0})));
  EXPECT_TRUE(ve_adjacent(Configuration({1, 0, 0, 0, 0}), edge_config({0, 0, 0, 0, 1})));
  EXPECT_FALSE(ve_adjacent(Configuration({1, 0, 0, 0, 0}), edge_config({0, 1, 0, 0, 0})));
  EXPECT_TRUE(ve_adjacent(Configuration({2, 0, 0, 0, 0}), edge_config({1, 0, 0, 0, 1})));
  EXPECT_TRUE(ve_adjacent(Configuration({1, 1, 0, 0, 0}), edge_config({2, 0, 0, 0, 0})));
  EXPECT_FALSE(ve_adjacent(Configuration({0, 0, 2, 0, 0}), edge_config({2, 0, 0, 0, 0})));
  EXPECT_TRUE(ve_adjacent(Configuration({0, 0, 0, 0, 0}), edge_config({0, 0, 0, 0, 0})));
  EXPECT_THROW(ve_adjacent(Configuration({1, 0, 0, 0, 0}), edge_config({2, 0, 0, 0, 0})), InvalidArgument);
  EXPECT_THROW(ve_adjacent(Configuration({1, 0, 0}), edge_config({1, 0, 0})), InvalidArgument);
}

TEST(VeAdjacent, MatchesSplitEnumeration) {
  for (Weight k = 0; k <= 4; ++k)
    for (const auto& f : oracle::compositions(5, k))
      for (const auto& psi : oracle::compositions(5, k))
        ASSERT_EQ(ve_adjacent(Configuration(f), edge_config(psi)), oracle::pentagon_ve_adjacent(f, psi));
}

TEST(WeightedCount, Examples) {
  EXPECT_EQ(weighted_adjacent_count(Configuration({0, 1, 0, 0, 0})).total, 6U);
  EXPECT_EQ(weighted_adjacent_count(Configuration({0, 0, 0, 0, 0})).total, 5U);
}

TEST(WeightedCount, ExhaustiveAgainstBruteForce) {
  for (Weight k = 0; k <= 6; ++k)
    for (const auto& f : oracle::compositions(5, k)) {
      const WeightedCount got = weighted_adjacent_count(Configuration(f));
      std::uint64_t total = 0;
      for (std::size_t j = 1; j <= 5; ++j) {
        std::uint64_t summand = 0;
        for (const auto& psi : oracle::compositions(5, k))
          if (in_s_set(j, psi) && oracle::pentagon_ve_adjacent(f, psi)) ++summand;
        ASSERT_EQ(got.per_set[j - 1], summand);
        ASSERT_EQ(summand, f[(j + 2) % 5] + 1U);
        total += summand;
      }
      ASSERT_EQ(got.total, total);
      ASSERT_EQ(total, k + 5U);
    }
}

TEST(Audits, CountingAndCardinality) {
  for (Weight k = 0; k <= 6; ++k) {
    const AuditResult c = counting_audit(k);
    EXPECT_TRUE(c.ok) << k;
    EXPECT_TRUE(c.counterexamples.empty());
    EXPECT_EQ(c.k, k);
    EXPECT_TRUE(cardinality_audit(k).ok);
  }
}

TEST(Audits, MidpointCharacterization) {
  for (Weight k = 1; k <= 5; ++k) {
    const AuditResult r = midpoint_characterization_audit(k);
    EXPECT_TRUE(r.ok) << k;
    EXPECT_TRUE(r.counterexamples.empty());
  }
}

// Same statement, reproduced from the transport and split oracles only.
TEST(Audits, MidpointCharacterizationFromOracles) {
  const auto adj = pentagon_matrix();
  for (Weight k = 1; k <= 3; ++k) {
    const auto configs = oracle::compositions(5, k);
    for (const auto& f : configs)
      for (const auto& g : configs) {
        if (f == g) continue;
        bool midpoint = false;
        for (const auto& psi : configs)
          if (oracle::pentagon_ve_adjacent(f, psi) && oracle::pentagon_ve_adjacent(g, psi)) midpoint = true;
        ASSERT_EQ(oracle::transport_exists(adj, f, g), midpoint);
      }
  }
}

TEST(Audits, InjectedFaultIsCaught) {
  AuditOptions opts;
  opts.inject_fault = true;
  const AuditResult r = midpoint_characterization_audit(2, opts);
  EXPECT_FALSE(r.ok);
  EXPECT_FALSE(r.counterexamples.empty());
  EXPECT_TRUE(std::is_sorted(r.counterexamples.begin(), r.counterexamples.end()));
}

TEST(Disjointness, SmallSets) {
  EXPECT_TRUE(disjointness_audit({Configuration({2, 0, 0, 0, 0}), Configuration({0, 0, 2, 0, 0})}).ok);
  EXPECT_TRUE(disjointness_audit({Configuration({1, 1, 1, 0, 0})}).ok);
  EXPECT_THROW(disjointness_audit({Configuration({1, 0, 0, 0, 0}), Configuration({0, 1, 0, 0, 0})}),
               InvalidArgument);
}

TEST(Disjointness, CertificatesAndRandomSets) {
  const Graph pentagon = construct_named(Family::kCycle, 5);
  for (Weight k = 1; k <= 6; ++k) {
    const QuotientGraph q = build_quotient(pentagon, k);
    const SolveReport rep = solve_symmetric_power(q, SolveBudget{});
    ASSERT_TRUE(rep.optimal);
    std::vector<Configuration> members;
    for (std::size_t r : rep.certificate.members) members.push_back(q.configuration(r));
    EXPECT_TRUE(disjointness_audit(members).ok) << k;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      members.clear();
      for (std::size_t r : random_maximal_independent_set(q.adjacency, seed).members)
        members.push_back(q.configuration(r));
      EXPECT_TRUE(disjointness_audit(members).ok) << k << " seed " << seed;
    }
  }
}

TEST(Prop1, Records) {
  const Prop1Record r = prop1_audit(9, 10);
  EXPECT_EQ(r.bound, 19U);
  EXPECT_EQ(r.recomputed, 19U);
  ASSERT_TRUE(r.alpha_ok.has_value());
  EXPECT_TRUE(*r.alpha_ok);
  EXPECT_FALSE(*prop1_audit(9, 20).alpha_ok);
  EXPECT_FALSE(prop1_audit(3).alpha_ok.has_value());
}

TEST(Prop1, ClosedFormAgreesWithCount) {
  for (Weight k = 0; k <= 1000; ++k) {
    const Prop1Record r = prop1_audit(k);
    ASSERT_EQ(r.bound, r.recomputed) << k;
    const Count expected = Count{5} * binomial(k + 2, 2) / (k + 5);
    ASSERT_EQ(Count{r.bound}, expected);
  }
}

}  // namespace
}  // namespace symcap::c5
