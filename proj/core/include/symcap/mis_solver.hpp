#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "symcap/bitset.hpp"

namespace symcap {

/// A witnessed independent set: members are vertex ids (configuration ranks
/// when the graph is a quotient), sorted ascending.
struct IndependentSetCertificate {
  std::vector<std::size_t> members;

  std::size_t size() const { return members.size(); }
};

struct SolveBudget {
  std::uint64_t max_nodes = 100'000'000;
  double max_seconds = 600.0;
  /// Worker threads. Above 1 the node count is no longer reproducible, but
  /// alpha and the optimality flag of a completed search are.
  unsigned threads = 1;
};

struct SolveReport {
  std::size_t alpha = 0;
  /// True iff the search completed, so alpha is the independence number.
  bool optimal = false;
  std::uint64_t nodes_explored = 0;
  std::chrono::milliseconds elapsed{0};
  IndependentSetCertificate certificate;
};

/// Exact maximum independent set by branch and bound over bitsets.
///
/// Branches on a vertex of maximum residual degree (lowest id on ties): the
/// include branch drops its closed neighbourhood, the exclude branch drops
/// the vertex. Subtrees are pruned when the current size plus a greedy clique
/// cover of the residual graph cannot beat the incumbent. `initial`, if
/// given, seeds the incumbent (it must be a valid certificate).
///
/// `symmetries`, if given, are automorphisms of the graph (perm[v] is the
/// image of v); at the root, once every set containing v has been searched,
/// the whole orbit of v is dropped. They are checked before use.
///
/// Running out of budget is not an error: the report then carries
/// optimal = false and the best set found. Throws InvalidArgument if some
/// vertex is adjacent to itself or a symmetry is not an automorphism.
SolveReport solve_exact(std::span<const Bitset> adjacency, const SolveBudget& budget,
                        const IndependentSetCertificate& initial = {},
                        std::span<const std::vector<std::size_t>> symmetries = {});

/// Seeded local search: greedy maximal sets on random vertex orders, each
/// improved by (1,2)-swaps. Deterministic in (adjacency, seed, iterations,
/// initial). Throws InvalidArgument when iterations == 0.
IndependentSetCertificate heuristic_search(std::span<const Bitset> adjacency, std::uint64_t seed,
                                           std::uint64_t iterations,
                                           const IndependentSetCertificate& initial = {});

/// Maximal independent set grown greedily along a random vertex order drawn
/// from `seed`.
IndependentSetCertificate random_maximal_independent_set(std::span<const Bitset> adjacency,
                                                         std::uint64_t seed);

/// True iff every member id is in range, ids are distinct and pairwise
/// non-adjacent.
bool verify_certificate(std::span<const Bitset> adjacency, const IndependentSetCertificate& c);

}  // namespace symcap
