#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "symcap/bitset.hpp"
#include "symcap/configuration.hpp"
#include "symcap/graph.hpp"

namespace symcap {

/// Explicit symmetric power G[k]. Vertex i is the configuration of rank i in
/// the canonical order; adjacency rows are bitsets over ranks.
struct QuotientGraph {
  Graph base;
  Weight k = 0;
  std::vector<Bitset> adjacency;

  std::size_t vertex_count() const { return adjacency.size(); }
  Configuration configuration(std::size_t i) const { return unrank(base.vertex_count(), k, i); }
  std::size_t edge_count() const;

  /// The quotient viewed as an ordinary Graph (for edge-list export).
  Graph as_graph() const;
};

struct QuotientOptions {
  std::uint64_t vertex_cap = 100'000;
  /// Worker threads for pair evaluation; the result does not depend on it.
  unsigned threads = 1;
};

/// Builds G[k] by running the transport oracle on every unordered pair of
/// configurations. Throws CapExceeded above options.vertex_cap vertices.
QuotientGraph build_quotient(const Graph& g, Weight k, const QuotientOptions& options = {});

/// Default cap on the number of k-tuples the strong-power oracle materializes.
inline constexpr std::uint64_t kDefaultTupleCap = 1'000'000;

/// Reference construction of G[k] as the quotient of the strong power G^k by
/// coordinate permutations: two orbits are adjacent iff they differ and some
/// pair of representatives is adjacent in the strong power. Single-threaded,
/// and shares nothing with the transport oracle. Throws CapExceeded when
/// n^k exceeds tuple_cap.
QuotientGraph strong_power_quotient_oracle(const Graph& g, Weight k,
                                           std::uint64_t tuple_cap = kDefaultTupleCap);

/// The automorphism of G[k] induced by an automorphism of the base graph:
/// rank i goes to the rank of the configuration with weight f(v) moved to
/// perm[v].
std::vector<std::size_t> lift_automorphism(const QuotientGraph& q, const Permutation& perm);

/// Lifts of every base automorphism, suitable as a solver symmetry hint.
std::vector<std::vector<std::size_t>> quotient_symmetries(const QuotientGraph& q);

/// JSON object mapping each rank to its configuration string, for use next to
/// an edge-list export of the quotient.
std::string rank_map_json(const QuotientGraph& q);

}  // namespace symcap
