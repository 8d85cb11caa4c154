#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symcap/binomial.hpp"
#include "symcap/configuration.hpp"
#include "symcap/graph.hpp"
#include "symcap/mis_solver.hpp"

namespace symcap {

/// C(k+alpha-1, alpha-1): configurations supported on a maximum independent
/// set of G are pairwise non-adjacent in G[k].
Count lower_bound(std::uint64_t alpha_base, std::uint64_t k);

/// C(k+theta-1, theta-1): configurations with the same load on every clique
/// of a minimum clique cover are mutually reachable.
Count upper_bound_theta(std::uint64_t theta_base, std::uint64_t k);

/// floor(5(k+2)(k+1) / (2(k+5))), the pentagon-specific upper bound on
/// alpha(C5[k]).
std::uint64_t c5_upper_bound(std::uint64_t k);

struct QuotientGraph;

/// Ranks of every configuration of G[k] supported on `support`. When support
/// is independent in the base graph these are pairwise non-adjacent, giving
/// the lower_bound witness.
IndependentSetCertificate supported_certificate(const QuotientGraph& q, const VertexSet& support);

/// A maximum independent set of the base graph (exact solve).
VertexSet maximum_independent_set(const Graph& g);

/// solve_exact on G[k], seeded with the supported-configuration set and
/// hinted with the automorphisms lifted from the base graph.
SolveReport solve_symmetric_power(const QuotientGraph& q, const SolveBudget& budget);

struct ExactAlpha {
  std::uint64_t value = 0;
  bool optimal = false;
};

struct BoundsReport {
  std::uint64_t k = 0;
  std::uint64_t alpha_base = 0;
  std::uint64_t theta_base = 0;
  Count lower = 0;
  Count upper_theta = 0;
  std::optional<std::uint64_t> upper_c5;
  std::optional<ExactAlpha> alpha_exact;
};

/// Base parameters of a graph, computed once and reused across k.
struct BaseParameters {
  std::uint64_t alpha = 0;
  std::uint64_t theta = 0;
  bool is_c5 = false;
};

BaseParameters base_parameters(const Graph& g);

/// Closed-form bounds for G[k]; alpha_exact is left empty.
BoundsReport bounds_report(const BaseParameters& base, std::uint64_t k);

struct CapacitySample {
  std::uint64_t k = 0;
  std::uint64_t alpha = 0;
  /// log(alpha) / log(k)
  double ratio = 0.0;
  /// alpha * (alpha(G)-1)! / k^(alpha(G)-1); exploratory only.
  double normalized = 0.0;
};

struct CapacityEstimate {
  std::vector<CapacitySample> samples;
  /// alpha(G) - 1, the value the ratios approach.
  std::uint64_t target = 0;
  /// Values of k whose solve was not optimal; they carry no sample.
  std::vector<std::uint64_t> skipped;
};

/// Solves G[k] exactly for k = 2..k_max and records log alpha / log k for
/// every optimal solve. Non-optimal k are skipped with a warning on stderr.
CapacityEstimate estimate_capacity(const Graph& g, std::uint64_t k_max, const SolveBudget& budget);

/// Cell of the partition of an independent set of G[k]: pivot vertex j (the
/// lowest id of maximum weight), total weight m on N[j], and for every vertex
/// i the interval index b_i with b_i*k <= 2n^2*f(i) < (b_i+1)*k.
struct ChunkKey {
  std::size_t pivot = 0;
  Weight neighborhood_weight = 0;
  std::vector<std::uint64_t> intervals;

  friend auto operator<=>(const ChunkKey&, const ChunkKey&) = default;
  friend bool operator==(const ChunkKey&, const ChunkKey&) = default;
};

using ChunkMap = std::map<ChunkKey, std::vector<Configuration>>;

/// Chunk key of a single configuration.
ChunkKey chunk_key(const Graph& g, const Configuration& f);

/// n(k+1)(2n^2+1), the maximum number of distinct chunk keys.
Count max_chunk_count(std::uint64_t n, std::uint64_t k);

/// Partitions an independent set of G[k] into chunks. Throws InvalidArgument
/// if h is not independent or its members have inconsistent shape.
ChunkMap chunk_partition(const Graph& g, Weight k, const std::vector<Configuration>& h);

/// Projects the chunk onto G - N[pivot] and checks that the projections are
/// pairwise distinct and non-adjacent in (G - N[pivot])[k-m]. Throws
/// InvalidArgument if a member's key does not match `key`.
bool check_chunk_independence(const Graph& g, Weight k, const ChunkKey& key,
                              const std::vector<Configuration>& chunk);

}  // namespace symcap
