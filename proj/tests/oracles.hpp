#pragma once

// Brute-force reference computations for the test suites. Nothing here calls
// into the library's solvers, flow code or ranking; inputs are plain vectors.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace symcap::oracle {

using Matrix = std::vector<std::vector<bool>>;
using Weights = std::vector<std::uint32_t>;

Matrix adjacency_matrix(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

/// Independence number by enumerating all 2^n subsets (n <= 20).
std::size_t alpha_by_subsets(const Matrix& adj);

/// Clique cover number by trying every set partition of the vertices (n <= 10).
std::size_t clique_cover_by_partitions(const Matrix& adj);

/// Petersen graph as the Kneser graph K(5,2): 2-subsets of {0..4},
/// adjacent when disjoint.
Matrix kneser_petersen();

/// All weak compositions of k into n parts, sorted lexicographically decreasing.
std::vector<Weights> compositions(std::size_t n, std::uint32_t k);

/// Whether some nonnegative integer matrix with row sums `from`, column sums
/// `to`, and support on the diagonal and edges of `adj` exists; found by
/// exhaustive enumeration of the rows.
bool transport_exists(const Matrix& adj, const Weights& from, const Weights& to);

/// Independent validator for a transport plan.
bool plan_is_valid(const Matrix& adj, const Weights& from, const Weights& to,
                   const std::vector<std::vector<std::uint32_t>>& moves);

/// Pentagon vertex/edge-configuration adjacency by enumerating, for every
/// vertex, how its pebbles split between its two incident edges.
bool pentagon_ve_adjacent(const Weights& f, const Weights& psi);

/// Random simple graph on n vertices with edge probability p.
std::vector<std::pair<std::size_t, std::size_t>> random_edges(std::size_t n, double p, std::mt19937_64& rng);

}  // namespace symcap::oracle
