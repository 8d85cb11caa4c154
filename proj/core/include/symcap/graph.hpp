#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symcap/bitset.hpp"

namespace symcap {

using Vertex = std::size_t;

/// Set of vertices of a particular graph; all set bits are < the graph's n.
using VertexSet = Bitset;

/// Finite simple undirected graph on vertices 0..n-1 with bitset adjacency.
///
/// Invariants: n >= 1, no self-loops, symmetric adjacency. Instances are
/// immutable once built and safe to share across threads.
class Graph {
 public:
  /// Builds a graph from an edge list. Duplicate edges are collapsed; a
  /// self-loop or an out-of-range endpoint throws InvalidArgument.
  Graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges);

  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const;
  std::size_t degree(Vertex v) const { return adjacency_[v].count(); }
  bool has_edge(Vertex u, Vertex v) const { return adjacency_[u].test(v); }
  const VertexSet& neighbors(Vertex v) const { return adjacency_[v]; }
  const std::vector<Bitset>& adjacency() const { return adjacency_; }

  /// Edges (u, v) with u < v, sorted.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  /// Subgraph induced by `keep`, with vertices renumbered in increasing order.
  /// `keep` must be nonempty.
  Graph induced(const VertexSet& keep) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<Bitset> adjacency_;
};

/// Named graph families. cycle(5) has edges {0,1},{1,2},{2,3},{3,4},{4,0}:
/// the pentagon with the 1-based labels shifted down by one.
enum class Family { kCycle, kPath, kComplete, kEmpty, kPetersen };

/// Parses "cycle", "path", "complete", "empty" or "petersen".
Family parse_family(std::string_view name);

/// Builds the named graph. `size` is ignored for petersen (always n = 10).
/// Throws InvalidArgument when size is too small for the family.
Graph construct_named(Family family, std::size_t size);
Graph construct_named(std::string_view family, std::size_t size);

/// Parses either the "n m" edge-list format or DIMACS .col ("p edge n m",
/// 1-based "e u v" lines, "c" comments). The format is detected from the
/// first non-comment line. Throws ParseError on malformed input.
Graph parse_graph(std::string_view text);

/// Edge-list serialization ("n m" header then one "u v" per line).
std::string to_edge_list(const Graph& g);

Graph complement(const Graph& g);

bool is_independent(const Graph& g, const VertexSet& s);

/// {v} together with all neighbours of v.
VertexSet closed_neighborhood(const Graph& g, Vertex v);

/// Independence number alpha(G), via the exact branch-and-bound solver.
/// Throws BudgetExhausted if the solver does not finish.
std::size_t alpha_exact(const Graph& g);

/// Clique cover number theta(G), computed as the chromatic number of the
/// complement by exact branch-and-bound colouring.
std::size_t clique_cover_number(const Graph& g);

/// Exact chromatic number by DSATUR-ordered branch and bound.
std::size_t chromatic_number(const Graph& g);

/// A vertex permutation: perm[v] is the image of v.
using Permutation = std::vector<Vertex>;

/// All automorphisms of g, identity included, found by backtracking over
/// degree-compatible images. Throws CapExceeded past `cap` automorphisms.
std::vector<Permutation> automorphisms(const Graph& g, std::size_t cap = 100'000);

}  // namespace symcap
