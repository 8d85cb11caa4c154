#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "symcap/configuration.hpp"
#include "symcap/graph.hpp"

namespace symcap {

/// Witness of one pebble-move step: moves[u][v] pebbles travel from u to v,
/// moves[u][u] stay put. Every moved pebble crosses exactly one edge.
struct TransportPlan {
  std::vector<std::vector<Weight>> moves;

  /// Plan in which every pebble of f stays where it is.
  static TransportPlan identity(const Configuration& f);
};

/// Finds a one-step transport from `from` to `to` on g, or nullopt if none
/// exists. Decided by max flow on the source -> vertex -> vertex -> sink
/// network with arcs u -> v for u == v or {u, v} an edge. Throws
/// InvalidArgument on a length or total-weight mismatch.
std::optional<TransportPlan> find_transport(const Graph& g, const Configuration& from,
                                            const Configuration& to);

/// Adjacency in G[k]: distinct configurations joined by a one-step transport.
bool adjacent(const Graph& g, const Configuration& f, const Configuration& t);

}  // namespace symcap
