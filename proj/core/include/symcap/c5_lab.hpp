#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symcap/configuration.hpp"

namespace symcap::c5 {

// Pentagon labelling: vertex i is joined to i+1 (mod 5), and edge i is the
// edge {i, i+1 mod 5}. In 1-based terms edge e_j joins v_j and v_{j+1}, and
// e_5 joins v_5 and v_1.
inline constexpr std::size_t kVertices = 5;
inline constexpr std::size_t kEdges = 5;

/// Endpoints of edge e (0-based).
std::array<std::size_t, 2> edge_endpoints(std::size_t e);

/// k indistinguishable pebbles distributed over the five edges of C5.
struct EdgeConfiguration {
  Configuration load;

  Weight total() const { return load.total(); }
  Weight operator[](std::size_t e) const { return load[e]; }
  friend bool operator==(const EdgeConfiguration&, const EdgeConfiguration&) = default;
};

/// All C(k+4, 4) edge configurations, in the canonical configuration order.
std::vector<EdgeConfiguration> enumerate_edge_configs(Weight k);

/// Members of S_j (j = 1..5): edge configurations with no weight on e_{j-1}
/// and e_{j+1}, indices mod 5. Throws InvalidArgument for j outside 1..5.
std::vector<EdgeConfiguration> s_set_members(std::size_t j, Weight k);

/// True iff psi arises from f by moving every pebble onto an edge incident
/// to its vertex (no pebble may stay). Throws InvalidArgument on a weight or
/// length mismatch.
bool ve_adjacent(const Configuration& f, const EdgeConfiguration& psi);

struct WeightedCount {
  /// Sum over j of the S_j members adjacent to f.
  std::uint64_t total = 0;
  /// per_set[j-1] is the S_j summand.
  std::array<std::uint64_t, 5> per_set{};
};

/// Counts edge configurations adjacent to f, each once for every S_j that
/// contains it.
WeightedCount weighted_adjacent_count(const Configuration& f);

/// Outcome of one mechanical check. Counterexamples are sorted.
struct AuditResult {
  Weight k = 0;
  std::string check;
  bool ok = true;
  std::vector<std::string> counterexamples;
};

struct AuditOptions {
  /// Test hook: flips the G[k] adjacency of the first two configurations so
  /// the midpoint audit must report a counterexample.
  bool inject_fault = false;
};

/// weighted_adjacent_count(f) = k+5 for every f, and the S_j summand equals
/// f(v_{j+3}) + 1.
AuditResult counting_audit(Weight k);

/// |S_j| = C(k+2, 2) for every j, and the sizes add up to 5*C(k+2, 2).
AuditResult cardinality_audit(Weight k);

/// For every ordered pair f != g of weight-k configurations, f and g are
/// adjacent in C5[k] iff some edge configuration is adjacent to both.
AuditResult midpoint_characterization_audit(Weight k, const AuditOptions& options = {});

/// For an independent set of C5[k], no edge configuration is adjacent to two
/// members. Throws InvalidArgument if the set is not independent.
AuditResult disjointness_audit(const std::vector<Configuration>& members);

struct Prop1Record {
  std::uint64_t bound = 0;
  std::uint64_t recomputed = 0;
  std::optional<bool> alpha_ok;
};

/// Recomputes the bound from the count floor(5*C(k+2,2)/(k+5)) and
/// compares it to the closed form; checks alpha against it when given.
Prop1Record prop1_audit(Weight k, std::optional<std::uint64_t> alpha = std::nullopt);

}  // namespace symcap::c5
