#include "symcap/c5_lab.hpp"

#include <algorithm>

#include "max_flow.hpp"
#include "symcap/binomial.hpp"
#include "symcap/bounds.hpp"
#include "symcap/error.hpp"
#include "symcap/graph.hpp"
#include "symcap/quotient.hpp"
#include "symcap/transport.hpp"

namespace symcap::c5 {

std::array<std::size_t, 2> edge_endpoints(std::size_t e) { return {e, (e + 1) % kVertices}; }

std::vector<EdgeConfiguration> enumerate_edge_configs(Weight k) {
  std::vector<EdgeConfiguration> out;
  for (auto& c : enumerate_configurations(kEdges, k)) out.push_back({std::move(c)});
  return out;
}

std::vector<EdgeConfiguration> s_set_members(std::size_t j, Weight k) {
  if (j < 1 || j > 5) throw InvalidArgument("S_j is defined for j = 1..5");
  // 0-based indices of e_{j-1} and e_{j+1}.
  const std::size_t before = (j + 3) % kEdges;
  const std::size_t after = j % kEdges;
  std::array<std::size_t, 3> free{};
  std::size_t f = 0;
  for (std::size_t e = 0; e < kEdges; ++e)
    if (e != before && e != after) free[f++] = e;

  std::vector<EdgeConfiguration> out;
  for (const auto& c : enumerate_configurations(3, k)) {
    std::vector<Weight> w(kEdges, 0);
    for (std::size_t i = 0; i < 3; ++i) w[free[i]] = c[i];
    out.push_back({Configuration(std::move(w))});
  }
  return out;
}

bool ve_adjacent(const Configuration& f, const EdgeConfiguration& psi) {
  if (f.size() != kVertices || psi.load.size() != kEdges)
    throw InvalidArgument("ve_adjacent: expected five vertex and five edge weights");
  if (f.total() != psi.total()) throw InvalidArgument("ve_adjacent: total weights differ");
  const std::int64_t k = f.total();
  if (k == 0) return true;
  // Nodes: vertices 0..4, edges 5..9, source 10, sink 11.
  detail::MaxFlow net(12);
  for (std::size_t v = 0; v < kVertices; ++v)
    if (f[v] > 0) net.add_capacity(10, v, f[v]);
  for (std::size_t e = 0; e < kEdges; ++e) {
    if (psi[e] > 0) net.add_capacity(5 + e, 11, psi[e]);
    for (std::size_t v : edge_endpoints(e)) net.add_capacity(v, 5 + e, k);
  }
  return net.run(10, 11) == k;
}

WeightedCount weighted_adjacent_count(const Configuration& f) {
  WeightedCount count;
  for (std::size_t j = 1; j <= 5; ++j) {
    for (const auto& psi : s_set_members(j, f.total()))
      if (ve_adjacent(f, psi)) ++count.per_set[j - 1];
    count.total += count.per_set[j - 1];
  }
  return count;
}

namespace {

void finish(AuditResult& r) {
  std::sort(r.counterexamples.begin(), r.counterexamples.end());
  r.ok = r.counterexamples.empty();
}

Graph pentagon() { return construct_named(Family::kCycle, 5); }

// Bitset over edge-configuration ranks of the psi adjacent to f.
Bitset adjacent_edge_configs(const Configuration& f, const std::vector<EdgeConfiguration>& psis) {
  Bitset out(psis.size());
  for (std::size_t i = 0; i < psis.size(); ++i)
    if (ve_adjacent(f, psis[i])) out.set(i);
  return out;
}

}  // namespace

AuditResult counting_audit(Weight k) {
  AuditResult r{k, "counting", true, {}};
  for (const auto& f : enumerate_configurations(kVertices, k)) {
    const WeightedCount c = weighted_adjacent_count(f);
    bool good = c.total == std::uint64_t{k} + 5;
    for (std::size_t j = 1; j <= 5; ++j) good = good && c.per_set[j - 1] == f[(j + 2) % kVertices] + 1U;
    if (!good) r.counterexamples.push_back(to_string(f) + " -> " + std::to_string(c.total));
  }
  finish(r);
  return r;
}

AuditResult cardinality_audit(Weight k) {
  AuditResult r{k, "cardinality", true, {}};
  const std::uint64_t expected = binomial_u64(std::uint64_t{k} + 2, 2);
  std::uint64_t total = 0;
  for (std::size_t j = 1; j <= 5; ++j) {
    const std::uint64_t size = s_set_members(j, k).size();
    total += size;
    if (size != expected)
      r.counterexamples.push_back("|S_" + std::to_string(j) + "| = " + std::to_string(size));
  }
  if (total != 5 * expected) r.counterexamples.push_back("total = " + std::to_string(total));
  finish(r);
  return r;
}

AuditResult midpoint_characterization_audit(Weight k, const AuditOptions& options) {
  AuditResult r{k, "midpoint", true, {}};
  QuotientGraph q = build_quotient(pentagon(), k);
  if (options.inject_fault && q.vertex_count() >= 2) {
    q.adjacency[0].flip(1);
    q.adjacency[1].flip(0);
  }
  const std::vector<EdgeConfiguration> psis = enumerate_edge_configs(k);
  std::vector<Bitset> reach;
  reach.reserve(q.vertex_count());
  for (std::size_t i = 0; i < q.vertex_count(); ++i) reach.push_back(adjacent_edge_configs(q.configuration(i), psis));

  for (std::size_t a = 0; a < q.vertex_count(); ++a)
    for (std::size_t b = 0; b < q.vertex_count(); ++b) {
      if (a == b) continue;
      const bool moved = q.adjacency[a].test(b);
      const bool midpoint = reach[a].intersects(reach[b]);
      if (moved != midpoint)
        r.counterexamples.push_back(to_string(q.configuration(a)) + " | " + to_string(q.configuration(b)) +
                                    (moved ? " adjacent without midpoint" : " midpoint without adjacency"));
    }
  finish(r);
  return r;
}

AuditResult disjointness_audit(const std::vector<Configuration>& members) {
  if (members.empty()) return {0, "disjointness", true, {}};
  const Weight k = members.front().total();
  const Graph g = pentagon();
  for (std::size_t a = 0; a < members.size(); ++a) {
    if (members[a].size() != kVertices || members[a].total() != k)
      throw InvalidArgument("disjointness_audit: members must be C5 configurations of equal weight");
    for (std::size_t b = a + 1; b < members.size(); ++b)
      if (members[a] == members[b] || adjacent(g, members[a], members[b]))
        throw InvalidArgument("disjointness_audit: set is not independent");
  }

  AuditResult r{k, "disjointness", true, {}};
  const std::vector<EdgeConfiguration> psis = enumerate_edge_configs(k);
  // owner[i] is the first member adjacent to edge configuration i.
  std::vector<std::size_t> owner(psis.size(), Bitset::npos);
  for (std::size_t m = 0; m < members.size(); ++m)
    adjacent_edge_configs(members[m], psis).for_each([&](std::size_t i) {
      if (owner[i] == Bitset::npos) {
        owner[i] = m;
      } else {
        r.counterexamples.push_back(to_string(psis[i].load) + " shared by " + to_string(members[owner[i]]) +
                                    " and " + to_string(members[m]));
      }
    });
  finish(r);
  return r;
}

Prop1Record prop1_audit(Weight k, std::optional<std::uint64_t> alpha) {
  Prop1Record rec;
  rec.bound = c5_upper_bound(k);
  const Count weighted_total = 5 * binomial(std::uint64_t{k} + 2, 2);
  rec.recomputed = static_cast<std::uint64_t>(weighted_total / (std::uint64_t{k} + 5));
  if (alpha) rec.alpha_ok = *alpha <= rec.recomputed;
  return rec;
}

}  // namespace symcap::c5
