#include "symcap/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>

#include "symcap/error.hpp"
#include "symcap/quotient.hpp"
#include "symcap/transport.hpp"

namespace symcap {

Count lower_bound(std::uint64_t alpha_base, std::uint64_t k) {
  if (alpha_base == 0) throw InvalidArgument("lower_bound: alpha must be >= 1");
  return binomial(k + alpha_base - 1, alpha_base - 1);
}

Count upper_bound_theta(std::uint64_t theta_base, std::uint64_t k) {
  if (theta_base == 0) throw InvalidArgument("upper_bound_theta: theta must be >= 1");
  return binomial(k + theta_base - 1, theta_base - 1);
}

std::uint64_t c5_upper_bound(std::uint64_t k) {
  const Count numerator = Count{5} * (k + 2) * (k + 1);
  const Count denominator = Count{2} * (k + 5);
  return static_cast<std::uint64_t>(numerator / denominator);
}

IndependentSetCertificate supported_certificate(const QuotientGraph& q, const VertexSet& support) {
  IndependentSetCertificate c;
  for (std::size_t i = 0; i < q.vertex_count(); ++i) {
    const Configuration f = q.configuration(i);
    bool inside = true;
    for (std::size_t v = 0; v < f.size() && inside; ++v) inside = f[v] == 0 || support.test(v);
    if (inside) c.members.push_back(i);
  }
  return c;
}

VertexSet maximum_independent_set(const Graph& g) {
  const SolveReport r = solve_exact(g.adjacency(), SolveBudget{});
  if (!r.optimal) throw BudgetExhausted("maximum_independent_set: solver budget exhausted");
  VertexSet s(g.vertex_count());
  for (std::size_t v : r.certificate.members) s.set(v);
  return s;
}

SolveReport solve_symmetric_power(const QuotientGraph& q, const SolveBudget& budget) {
  const auto symmetries = quotient_symmetries(q);
  return solve_exact(q.adjacency, budget, supported_certificate(q, maximum_independent_set(q.base)),
                     symmetries);
}

BaseParameters base_parameters(const Graph& g) {
  return {alpha_exact(g), clique_cover_number(g), g == construct_named(Family::kCycle, 5)};
}

BoundsReport bounds_report(const BaseParameters& base, std::uint64_t k) {
  BoundsReport r;
  r.k = k;
  r.alpha_base = base.alpha;
  r.theta_base = base.theta;
  r.lower = lower_bound(base.alpha, k);
  r.upper_theta = upper_bound_theta(base.theta, k);
  if (base.is_c5) r.upper_c5 = c5_upper_bound(k);
  return r;
}

CapacityEstimate estimate_capacity(const Graph& g, std::uint64_t k_max, const SolveBudget& budget) {
  if (k_max < 2) throw InvalidArgument("estimate_capacity: k_max must be >= 2");
  CapacityEstimate est;
  const std::uint64_t a = alpha_exact(g);
  est.target = a - 1;
  double factorial = 1.0;
  for (std::uint64_t i = 2; i < a; ++i) factorial *= static_cast<double>(i);

  for (std::uint64_t k = 2; k <= k_max; ++k) {
    std::optional<SolveReport> report;
    try {
      const QuotientGraph q = build_quotient(g, static_cast<Weight>(k), {.threads = budget.threads});
      report = solve_symmetric_power(q, budget);
    } catch (const CapExceeded& e) {
      std::cerr << "warning: k=" << k << " skipped: " << e.what() << '\n';
    }
    if (!report || !report->optimal) {
      if (report) std::cerr << "warning: k=" << k << " skipped: solve did not reach optimality\n";
      est.skipped.push_back(k);
      continue;
    }
    const double alpha = static_cast<double>(report->alpha);
    const double kd = static_cast<double>(k);
    est.samples.push_back({k, report->alpha, std::log(alpha) / std::log(kd),
                           alpha * factorial / std::pow(kd, static_cast<double>(a - 1))});
  }
  return est;
}

ChunkKey chunk_key(const Graph& g, const Configuration& f) {
  const std::size_t n = g.vertex_count();
  if (f.size() != n) throw InvalidArgument("chunk_key: configuration length does not match the graph");
  const std::uint64_t k = f.total();
  ChunkKey key;
  key.pivot = static_cast<std::size_t>(std::max_element(f.weights().begin(), f.weights().end()) -
                                       f.weights().begin());
  const VertexSet closed = closed_neighborhood(g, key.pivot);
  closed.for_each([&](std::size_t v) { key.neighborhood_weight += f[v]; });
  key.intervals.assign(n, 0);
  if (k > 0) {
    const std::uint64_t scale = 2 * static_cast<std::uint64_t>(n) * n;
    for (std::size_t i = 0; i < n; ++i) key.intervals[i] = scale * f[i] / k;
  }
  return key;
}

Count max_chunk_count(std::uint64_t n, std::uint64_t k) {
  return Count{n} * (k + 1) * (2 * Count{n} * n + 1);
}

namespace {

void require_independent(const Graph& g, Weight k, const std::vector<Configuration>& h) {
  for (const auto& f : h)
    if (f.size() != g.vertex_count() || f.total() != k)
      throw InvalidArgument("configuration " + to_string(f) + " is not a vertex of G[" +
                            std::to_string(k) + "]");
  for (std::size_t a = 0; a < h.size(); ++a)
    for (std::size_t b = a + 1; b < h.size(); ++b)
      if (h[a] == h[b] || adjacent(g, h[a], h[b]))
        throw InvalidArgument("set is not independent: " + to_string(h[a]) + " and " + to_string(h[b]));
}

}  // namespace

ChunkMap chunk_partition(const Graph& g, Weight k, const std::vector<Configuration>& h) {
  require_independent(g, k, h);
  ChunkMap chunks;
  for (const auto& f : h) chunks[chunk_key(g, f)].push_back(f);
  return chunks;
}

bool check_chunk_independence(const Graph& g, Weight k, const ChunkKey& key,
                              const std::vector<Configuration>& chunk) {
  for (const auto& f : chunk) {
    if (f.size() != g.vertex_count() || f.total() != k)
      throw InvalidArgument("chunk member " + to_string(f) + " is not a vertex of G[" +
                            std::to_string(k) + "]");
    if (chunk_key(g, f) != key)
      throw InvalidArgument("chunk member " + to_string(f) + " does not belong to the chunk");
  }
  if (chunk.size() <= 1) return true;

  VertexSet outside = closed_neighborhood(g, key.pivot);
  outside = Bitset::full(g.vertex_count()).subtract(outside);
  const std::vector<std::size_t> kept = outside.to_indices();

  std::vector<Configuration> projected;
  projected.reserve(chunk.size());
  for (const auto& f : chunk) {
    std::vector<Weight> w;
    w.reserve(kept.size());
    for (std::size_t v : kept) w.push_back(f[v]);
    projected.emplace_back(std::move(w));
  }
  for (std::size_t a = 0; a < projected.size(); ++a)
    for (std::size_t b = a + 1; b < projected.size(); ++b)
      if (projected[a] == projected[b]) return false;
  // Distinct projections with nothing left outside N[pivot] are impossible;
  // reaching here with no residual vertices means the chunk had size <= 1.
  if (kept.empty()) return true;

  const Graph residual = g.induced(outside);
  for (std::size_t a = 0; a < projected.size(); ++a)
    for (std::size_t b = a + 1; b < projected.size(); ++b)
      if (adjacent(residual, projected[a], projected[b])) return false;
  return true;
}

}  // namespace symcap
