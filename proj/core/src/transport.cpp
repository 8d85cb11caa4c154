#include "symcap/transport.hpp"

#include "max_flow.hpp"
#include "symcap/error.hpp"

namespace symcap {

TransportPlan TransportPlan::identity(const Configuration& f) {
  TransportPlan plan;
  plan.moves.assign(f.size(), std::vector<Weight>(f.size(), 0));
  for (std::size_t v = 0; v < f.size(); ++v) plan.moves[v][v] = f[v];
  return plan;
}

namespace {

void check_compatible(const Graph& g, const Configuration& f, const Configuration& t) {
  if (f.size() != g.vertex_count() || t.size() != g.vertex_count())
    throw InvalidArgument("configuration length does not match the graph");
  if (f.total() != t.total()) throw InvalidArgument("configurations have different total weight");
}

}  // namespace

std::optional<TransportPlan> find_transport(const Graph& g, const Configuration& from,
                                            const Configuration& to) {
  check_compatible(g, from, to);
  if (from == to) return TransportPlan::identity(from);

  // Nodes: 0..n-1 sources, n..2n-1 targets, 2n = s, 2n+1 = t.
  const std::size_t n = g.vertex_count();
  const std::size_t s = 2 * n;
  const std::size_t t = 2 * n + 1;
  const std::int64_t k = from.total();
  detail::MaxFlow net(2 * n + 2);
  for (Vertex u = 0; u < n; ++u) {
    if (from[u] > 0) net.add_capacity(s, u, from[u]);
    if (to[u] > 0) net.add_capacity(n + u, t, to[u]);
    net.add_capacity(u, n + u, k);
    g.neighbors(u).for_each([&](std::size_t v) { net.add_capacity(u, n + v, k); });
  }
  if (net.run(s, t) != k) return std::nullopt;

  TransportPlan plan;
  plan.moves.assign(n, std::vector<Weight>(n, 0));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u == v || g.has_edge(u, v)) {
        const std::int64_t f = net.flow(u, n + v);
        if (f > 0) plan.moves[u][v] = static_cast<Weight>(f);
      }
  return plan;
}

bool adjacent(const Graph& g, const Configuration& f, const Configuration& t) {
  check_compatible(g, f, t);
  if (f == t) return false;
  return find_transport(g, f, t).has_value();
}

}  // namespace symcap
