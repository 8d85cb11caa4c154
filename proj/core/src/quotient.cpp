#include "symcap/quotient.hpp"

#include <algorithm>
#include <thread>

#include "symcap/binomial.hpp"
#include "symcap/error.hpp"
#include "symcap/transport.hpp"
#include "json.hpp"

namespace symcap {

std::size_t QuotientGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adjacency) twice += row.count();
  return twice / 2;
}

Graph QuotientGraph::as_graph() const {
  std::vector<std::pair<Vertex, Vertex>> es;
  for (std::size_t i = 0; i < adjacency.size(); ++i)
    for (std::size_t j = adjacency[i].next(i + 1); j != Bitset::npos; j = adjacency[i].next(j + 1))
      es.emplace_back(i, j);
  return Graph(adjacency.size(), es);
}

QuotientGraph build_quotient(const Graph& g, Weight k, const QuotientOptions& options) {
  const std::size_t n = g.vertex_count();
  const Count count = composition_count(n, k);
  if (count > options.vertex_cap)
    throw CapExceeded("G[" + std::to_string(k) + "] has " + to_string(count) +
                      " vertices, above the cap of " + std::to_string(options.vertex_cap));
  const std::vector<Configuration> configs = enumerate_configurations(n, k, options.vertex_cap);
  const std::size_t size = configs.size();

  QuotientGraph q{g, k, std::vector<Bitset>(size, Bitset(size))};

  // Each worker fills the upper triangle of the rows it owns; the mirror pass
  // afterwards is sequential, so the result is independent of scheduling.
  auto fill_rows = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < size; i += stride)
      for (std::size_t j = i + 1; j < size; ++j)
        if (find_transport(g, configs[i], configs[j])) q.adjacency[i].set(j);
  };
  const unsigned workers = std::max(1U, options.threads);
  if (workers == 1) {
    fill_rows(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(fill_rows, w, workers);
  }
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = q.adjacency[i].next(i + 1); j != Bitset::npos; j = q.adjacency[i].next(j + 1))
      q.adjacency[j].set(i);
  return q;
}

QuotientGraph strong_power_quotient_oracle(const Graph& g, Weight k, std::uint64_t tuple_cap) {
  const std::size_t n = g.vertex_count();
  std::uint64_t tuples = 1;
  for (Weight i = 0; i < k; ++i) {
    if (tuples > tuple_cap / n)
      throw CapExceeded("strong power has more than " + std::to_string(tuple_cap) + " tuples");
    tuples *= n;
  }

  // Closed neighbourhoods as explicit lists; coordinate c of a strong-power
  // neighbour ranges over closed[x_c].
  std::vector<std::vector<Vertex>> closed(n);
  for (Vertex v = 0; v < n; ++v) {
    closed[v].push_back(v);
    for (Vertex u = 0; u < n; ++u)
      if (g.has_edge(v, u)) closed[v].push_back(u);
  }

  auto orbit_of = [&](const std::vector<Vertex>& tuple) {
    std::vector<Weight> w(n, 0);
    for (Vertex x : tuple) ++w[x];
    return rank(Configuration(std::move(w)));
  };

  const std::size_t size = static_cast<std::size_t>(composition_count(n, k));
  QuotientGraph q{g, k, std::vector<Bitset>(size, Bitset(size))};

  std::vector<Vertex> tuple(k, 0);
  std::vector<Vertex> other(k, 0);
  std::vector<std::size_t> pick(k, 0);
  for (std::uint64_t t = 0; t < tuples; ++t) {
    // Decode t as a base-n tuple.
    std::uint64_t rest = t;
    for (Weight c = 0; c < k; ++c) {
      tuple[c] = rest % n;
      rest /= n;
    }
    const std::uint64_t from = orbit_of(tuple);
    // Odometer over the product of closed neighbourhoods.
    std::fill(pick.begin(), pick.end(), 0);
    while (true) {
      for (Weight c = 0; c < k; ++c) other[c] = closed[tuple[c]][pick[c]];
      if (other != tuple) {
        const std::uint64_t to = orbit_of(other);
        if (to != from) {
          q.adjacency[from].set(to);
          q.adjacency[to].set(from);
        }
      }
      Weight c = 0;
      while (c < k && ++pick[c] == closed[tuple[c]].size()) pick[c++] = 0;
      if (c == k) break;
    }
  }
  return q;
}

std::vector<std::size_t> lift_automorphism(const QuotientGraph& q, const Permutation& perm) {
  const std::size_t n = q.base.vertex_count();
  if (perm.size() != n) throw InvalidArgument("lift_automorphism: permutation size mismatch");
  std::vector<std::size_t> out(q.vertex_count());
  std::vector<Weight> moved(n);
  for (std::size_t i = 0; i < q.vertex_count(); ++i) {
    const Configuration f = q.configuration(i);
    for (Vertex v = 0; v < n; ++v) moved[perm[v]] = f[v];
    out[i] = rank(Configuration(moved));
  }
  return out;
}

std::vector<std::vector<std::size_t>> quotient_symmetries(const QuotientGraph& q) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& perm : automorphisms(q.base)) out.push_back(lift_automorphism(q, perm));
  return out;
}

std::string rank_map_json(const QuotientGraph& q) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  j["k"] = q.k;
  j["n"] = q.base.vertex_count();
  nlohmann::ordered_json ranks = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < q.vertex_count(); ++i) ranks[std::to_string(i)] = to_string(q.configuration(i));
  j["ranks"] = std::move(ranks);
  return j.dump(2) + "\n";
}

}  // namespace symcap
