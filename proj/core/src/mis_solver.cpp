#include "symcap/mis_solver.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "symcap/error.hpp"

namespace symcap {

namespace {

using Clock = std::chrono::steady_clock;
using Permutation32 = std::vector<std::uint32_t>;

// Largest group the solver enumerates, counted in permutation entries.
constexpr std::size_t kGroupEntryCap = 20'000'000;

void check_loopless(std::span<const Bitset> adjacency) {
  for (std::size_t v = 0; v < adjacency.size(); ++v)
    if (adjacency[v].size() != adjacency.size() || adjacency[v].test(v))
      throw InvalidArgument("solve_exact: vertex " + std::to_string(v) +
                            " has a self-loop or a malformed adjacency row");
}

// State shared by all workers of one solve. The incumbent size only grows.
struct SharedSearch {
  std::span<const Bitset> adj;
  SolveBudget budget;
  Clock::time_point start;
  std::atomic<std::size_t> best_size{0};
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> aborted{false};
  std::mutex best_mutex;
  std::vector<std::size_t> best_members;

  void offer(const std::vector<std::size_t>& members) {
    if (members.size() <= best_size.load(std::memory_order_relaxed)) return;
    std::lock_guard lock(best_mutex);
    if (members.size() <= best_members.size() && !best_members.empty()) return;
    best_members = members;
    best_size.store(members.size());
  }
};

// Branch and bound in the style of bitset max-clique solvers, run on the
// "is a clique of the complement" side: vertices are renumbered so that
// low-degree vertices come first, each node greedily covers its residual by
// cliques of G in that order, and branching walks the covered vertices from
// the last clique backwards. A vertex whose clique index plus the current
// size cannot beat the incumbent closes the node, since every vertex before
// it has an index no larger.
class Worker {
 public:
  Worker(SharedSearch& shared, std::span<const Bitset> adj, std::span<const std::size_t> original,
         std::span<const Bitset> orbit, std::span<const Permutation32> group)
      : s_(shared), adj_(adj), original_(original), orbit_(orbit), group_(group), n_(adj.size()) {}

  void expand_root() {
    for (auto& b : root_branches()) expand(b.current, std::move(b.residual), b.symmetry);
  }

  // `symmetry` indexes the group elements that fix every vertex of `current`
  // and map `residual` onto itself. It is closed under composition, so the
  // orbit of v is just its images, and removing an orbit keeps the residual
  // invariant.
  void expand(std::vector<std::size_t>& current, Bitset residual, const std::vector<std::uint32_t>& symmetry) {
    if (!tick()) return;
    if (residual.none()) {
      offer(current);
      return;
    }
    const std::size_t best = s_.best_size.load(std::memory_order_relaxed);
    const std::size_t floor = best - std::min(best, current.size());
    std::vector<std::size_t> order;
    std::vector<std::size_t> bound;
    cover(residual, floor, order, bound);
    std::vector<std::uint32_t> fixing;
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current.size() + bound[i] <= s_.best_size.load(std::memory_order_relaxed)) return;
      const std::size_t v = order[i];
      if (!residual.test(v)) continue;
      Bitset include = residual;
      include.subtract(adj_[v]);
      include.reset(v);
      fixing.clear();
      for (std::uint32_t g : symmetry)
        if (group_[g][v] == v) fixing.push_back(g);
      current.push_back(v);
      expand(current, std::move(include), fixing);
      current.pop_back();
      residual.reset(v);
      for (std::uint32_t g : symmetry) residual.reset(group_[g][v]);
      if (s_.aborted.load(std::memory_order_relaxed)) return;
    }
  }

  struct Branch {
    std::vector<std::size_t> current;
    Bitset residual;
    std::vector<std::uint32_t> symmetry;
  };

  // Root-level branches as independent subproblems, in the order the
  // sequential search visits them. After a branch on v, the orbit of v
  // leaves the residual: any set through an image of v maps back to a set
  // through v. The residual stays a union of orbits, so this stays valid.
  std::vector<Branch> root_branches() {
    Bitset residual = Bitset::full(n_);
    std::vector<std::size_t> order;
    std::vector<std::size_t> bound;
    cover(residual, 0, order, bound);
    std::vector<Branch> out;
    for (std::size_t i = order.size(); i-- > 0;) {
      const std::size_t v = order[i];
      if (!residual.test(v)) continue;
      Bitset include = residual;
      include.subtract(adj_[v]);
      include.reset(v);
      std::vector<std::uint32_t> fixing;
      for (std::uint32_t g = 0; g < group_.size(); ++g)
        if (group_[g][v] == v) fixing.push_back(g);
      out.push_back({{v}, std::move(include), std::move(fixing)});
      residual.reset(v);
      if (!group_.empty()) {
        for (const auto& perm : group_) residual.reset(perm[v]);
      } else if (!orbit_.empty()) {
        residual.subtract(orbit_[v]);
      }
    }
    return out;
  }

 private:
  // Greedy clique cover of `residual` in vertex-id order. Vertices of the
  // first `floor` cliques are dropped (they can never be branched on); the
  // rest are appended to `order` with bound = their 1-based clique index.
  void cover(const Bitset& residual, std::size_t floor, std::vector<std::size_t>& order,
             std::vector<std::size_t>& bound) {
    uncovered_ = residual;
    std::size_t clique = 0;
    while (uncovered_.any()) {
      ++clique;
      candidates_ = uncovered_;
      for (std::size_t v = candidates_.first(); v != Bitset::npos; v = candidates_.next(v + 1)) {
        candidates_ &= adj_[v];
        uncovered_.reset(v);
        if (clique > floor) {
          order.push_back(v);
          bound.push_back(clique);
        }
      }
    }
  }

  void offer(const std::vector<std::size_t>& current) {
    std::vector<std::size_t> members;
    members.reserve(current.size());
    for (std::size_t v : current) members.push_back(original_[v]);
    s_.offer(members);
  }

  bool tick() {
    if (s_.aborted.load(std::memory_order_relaxed)) return false;
    const std::uint64_t count = s_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (count > s_.budget.max_nodes) {
      s_.aborted.store(true);
      return false;
    }
    if ((count & 1023U) == 0) {
      const std::chrono::duration<double> spent = Clock::now() - s_.start;
      if (spent.count() > s_.budget.max_seconds) {
        s_.aborted.store(true);
        return false;
      }
    }
    return true;
  }

  SharedSearch& s_;
  std::span<const Bitset> adj_;
  std::span<const std::size_t> original_;
  std::span<const Bitset> orbit_;
  std::span<const Permutation32> group_;
  std::size_t n_;
  Bitset uncovered_;
  Bitset candidates_;
};

// Renumbering by non-decreasing degree (lowest original id on ties).
struct Renumbered {
  std::vector<Bitset> adj;
  std::vector<std::size_t> original;
};

Renumbered renumber(std::span<const Bitset> adjacency);

void check_symmetries(std::span<const Bitset> adjacency, std::span<const std::vector<std::size_t>> symmetries) {
  const std::size_t n = adjacency.size();
  for (const auto& perm : symmetries) {
    bool ok = perm.size() == n;
    Bitset hit(n);
    for (std::size_t v = 0; ok && v < n; ++v) {
      ok = perm[v] < n && !hit.test(perm[v]);
      if (ok) hit.set(perm[v]);
    }
    for (std::size_t v = 0; ok && v < n; ++v)
      adjacency[v].for_each([&](std::size_t u) { ok = ok && adjacency[perm[v]].test(perm[u]); });
    if (!ok) throw InvalidArgument("solve_exact: symmetry hint is not an automorphism");
  }
}

// orbit[v] = orbit of v under the group generated by `symmetries`, in the
// renumbered ids. Empty when there are no symmetries.
std::vector<Bitset> orbits(std::span<const std::vector<std::size_t>> symmetries, const Renumbered& graph) {
  if (symmetries.empty()) return {};
  const std::size_t n = graph.original.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& perm : symmetries)
    for (std::size_t v = 0; v < n; ++v) parent[find(v)] = find(perm[v]);
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[graph.original[i]] = i;
  std::vector<Bitset> by_root(n, Bitset(n));
  for (std::size_t v = 0; v < n; ++v) by_root[find(v)].set(position[v]);
  std::vector<Bitset> out(n);
  for (std::size_t v = 0; v < n; ++v) out[position[v]] = by_root[find(v)];
  return out;
}

// Every non-identity element of the group generated by `symmetries`, in the
// renumbered ids. Empty when the group is trivial or too large to list, in
// which case only the root uses the generator orbits.
std::vector<Permutation32> group_closure(std::span<const std::vector<std::size_t>> symmetries,
                                         const Renumbered& graph) {
  const std::size_t n = graph.original.size();
  if (symmetries.empty() || n == 0) return {};
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[graph.original[i]] = i;
  std::vector<Permutation32> generators;
  for (const auto& perm : symmetries) {
    Permutation32 p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<std::uint32_t>(position[perm[graph.original[i]]]);
    generators.push_back(std::move(p));
  }
  Permutation32 identity(n);
  std::iota(identity.begin(), identity.end(), 0U);
  std::set<Permutation32> seen{identity};
  std::vector<Permutation32> queue{identity};
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (const auto& gen : generators) {
      Permutation32 next(n);
      for (std::size_t i = 0; i < n; ++i) next[i] = gen[queue[head][i]];
      if (seen.count(next)) continue;
      if ((seen.size() + 1) * n > kGroupEntryCap) return {};
      seen.insert(next);
      queue.push_back(std::move(next));
    }
  queue.erase(queue.begin());
  return queue;
}

Renumbered renumber(std::span<const Bitset> adjacency) {
  const std::size_t n = adjacency.size();
  Renumbered r;
  r.original.resize(n);
  std::iota(r.original.begin(), r.original.end(), 0);
  std::vector<std::size_t> degree(n);
  for (std::size_t v = 0; v < n; ++v) degree[v] = adjacency[v].count();
  std::stable_sort(r.original.begin(), r.original.end(),
                   [&](std::size_t a, std::size_t b) { return degree[a] < degree[b]; });
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[r.original[i]] = i;
  r.adj.assign(n, Bitset(n));
  for (std::size_t v = 0; v < n; ++v)
    adjacency[v].for_each([&](std::size_t u) { r.adj[position[v]].set(position[u]); });
  return r;
}

}  // namespace

SolveReport solve_exact(std::span<const Bitset> adjacency, const SolveBudget& budget,
                        const IndependentSetCertificate& initial,
                        std::span<const std::vector<std::size_t>> symmetries) {
  check_loopless(adjacency);
  check_symmetries(adjacency, symmetries);
  if (budget.max_nodes == 0 || budget.max_seconds <= 0)
    throw InvalidArgument("solve_exact: budget must be positive");
  if (!initial.members.empty() && !verify_certificate(adjacency, initial))
    throw InvalidArgument("solve_exact: initial certificate is not an independent set");

  SharedSearch shared;
  shared.adj = adjacency;
  shared.budget = budget;
  shared.start = Clock::now();
  shared.best_members = initial.members;
  shared.best_size = initial.members.size();

  if (!adjacency.empty()) {
    const Renumbered graph = renumber(adjacency);
    const std::vector<Permutation32> group = group_closure(symmetries, graph);
    const std::vector<Bitset> orbit = group.empty() ? orbits(symmetries, graph) : std::vector<Bitset>{};
    if (budget.threads <= 1) {
      Worker(shared, graph.adj, graph.original, orbit, group).expand_root();
    } else {
      auto branches = Worker(shared, graph.adj, graph.original, orbit, group).root_branches();
      std::atomic<std::size_t> next{0};
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < budget.threads; ++t)
        pool.emplace_back([&] {
          Worker w(shared, graph.adj, graph.original, orbit, group);
          for (std::size_t i = next++; i < branches.size(); i = next++) {
            auto current = branches[i].current;
            w.expand(current, branches[i].residual, branches[i].symmetry);
          }
        });
    }
  }

  SolveReport report;
  report.optimal = !shared.aborted.load();
  report.nodes_explored = std::min(shared.nodes.load(), budget.max_nodes);
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - shared.start);
  report.certificate.members = shared.best_members;
  std::sort(report.certificate.members.begin(), report.certificate.members.end());
  report.alpha = report.certificate.size();
  return report;
}

bool verify_certificate(std::span<const Bitset> adjacency, const IndependentSetCertificate& c) {
  const std::size_t n = adjacency.size();
  Bitset seen(n);
  for (std::size_t v : c.members) {
    if (v >= n || seen.test(v)) return false;
    seen.set(v);
  }
  for (std::size_t v : c.members)
    if (adjacency[v].intersects(seen)) return false;
  return true;
}

namespace {

// Incremental independent-set state for the local search. tight_[u] counts
// the members adjacent to u.
class LocalSearch {
 public:
  explicit LocalSearch(std::span<const Bitset> adj)
      : adj_(adj), n_(adj.size()), in_(n_), tight_(n_, 0) {}

  void reset() {
    in_.clear();
    std::fill(tight_.begin(), tight_.end(), 0);
    size_ = 0;
  }

  void insert(std::size_t v) {
    in_.set(v);
    ++size_;
    adj_[v].for_each([&](std::size_t u) { ++tight_[u]; });
  }

  void erase(std::size_t v) {
    in_.reset(v);
    --size_;
    adj_[v].for_each([&](std::size_t u) { --tight_[u]; });
  }

  /// Inserts v and evicts the members adjacent to it.
  void force(std::size_t v) {
    std::vector<std::size_t> evict;
    (adj_[v] & in_).for_each([&](std::size_t u) { evict.push_back(u); });
    for (std::size_t u : evict) erase(u);
    insert(v);
  }

  /// Adds free vertices in the given order until the set is maximal.
  void fill(const std::vector<std::size_t>& order) {
    for (std::size_t v : order)
      if (!in_.test(v) && tight_[v] == 0) insert(v);
  }

  /// Applies (1,2)-swaps until none remains; free vertices are re-added in
  /// `order` after each swap.
  void improve(const std::vector<std::size_t>& order) {
    fill(order);
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t x = in_.first(); x != Bitset::npos && !changed; x = in_.next(x + 1)) {
        // Non-members whose only conflicting member is x.
        Bitset one_tight(n_);
        adj_[x].for_each([&](std::size_t u) {
          if (tight_[u] == 1) one_tight.set(u);
        });
        for (std::size_t u = one_tight.first(); u != Bitset::npos; u = one_tight.next(u + 1)) {
          Bitset partners = one_tight;
          partners.subtract(adj_[u]);
          const std::size_t w = partners.next(u + 1);
          if (w == Bitset::npos) continue;
          erase(x);
          insert(u);
          insert(w);
          fill(order);
          changed = true;
          break;
        }
      }
    }
  }

  std::size_t size() const { return size_; }
  bool contains(std::size_t v) const { return in_.test(v); }

  IndependentSetCertificate certificate() const {
    IndependentSetCertificate c;
    for (std::size_t v : in_.to_indices()) c.members.push_back(v);
    return c;
  }

  void load(const IndependentSetCertificate& c) {
    reset();
    for (std::size_t v : c.members) insert(v);
  }

 private:
  std::span<const Bitset> adj_;
  std::size_t n_;
  Bitset in_;
  std::vector<std::uint32_t> tight_;
  std::size_t size_ = 0;
};

std::vector<std::size_t> shuffled_order(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

}  // namespace

IndependentSetCertificate random_maximal_independent_set(std::span<const Bitset> adjacency,
                                                         std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  LocalSearch ls(adjacency);
  ls.fill(shuffled_order(adjacency.size(), rng));
  return ls.certificate();
}

IndependentSetCertificate heuristic_search(std::span<const Bitset> adjacency, std::uint64_t seed,
                                           std::uint64_t iterations,
                                           const IndependentSetCertificate& initial) {
  if (iterations == 0) throw InvalidArgument("heuristic_search: iterations must be >= 1");
  if (!initial.members.empty() && !verify_certificate(adjacency, initial))
    throw InvalidArgument("heuristic_search: initial certificate is not an independent set");
  const std::size_t n = adjacency.size();
  if (n == 0) return {};

  std::mt19937_64 rng(seed);
  LocalSearch ls(adjacency);
  ls.load(initial);
  ls.improve(shuffled_order(n, rng));
  IndependentSetCertificate best = ls.certificate();

  // Iterated local search: perturb the incumbent by forcing in a random
  // non-member, re-optimize, accept when not worse. Every fourth round
  // restarts from a fresh random greedy set to escape plateaus.
  for (std::uint64_t it = 1; it < iterations; ++it) {
    const auto order = shuffled_order(n, rng);
    if (it % 4 == 0) {
      ls.reset();
    } else {
      ls.load(best);
      for (std::size_t v : order)
        if (!ls.contains(v)) {
          ls.force(v);
          break;
        }
    }
    ls.improve(order);
    if (ls.size() >= best.size()) best = ls.certificate();
  }
  return best;
}

}  // namespace symcap
