#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

namespace symcap::detail {

// Edmonds-Karp on a dense residual matrix. Networks here have at most a few
// dozen nodes, so the matrix representation beats adjacency lists.
class MaxFlow {
 public:
  explicit MaxFlow(std::size_t nodes) : n_(nodes), cap_(nodes * nodes, 0), flow_(nodes * nodes, 0) {}

  void add_capacity(std::size_t from, std::size_t to, std::int64_t c) { cap_[from * n_ + to] += c; }

  std::int64_t run(std::size_t source, std::size_t sink) {
    std::int64_t total = 0;
    std::vector<std::size_t> parent(n_);
    while (true) {
      std::fill(parent.begin(), parent.end(), kUnvisited);
      parent[source] = source;
      std::queue<std::size_t> q;
      q.push(source);
      while (!q.empty() && parent[sink] == kUnvisited) {
        const std::size_t u = q.front();
        q.pop();
        for (std::size_t v = 0; v < n_; ++v)
          if (parent[v] == kUnvisited && residual(u, v) > 0) {
            parent[v] = u;
            q.push(v);
          }
      }
      if (parent[sink] == kUnvisited) return total;
      std::int64_t push = std::numeric_limits<std::int64_t>::max();
      for (std::size_t v = sink; v != source; v = parent[v]) push = std::min(push, residual(parent[v], v));
      for (std::size_t v = sink; v != source; v = parent[v]) {
        flow_[parent[v] * n_ + v] += push;
        flow_[v * n_ + parent[v]] -= push;
      }
      total += push;
    }
  }

  // Net flow along from -> to (may be negative).
  std::int64_t flow(std::size_t from, std::size_t to) const { return flow_[from * n_ + to]; }

 private:
  static constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::int64_t residual(std::size_t u, std::size_t v) const { return cap_[u * n_ + v] - flow_[u * n_ + v]; }

  std::size_t n_;
  std::vector<std::int64_t> cap_;
  std::vector<std::int64_t> flow_;
};

}  // namespace symcap::detail
