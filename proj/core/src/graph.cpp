#include "symcap/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "symcap/error.hpp"
#include "symcap/mis_solver.hpp"

namespace symcap {

Graph::Graph(std::size_t n) {
  if (n == 0) throw InvalidArgument("graph must have at least one vertex");
  adjacency_.assign(n, Bitset(n));
}

Graph::Graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) : Graph(n) {
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n)
      throw InvalidArgument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                            ") out of range for n = " + std::to_string(n));
    if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
    adjacency_[u].set(v);
    adjacency_[v].set(u);
  }
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adjacency_) twice += row.count();
  return twice / 2;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < vertex_count(); ++u)
    for (Vertex v = adjacency_[u].next(u + 1); v != Bitset::npos; v = adjacency_[u].next(v + 1))
      out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(const VertexSet& keep) const {
  const std::vector<std::size_t> kept = keep.to_indices();
  if (kept.empty()) throw InvalidArgument("induced subgraph must keep at least one vertex");
  std::vector<std::size_t> index(vertex_count(), Bitset::npos);
  for (std::size_t i = 0; i < kept.size(); ++i) index[kept[i]] = i;
  std::vector<std::pair<Vertex, Vertex>> es;
  for (const auto& [u, v] : edges())
    if (index[u] != Bitset::npos && index[v] != Bitset::npos) es.emplace_back(index[u], index[v]);
  return Graph(kept.size(), es);
}

Family parse_family(std::string_view name) {
  if (name == "cycle") return Family::kCycle;
  if (name == "path") return Family::kPath;
  if (name == "complete") return Family::kComplete;
  if (name == "empty") return Family::kEmpty;
  if (name == "petersen") return Family::kPetersen;
  throw InvalidArgument("unknown graph family '" + std::string(name) + "'");
}

Graph construct_named(Family family, std::size_t size) {
  std::vector<std::pair<Vertex, Vertex>> es;
  switch (family) {
    case Family::kCycle:
      if (size < 3) throw InvalidArgument("cycle requires size >= 3");
      for (Vertex v = 0; v < size; ++v) es.emplace_back(v, (v + 1) % size);
      return Graph(size, es);
    case Family::kPath:
      if (size < 1) throw InvalidArgument("path requires size >= 1");
      for (Vertex v = 0; v + 1 < size; ++v) es.emplace_back(v, v + 1);
      return Graph(size, es);
    case Family::kComplete:
      if (size < 1) throw InvalidArgument("complete requires size >= 1");
      for (Vertex u = 0; u < size; ++u)
        for (Vertex v = u + 1; v < size; ++v) es.emplace_back(u, v);
      return Graph(size, es);
    case Family::kEmpty:
      if (size < 1) throw InvalidArgument("empty requires size >= 1");
      return Graph(size);
    case Family::kPetersen:
      // Outer 5-cycle, inner pentagram, spokes.
      for (Vertex i = 0; i < 5; ++i) {
        es.emplace_back(i, (i + 1) % 5);
        es.emplace_back(5 + i, 5 + (i + 2) % 5);
        es.emplace_back(i, 5 + i);
      }
      return Graph(10, es);
  }
  throw InvalidArgument("unknown graph family");
}

Graph construct_named(std::string_view family, std::size_t size) {
  return construct_named(parse_family(family), size);
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t to_index(std::string_view tok, std::size_t line_no) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError("line " + std::to_string(line_no) + ": expected a nonnegative integer, got '" +
                     std::string(tok) + "'");
  return value;
}

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

}  // namespace

Graph parse_graph(std::string_view text) {
  std::vector<Line> lines;
  std::size_t pos = 0;
  std::size_t number = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    ++number;
    auto toks = split_ws(text.substr(pos, end - pos));
    if (!toks.empty()) lines.push_back({number, std::move(toks)});
    pos = end + 1;
  }

  bool dimacs = false;
  for (const auto& l : lines) {
    if (l.tokens[0] == "c") continue;
    dimacs = l.tokens[0] == "p";
    break;
  }

  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<std::pair<Vertex, Vertex>> es;
  auto add_edge = [&](std::size_t u, std::size_t v, std::size_t line_no) {
    if (u >= n || v >= n)
      throw ParseError("line " + std::to_string(line_no) + ": vertex index out of range");
    if (u == v) throw ParseError("line " + std::to_string(line_no) + ": self-loop");
    es.emplace_back(u, v);
  };

  if (dimacs) {
    bool header = false;
    for (const auto& l : lines) {
      const auto& t = l.tokens;
      if (t[0] == "c") continue;
      if (t[0] == "p") {
        if (header || t.size() != 4 || (t[1] != "edge" && t[1] != "col"))
          throw ParseError("line " + std::to_string(l.number) + ": malformed problem line");
        n = to_index(t[2], l.number);
        m = to_index(t[3], l.number);
        header = true;
      } else if (t[0] == "e") {
        if (!header || t.size() != 3)
          throw ParseError("line " + std::to_string(l.number) + ": malformed edge line");
        const std::size_t u = to_index(t[1], l.number);
        const std::size_t v = to_index(t[2], l.number);
        if (u == 0 || v == 0)
          throw ParseError("line " + std::to_string(l.number) + ": DIMACS vertices are 1-indexed");
        add_edge(u - 1, v - 1, l.number);
      } else {
        throw ParseError("line " + std::to_string(l.number) + ": unknown line type '" +
                         std::string(t[0]) + "'");
      }
    }
  } else {
    if (lines.empty()) throw ParseError("empty graph description");
    const auto& head = lines.front();
    if (head.tokens.size() != 2) throw ParseError("line 1: expected 'n m'");
    n = to_index(head.tokens[0], head.number);
    m = to_index(head.tokens[1], head.number);
    for (std::size_t i = 1; i < lines.size(); ++i) {
      const auto& l = lines[i];
      if (l.tokens.size() != 2)
        throw ParseError("line " + std::to_string(l.number) + ": expected 'u v'");
      add_edge(to_index(l.tokens[0], l.number), to_index(l.tokens[1], l.number), l.number);
    }
  }
  if (n == 0) throw ParseError("graph must have at least one vertex");
  if (es.size() != m)
    throw ParseError("header declares " + std::to_string(m) + " edges but " +
                     std::to_string(es.size()) + " were listed");
  return Graph(n, es);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  const auto es = g.edges();
  out << g.vertex_count() << ' ' << es.size() << '\n';
  for (const auto& [u, v] : es) out << u << ' ' << v << '\n';
  return out.str();
}

Graph complement(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::pair<Vertex, Vertex>> es;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) es.emplace_back(u, v);
  return Graph(n, es);
}

bool is_independent(const Graph& g, const VertexSet& s) {
  bool ok = true;
  s.for_each([&](std::size_t v) { ok = ok && !g.neighbors(v).intersects(s); });
  return ok;
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  if (v >= g.vertex_count()) throw InvalidArgument("vertex out of range");
  VertexSet s = g.neighbors(v);
  s.set(v);
  return s;
}

std::size_t alpha_exact(const Graph& g) {
  const SolveReport report = solve_exact(g.adjacency(), SolveBudget{});
  if (!report.optimal) throw BudgetExhausted("alpha_exact: solver budget exhausted");
  return report.alpha;
}

namespace {

// DSATUR branch and bound. Colours are tried in increasing order; a new colour
// is opened only while it can still beat the incumbent.
class ExactColouring {
 public:
  explicit ExactColouring(const Graph& g) : g_(g), colour_(g.vertex_count(), kNone) {}

  std::size_t run() {
    const std::size_t n = g_.vertex_count();
    best_ = n;
    lower_ = greedy_clique_size();
    search(0, 0);
    return best_;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  static constexpr std::uint64_t kNodeLimit = 200'000'000;

  std::size_t greedy_clique_size() const {
    std::size_t best = 1;
    for (Vertex s = 0; s < g_.vertex_count(); ++s) {
      Bitset cand = g_.neighbors(s);
      std::size_t size = 1;
      while (cand.any()) {
        // Extend by the candidate with most neighbours among the remaining candidates.
        Vertex pick = cand.first();
        std::size_t pick_deg = 0;
        cand.for_each([&](std::size_t u) {
          const std::size_t d = g_.neighbors(u).count_and(cand);
          if (d > pick_deg) {
            pick_deg = d;
            pick = u;
          }
        });
        ++size;
        cand &= g_.neighbors(pick);
      }
      best = std::max(best, size);
    }
    return best;
  }

  bool done() const { return best_ == lower_; }

  void search(std::size_t coloured, std::size_t used) {
    if (++nodes_ > kNodeLimit) throw BudgetExhausted("chromatic number: node limit reached");
    const std::size_t n = g_.vertex_count();
    if (coloured == n) {
      best_ = std::min(best_, used);
      return;
    }
    // Pick the uncoloured vertex with maximum saturation, then degree, then lowest id.
    Vertex pick = kNone;
    std::size_t pick_sat = 0;
    std::size_t pick_deg = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (colour_[v] != kNone) continue;
      Bitset seen(n);
      g_.neighbors(v).for_each([&](std::size_t u) {
        if (colour_[u] != kNone) seen.set(colour_[u]);
      });
      const std::size_t sat = seen.count();
      const std::size_t deg = g_.degree(v);
      if (pick == kNone || sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
        pick = v;
        pick_sat = sat;
        pick_deg = deg;
      }
    }
    for (std::size_t c = 0; c <= used && c + 1 < best_; ++c) {
      bool clash = false;
      g_.neighbors(pick).for_each([&](std::size_t u) { clash = clash || colour_[u] == c; });
      if (clash) continue;
      colour_[pick] = c;
      search(coloured + 1, std::max(used, c + 1));
      colour_[pick] = kNone;
      if (done()) return;
    }
  }

  const Graph& g_;
  std::vector<std::size_t> colour_;
  std::size_t best_ = 0;
  std::size_t lower_ = 1;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::size_t chromatic_number(const Graph& g) { return ExactColouring(g).run(); }

std::vector<Permutation> automorphisms(const Graph& g, std::size_t cap) {
  const std::size_t n = g.vertex_count();
  std::vector<Permutation> out;
  Permutation image(n, Bitset::npos);
  Bitset used(n);
  // Assign images in vertex order, checking every edge and non-edge to the
  // vertices already placed.
  auto place = [&](auto&& self, Vertex v) -> void {
    if (v == n) {
      if (out.size() == cap) throw CapExceeded("more than " + std::to_string(cap) + " automorphisms");
      out.push_back(image);
      return;
    }
    for (Vertex w = 0; w < n; ++w) {
      if (used.test(w) || g.degree(w) != g.degree(v)) continue;
      bool ok = true;
      for (Vertex u = 0; u < v && ok; ++u) ok = g.has_edge(u, v) == g.has_edge(image[u], w);
      if (!ok) continue;
      image[v] = w;
      used.set(w);
      self(self, v + 1);
      used.reset(w);
    }
  };
  place(place, 0);
  return out;
}

std::size_t clique_cover_number(const Graph& g) { return chromatic_number(complement(g)); }

}  // namespace symcap
