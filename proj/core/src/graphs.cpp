#include "homtopo/graphs.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>

#include "homtopo/errors.hpp"

namespace homtopo {

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each([&](int v) { out.push_back(v); });
  return out;
}

Graph::Graph(int order) : order_(order) {
  if (order < 0 || order > kMaxVertices) {
    throw DomainError("graph order must lie in [0, 64], got " + std::to_string(order));
  }
  adjacency_.assign(static_cast<std::size_t>(order), 0);
}

Graph Graph::from_edges(int order, const std::vector<std::pair<int, int>>& edges) {
  Graph g(order);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= order_) {
    throw DomainError("vertex " + std::to_string(v) + " out of range for graph of order " +
                      std::to_string(order_));
  }
}

VertexSet Graph::neighbors(int v) const {
  check_vertex(v);
  return VertexSet{adjacency_[static_cast<std::size_t>(v)]};
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (adjacency_[static_cast<std::size_t>(u)] >> v) & 1U;
}

bool Graph::has_loops() const {
  for (int v = 0; v < order_; ++v) {
    if (has_loop(v)) return true;
  }
  return false;
}

int Graph::degree(int v) const { return neighbors(v).without(v).size(); }

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < order_; ++v) d = std::max(d, degree(v));
  return d;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  std::size_t loops = 0;
  for (int v = 0; v < order_; ++v) {
    twice += static_cast<std::size_t>(neighbors(v).size());
    if (has_loop(v)) ++loops;
  }
  return (twice - loops) / 2 + loops;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < order_; ++u) {
    neighbors(u).for_each([&](int v) {
      if (u <= v) out.emplace_back(u, v);
    });
  }
  return out;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adjacency_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
  adjacency_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adjacency_[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << v);
  adjacency_[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << u);
}

// --- families -------------------------------------------------------------

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw DomainError(message);
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace

Graph complete_graph(int n) {
  require(n >= 1 && n <= kMaxVertices, "K_n requires 1 <= n <= 64");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph looped_complete_graph(int n) { return loop_completion(complete_graph(n)); }

Graph cycle_graph(int m) {
  require(m >= 3 && m <= kMaxVertices, "C_m requires 3 <= m <= 64");
  Graph g(m);
  for (int v = 0; v < m; ++v) g.add_edge(v, (v + 1) % m);
  return g;
}

Graph path_graph(int n) {
  require(n >= 1 && n <= kMaxVertices, "L_n requires 1 <= n <= 64");
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph q_graph() {
  Graph g(2);
  g.add_edge(0, 1);
  g.add_edge(0, 0);
  return g;
}

Graph kneser_graph(int k, int n) {
  require(n >= 2, "Kneser graph requires n >= 2");
  require(k >= 1 && 2 * k <= n, "Kneser graph requires 1 <= k <= n/2");
  require(binomial(n, k) <= static_cast<std::uint64_t>(kMaxVertices),
          "Kneser graph would exceed 64 vertices");
  std::vector<std::uint64_t> subsets;
  // lexicographic order of sorted k-subsets
  std::vector<int> combo(static_cast<std::size_t>(k));
  std::iota(combo.begin(), combo.end(), 0);
  while (true) {
    std::uint64_t mask = 0;
    for (int x : combo) mask |= std::uint64_t{1} << x;
    subsets.push_back(mask);
    int i = k - 1;
    while (i >= 0 && combo[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++combo[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
  }
  Graph g(static_cast<int>(subsets.size()));
  for (std::size_t a = 0; a < subsets.size(); ++a)
    for (std::size_t b = a + 1; b < subsets.size(); ++b)
      if ((subsets[a] & subsets[b]) == 0) g.add_edge(static_cast<int>(a), static_cast<int>(b));
  return g;
}

Graph petersen_graph() { return kneser_graph(2, 5); }

Graph star_graph(int leaves) {
  require(leaves >= 1 && leaves < kMaxVertices, "star requires 1 <= leaves <= 63");
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph empty_graph(int n) { return Graph(n); }

namespace {

int parse_int(std::string_view text, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw DomainError("cannot parse graph family '" + std::string(whole) + "'");
  }
  return value;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

Graph make_family(std::string_view name) {
  if (name.empty()) throw DomainError("empty graph family name");
  const std::string low = lower(name);
  if (low == "q") return q_graph();
  if (low == "petersen") return petersen_graph();
  if (low.rfind("kneser:", 0) == 0) {
    std::string_view rest = name.substr(7);
    auto comma = rest.find(',');
    if (comma == std::string_view::npos) throw DomainError("Kneser family needs 'Kneser:k,n'");
    return kneser_graph(parse_int(rest.substr(0, comma), name), parse_int(rest.substr(comma + 1), name));
  }
  if (low.rfind("star:", 0) == 0) return star_graph(parse_int(name.substr(5), name));
  const char head = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
  std::string_view tail = name.substr(1);
  if (head == 'K') {
    if (!tail.empty() && (tail.back() == 'o' || tail.back() == 'O')) {
      return looped_complete_graph(parse_int(tail.substr(0, tail.size() - 1), name));
    }
    return complete_graph(parse_int(tail, name));
  }
  if (head == 'C') return cycle_graph(parse_int(tail, name));
  if (head == 'L') return path_graph(parse_int(tail, name));
  if (head == 'E') return empty_graph(parse_int(tail, name));
  throw DomainError("unknown graph family '" + std::string(name) + "'");
}

// --- derived graphs -------------------------------------------------------

Graph complement(const Graph& g, bool looped) {
  Graph out(g.order());
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u; v < g.order(); ++v) {
      if (u == v && !looped) continue;
      if (!g.adjacent(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

VertexSet common_neighbors(const Graph& g, VertexSet a) {
  VertexSet out = g.vertices();
  a.for_each([&](int v) { out = out & g.neighbors(v); });
  return out;
}

Graph direct_product(const Graph& g, const Graph& h) {
  const int n = g.order() * h.order();
  require(n <= kMaxVertices, "direct product would exceed 64 vertices");
  Graph out(n);
  for (auto [x, xx] : g.edges()) {
    for (auto [y, yy] : h.edges()) {
      out.add_edge(x * h.order() + y, xx * h.order() + yy);
      out.add_edge(x * h.order() + yy, xx * h.order() + y);
    }
  }
  return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  require(g.order() + h.order() <= kMaxVertices, "disjoint union would exceed 64 vertices");
  Graph out(g.order() + h.order());
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (auto [u, v] : h.edges()) out.add_edge(u + g.order(), v + g.order());
  return out;
}

Graph loop_completion(const Graph& g) {
  Graph out = g;
  for (int v = 0; v < g.order(); ++v) out.add_edge(v, v);
  return out;
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
  require(s.is_subset_of(g.vertices()), "induced_subgraph: set is not a subset of V(g)");
  const std::vector<int> keep = s.to_vector();
  Graph out(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i; j < keep.size(); ++j)
      if (g.adjacent(keep[i], keep[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
  return out;
}

Graph remove_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw DomainError("remove_vertex: vertex out of range");
  return induced_subgraph(g, g.vertices().without(v));
}

bool is_homomorphism(const Graph& g, const Graph& h, const GraphMap& f) {
  if (static_cast<int>(f.size()) != g.order()) return false;
  for (int x : f)
    if (x < 0 || x >= h.order()) return false;
  for (auto [u, v] : g.edges()) {
    if (!h.adjacent(f[static_cast<std::size_t>(u)], f[static_cast<std::size_t>(v)])) return false;
  }
  return true;
}

bool is_automorphism(const Graph& g, const GraphMap& f) {
  if (static_cast<int>(f.size()) != g.order()) return false;
  std::vector<bool> hit(f.size(), false);
  for (int x : f) {
    if (x < 0 || x >= g.order() || hit[static_cast<std::size_t>(x)]) return false;
    hit[static_cast<std::size_t>(x)] = true;
  }
  // a bijective homomorphism of a finite graph onto itself preserves edge count,
  // hence non-edges too
  return is_homomorphism(g, g, f);
}

// --- homomorphism enumeration ----------------------------------------------

namespace {

/// Vertices sorted by decreasing degree, ties by index.
std::vector<int> degree_order(const Graph& g) {
  std::vector<int> order(static_cast<std::size_t>(g.order()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  return order;
}

}  // namespace

std::vector<GraphMap> enumerate_homomorphisms(const Graph& g, const Graph& h, std::size_t budget) {
  const int n = g.order();
  std::vector<GraphMap> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  const std::vector<int> order = degree_order(g);
  std::vector<int> position(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) position[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;

  VertexSet looped_targets;
  for (int v = 0; v < h.order(); ++v)
    if (h.has_loop(v)) looped_targets = looped_targets.with(v);

  // domains[depth * n + w]: allowed images of w after the first `depth` assignments
  std::vector<VertexSet> domains(static_cast<std::size_t>((n + 1) * n));
  for (int w = 0; w < n; ++w) {
    domains[static_cast<std::size_t>(w)] = g.has_loop(w) ? looped_targets : h.vertices();
  }
  GraphMap current(static_cast<std::size_t>(n), -1);
  std::size_t tried = 0;

  std::function<void(int)> search = [&](int depth) {
    if (depth == n) {
      out.push_back(current);
      return;
    }
    const int w = order[static_cast<std::size_t>(depth)];
    const VertexSet* dom = &domains[static_cast<std::size_t>(depth * n)];
    VertexSet* next = &domains[static_cast<std::size_t>((depth + 1) * n)];
    const VertexSet later_neighbors = [&] {
      VertexSet s;
      g.neighbors(w).for_each([&](int u) {
        if (position[static_cast<std::size_t>(u)] > depth) s = s.with(u);
      });
      return s;
    }();
    dom[w].for_each([&](int c) {
      if (++tried > budget) {
        throw ResourceError("homomorphism enumeration exceeded budget of " + std::to_string(budget) +
                                " candidates",
                            out.size());
      }
      std::copy(dom, dom + n, next);
      bool alive = true;
      later_neighbors.for_each([&](int u) {
        next[u] = next[u] & h.neighbors(c);
        if (next[u].empty()) alive = false;
      });
      if (!alive) return;
      current[static_cast<std::size_t>(w)] = c;
      search(depth + 1);
    });
    current[static_cast<std::size_t>(w)] = -1;
  };
  search(0);
  std::sort(out.begin(), out.end());
  return out;
}

// --- colorings and independent sets ----------------------------------------

namespace {

bool colorable(const Graph& g, int k) {
  const int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  // DSATUR-style: pick the uncolored vertex with the fewest remaining options
  std::function<bool(int)> solve = [&](int colored) -> bool {
    if (colored == n) return true;
    int best = -1;
    int best_options = k + 1;
    int best_degree = -1;
    std::uint64_t best_mask = 0;
    for (int v = 0; v < n; ++v) {
      if (color[static_cast<std::size_t>(v)] >= 0) continue;
      std::uint64_t used = 0;
      g.neighbors(v).for_each([&](int u) {
        if (color[static_cast<std::size_t>(u)] >= 0) used |= std::uint64_t{1} << color[static_cast<std::size_t>(u)];
      });
      const std::uint64_t avail = VertexSet::range(k).bits() & ~used;
      const int options = std::popcount(avail);
      if (options < best_options || (options == best_options && g.degree(v) > best_degree)) {
        best = v;
        best_options = options;
        best_degree = g.degree(v);
        best_mask = avail;
      }
    }
    if (best_options == 0) return false;
    // symmetry breaking: never open more than one fresh color
    int max_used = -1;
    for (int c : color) max_used = std::max(max_used, c);
    for (std::uint64_t b = best_mask; b != 0; b &= b - 1) {
      const int c = std::countr_zero(b);
      if (c > max_used + 1) break;
      color[static_cast<std::size_t>(best)] = c;
      if (solve(colored + 1)) return true;
    }
    color[static_cast<std::size_t>(best)] = -1;
    return false;
  };
  return solve(0);
}

int max_independent(std::uint64_t candidates, const Graph& g) {
  if (candidates == 0) return 0;
  // branch on the candidate with the most candidate neighbors
  int pivot = -1;
  int pivot_deg = -1;
  for (std::uint64_t b = candidates; b != 0; b &= b - 1) {
    const int v = std::countr_zero(b);
    const int d = std::popcount(g.neighbors(v).bits() & candidates);
    if (d > pivot_deg) {
      pivot = v;
      pivot_deg = d;
    }
  }
  const std::uint64_t without = candidates & ~(std::uint64_t{1} << pivot);
  if (pivot_deg == 0) return std::popcount(candidates);
  const int take = 1 + max_independent(without & ~g.neighbors(pivot).bits(), g);
  const int skip = max_independent(without, g);
  return std::max(take, skip);
}

}  // namespace

int chromatic_number(const Graph& g) {
  if (g.has_loops()) throw DomainError("chromatic_number: graph has a loop");
  if (g.order() == 0) return 0;
  int k = g.edge_count() == 0 ? 1 : 2;
  while (!colorable(g, k)) ++k;
  return k;
}

int max_independent_set(const Graph& g) {
  std::uint64_t candidates = 0;
  for (int v = 0; v < g.order(); ++v)
    if (!g.has_loop(v)) candidates |= std::uint64_t{1} << v;
  return max_independent(candidates, g);
}

// --- isomorphism -----------------------------------------------------------

namespace {

struct VertexInvariant {
  int degree;
  bool loop;
  std::vector<int> neighbor_degrees;
  friend auto operator<=>(const VertexInvariant&, const VertexInvariant&) = default;
};

std::vector<VertexInvariant> invariants(const Graph& g) {
  std::vector<VertexInvariant> out;
  for (int v = 0; v < g.order(); ++v) {
    VertexInvariant inv{g.degree(v), g.has_loop(v), {}};
    g.neighbors(v).without(v).for_each([&](int u) { inv.neighbor_degrees.push_back(g.degree(u)); });
    std::sort(inv.neighbor_degrees.begin(), inv.neighbor_degrees.end());
    out.push_back(std::move(inv));
  }
  return out;
}

}  // namespace

std::optional<GraphMap> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.order() > kIsomorphismCap || h.order() > kIsomorphismCap) {
    throw ResourceError("isomorphism search is limited to " + std::to_string(kIsomorphismCap) +
                        " vertices");
  }
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return std::nullopt;
  const int n = g.order();
  const auto inv_g = invariants(g);
  const auto inv_h = invariants(h);
  {
    auto a = inv_g;
    auto b = inv_h;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  // order g's vertices so each one (after the first in its component) has an
  // already-placed neighbor: strongest consistency checks early
  std::vector<int> order;
  std::vector<bool> placed(static_cast<std::size_t>(n), false);
  while (static_cast<int>(order.size()) < n) {
    int start = -1;
    for (int v = 0; v < n; ++v) {
      if (!placed[static_cast<std::size_t>(v)] && (start < 0 || g.degree(v) > g.degree(start))) start = v;
    }
    std::vector<int> queue{start};
    placed[static_cast<std::size_t>(start)] = true;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      order.push_back(queue[i]);
      g.neighbors(queue[i]).for_each([&](int u) {
        if (!placed[static_cast<std::size_t>(u)]) {
          placed[static_cast<std::size_t>(u)] = true;
          queue.push_back(u);
        }
      });
    }
  }

  GraphMap map(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::function<bool(int)> extend = [&](int depth) -> bool {
    if (depth == n) return true;
    const int v = order[static_cast<std::size_t>(depth)];
    for (int c = 0; c < n; ++c) {
      if (used[static_cast<std::size_t>(c)] || inv_g[static_cast<std::size_t>(v)] != inv_h[static_cast<std::size_t>(c)]) continue;
      bool ok = true;
      for (int i = 0; i < depth && ok; ++i) {
        const int u = order[static_cast<std::size_t>(i)];
        ok = g.adjacent(u, v) == h.adjacent(map[static_cast<std::size_t>(u)], c);
      }
      if (!ok) continue;
      map[static_cast<std::size_t>(v)] = c;
      used[static_cast<std::size_t>(c)] = true;
      if (extend(depth + 1)) return true;
      used[static_cast<std::size_t>(c)] = false;
    }
    map[static_cast<std::size_t>(v)] = -1;
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return map;
}

bool are_isomorphic(const Graph& g, const Graph& h) { return find_isomorphism(g, h).has_value(); }

int component_count(const Graph& g) {
  int count = 0;
  VertexSet seen;
  for (int v = 0; v < g.order(); ++v) {
    if (seen.contains(v)) continue;
    ++count;
    VertexSet frontier = VertexSet::single(v);
    seen = seen | frontier;
    while (!frontier.empty()) {
      VertexSet next;
      frontier.for_each([&](int u) { next = next | g.neighbors(u); });
      frontier = next - seen;
      seen = seen | next;
    }
  }
  return count;
}

bool is_forest(const Graph& g) {
  if (g.has_loops()) return false;
  return static_cast<int>(g.edge_count()) == g.order() - component_count(g);
}

std::string describe(const Graph& g) {
  std::ostringstream os;
  os << "graph(n=" << g.order() << ", edges=[";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    os << (first ? "" : ",") << u << '-' << v;
    first = false;
  }
  os << "])";
  return os.str();
}

}  // namespace homtopo
