#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace homtopo {

/// Neighbor sets are single machine words, so graphs are capped at 64 vertices.
inline constexpr int kMaxVertices = 64;

/// A set of vertex indices of some graph, stored as a bitmask.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet single(int v) { return VertexSet{std::uint64_t{1} << v}; }
  /// {0, ..., n-1}
  static constexpr VertexSet range(int n) {
    return VertexSet{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
  }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr bool contains(int v) const noexcept { return (bits_ >> v) & 1U; }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr bool is_subset_of(VertexSet other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }
  /// Smallest member; undefined on the empty set.
  constexpr int first() const noexcept { return std::countr_zero(bits_); }

  constexpr VertexSet with(int v) const { return VertexSet{bits_ | (std::uint64_t{1} << v)}; }
  constexpr VertexSet without(int v) const { return VertexSet{bits_ & ~(std::uint64_t{1} << v)}; }

  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet{a.bits_ & b.bits_}; }
  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet{a.bits_ | b.bits_}; }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet{a.bits_ & ~b.bits_}; }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr auto operator<=>(VertexSet, VertexSet) = default;

  template <class F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(std::countr_zero(b));
  }
  std::vector<int> to_vector() const;

 private:
  std::uint64_t bits_ = 0;
};

/// Finite undirected graph on vertices 0..order()-1. Loops are allowed and are
/// stored as self-adjacency, so a looped vertex is its own neighbor.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);

  static Graph from_edges(int order, const std::vector<std::pair<int, int>>& edges);

  int order() const noexcept { return order_; }
  VertexSet vertices() const noexcept { return VertexSet::range(order_); }
  VertexSet neighbors(int v) const;
  bool adjacent(int u, int v) const;
  bool has_loop(int v) const { return adjacent(v, v); }
  bool has_loops() const;
  /// Number of neighbors other than v itself.
  int degree(int v) const;
  int max_degree() const;
  /// Undirected edges, loops included.
  std::size_t edge_count() const;
  /// Undirected edges as (u, v) with u <= v, sorted.
  std::vector<std::pair<int, int>> edges() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int v) const;

  int order_ = 0;
  std::vector<std::uint64_t> adjacency_;
};

/// Total function V(source) -> V(target), as an array of target indices.
using GraphMap = std::vector<int>;

// Standard families. All throw DomainError on out-of-range parameters.
Graph complete_graph(int n);
Graph looped_complete_graph(int n);
Graph cycle_graph(int m);
Graph path_graph(int n);
/// Two vertices, an edge between them and a loop on vertex 0.
Graph q_graph();
/// Vertices are the k-subsets of {0..n-1} in lexicographic order; edges join
/// disjoint subsets.
Graph kneser_graph(int k, int n);
Graph petersen_graph();
Graph star_graph(int leaves);
Graph empty_graph(int n);

/// Parses a family name: "K5", "K4o", "C7", "L3", "Q", "Kneser:2,5",
/// "petersen", "star:3", "E4" (4 isolated vertices).
Graph make_family(std::string_view name);

Graph complement(const Graph& g, bool looped);
/// Common neighbors of every vertex in `a`; the empty set maps to V(g).
VertexSet common_neighbors(const Graph& g, VertexSet a);
/// Vertex (x, y) is indexed x * h.order() + y.
Graph direct_product(const Graph& g, const Graph& h);
/// g's vertices come first, then h's shifted by g.order().
Graph disjoint_union(const Graph& g, const Graph& h);
Graph loop_completion(const Graph& g);
/// Vertices of s are relabelled 0.. in increasing order.
Graph induced_subgraph(const Graph& g, VertexSet s);
Graph remove_vertex(const Graph& g, int v);

bool is_homomorphism(const Graph& g, const Graph& h, const GraphMap& f);
bool is_automorphism(const Graph& g, const GraphMap& f);

/// Default node budget for homomorphism enumeration.
inline constexpr std::size_t kDefaultSearchBudget = 100'000'000;

/// All homomorphisms g -> h in lexicographic order. Throws ResourceError when
/// the number of candidate assignments tried exceeds `budget`.
std::vector<GraphMap> enumerate_homomorphisms(const Graph& g, const Graph& h,
                                              std::size_t budget = kDefaultSearchBudget);

/// Exact chromatic number. Throws DomainError if g has a loop.
int chromatic_number(const Graph& g);
/// Maximum cardinality of an independent set (looped vertices never qualify).
int max_independent_set(const Graph& g);

inline constexpr int kIsomorphismCap = 16;
/// Returns a witness f with f: g -> h an isomorphism, or nullopt.
/// Throws ResourceError beyond kIsomorphismCap vertices.
std::optional<GraphMap> find_isomorphism(const Graph& g, const Graph& h);
bool are_isomorphic(const Graph& g, const Graph& h);

int component_count(const Graph& g);
bool is_forest(const Graph& g);

std::string describe(const Graph& g);

}  // namespace homtopo
