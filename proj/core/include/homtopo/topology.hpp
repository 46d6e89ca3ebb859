#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "homtopo/gf2.hpp"

namespace homtopo {

using ElementId = std::uint32_t;

/// Where a poset came from; informational only.
enum class Provenance { generic, hom_complex, simplicial, order_complex, quotient, polytope, opposite };

std::string to_string(Provenance p);

/// A finite graded poset given by its covering relation. In regular-CW mode the
/// covers of an element are exactly its codimension-1 faces, and the mod-2
/// boundary of a cell is the sum of its covers.
///
/// Invariant: every cover of x has strictly smaller dimension than x.
class CellPoset {
 public:
  CellPoset() = default;
  CellPoset(std::vector<int> dims, std::vector<std::vector<ElementId>> covers,
            Provenance provenance = Provenance::generic);

  std::size_t size() const noexcept { return dims_.size(); }
  bool empty() const noexcept { return dims_.empty(); }
  int dim(ElementId x) const { return dims_[x]; }
  const std::vector<int>& dims() const noexcept { return dims_; }
  /// Largest dimension, -1 when empty.
  int dimension() const noexcept { return dimension_; }
  /// Elements covered by x (its facets in regular-CW mode).
  std::span<const ElementId> facets(ElementId x) const { return covers_[x]; }
  std::vector<std::vector<ElementId>> cofacets() const;
  Provenance provenance() const noexcept { return provenance_; }

  /// True iff every cover drops dimension by exactly one.
  bool is_graded_by_dimension() const;

  /// Optional fast order test; must agree with the transitive closure of covers.
  void set_order_oracle(std::function<bool(ElementId, ElementId)> leq);
  bool has_order_oracle() const noexcept { return static_cast<bool>(oracle_); }
  /// a <= b. Uses the oracle if set, else searches down from b.
  bool leq(ElementId a, ElementId b) const;

  std::vector<std::size_t> f_vector() const;
  long long euler_characteristic() const;

 private:
  std::vector<int> dims_;
  std::vector<std::vector<ElementId>> covers_;
  Provenance provenance_ = Provenance::generic;
  int dimension_ = -1;
  std::function<bool(ElementId, ElementId)> oracle_;
};

/// Same elements, opposite order. Dimensions become dimension() - dim.
CellPoset opposite(const CellPoset& p);

/// The subposet on a down-closed set of elements (a subcomplex). Elements are
/// renumbered in the order given. Throws DomainError if not down-closed.
CellPoset subcomplex(const CellPoset& p, std::span<const ElementId> elements);

/// The induced subposet on an arbitrary element set, with covers recomputed
/// from the restricted order. Elements are renumbered in the order given.
CellPoset induced_subposet(const CellPoset& p, std::span<const ElementId> elements);

/// Per-element sorted lists of strictly larger elements.
std::vector<std::vector<ElementId>> strict_up_sets(const CellPoset& p);

using Simplex = std::vector<std::uint32_t>;

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept;
};

/// Simplicial complex with simplices closed under taking nonempty subsets.
/// Vertices are arbitrary integer labels; simplices are sorted vertex lists.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Closure of the given generating simplices. Throws ResourceError if more
  /// than `budget` simplices would be produced.
  static SimplicialComplex from_maximal(std::vector<Simplex> generators,
                                        std::size_t budget = 5'000'000);
  /// Takes an explicit list; throws DomainError if it is not closed under
  /// nonempty subsets or has duplicates.
  static SimplicialComplex from_simplices(std::vector<Simplex> simplices);

  std::size_t size() const noexcept { return simplices_.size(); }
  const Simplex& simplex(std::size_t i) const { return simplices_[i]; }
  const std::vector<Simplex>& simplices() const noexcept { return simplices_; }
  int dimension() const;
  std::vector<std::uint32_t> vertices() const;
  bool contains(const Simplex& s) const;
  std::optional<std::size_t> index_of(const Simplex& s) const;
  /// Inclusion-maximal simplices, sorted.
  std::vector<Simplex> maximal_simplices() const;
  std::vector<std::size_t> f_vector() const;

  /// Face poset (regular-CW mode), element i = simplex(i).
  CellPoset face_poset() const;

  /// For order complexes: label[v] is the poset element behind vertex v.
  const std::vector<std::uint32_t>& vertex_labels() const noexcept { return labels_; }
  void set_vertex_labels(std::vector<std::uint32_t> labels) { labels_ = std::move(labels); }

 private:
  void canonicalize();

  std::vector<Simplex> simplices_;  // sorted by (size, lexicographic)
  std::unordered_map<Simplex, std::size_t, SimplexHash> index_;
  std::vector<std::uint32_t> labels_;
};

/// The chains of p. Vertex v of the result is poset element
/// vertex_labels()[v]; vertices are numbered in (dimension, id) order so that
/// every chain is listed bottom-up. Throws ResourceError past `budget` chains.
SimplicialComplex order_complex(const CellPoset& p, std::size_t budget = 5'000'000);

/// Boundary matrices over GF(2): boundary(k) maps k-cells to (k-1)-cells.
class Gf2ChainComplex {
 public:
  /// Requires regular-CW mode. Throws InternalError if the boundary does not
  /// square to zero.
  static Gf2ChainComplex from_poset(const CellPoset& p);
  /// Explicit matrices; boundaries[k] for k >= 1 must have cells_per_dim[k-1]
  /// rows and cells_per_dim[k] columns. boundaries[0] is ignored.
  Gf2ChainComplex(std::vector<std::size_t> cells_per_dim, std::vector<Gf2Matrix> boundaries);

  int top_dimension() const noexcept { return static_cast<int>(cells_.size()) - 1; }
  std::size_t cells(int k) const { return cells_[static_cast<std::size_t>(k)]; }
  const Gf2Matrix& boundary(int k) const { return boundaries_[static_cast<std::size_t>(k)]; }
  /// Throws InternalError unless every composite boundary vanishes.
  void verify() const;

 private:
  Gf2ChainComplex() = default;
  std::vector<std::size_t> cells_;
  std::vector<Gf2Matrix> boundaries_;
};

struct BettiProfile {
  std::vector<std::size_t> betti;
  long long euler = 0;
  std::vector<std::size_t> f_vector;
  friend bool operator==(const BettiProfile&, const BettiProfile&) = default;
};

/// GF(2) Betti numbers by column reduction with clearing. Also cross-checks the
/// Euler characteristic against the f-vector.
BettiProfile betti_gf2(const Gf2ChainComplex& c);
BettiProfile betti_gf2(const CellPoset& p);
BettiProfile betti_gf2(const SimplicialComplex& s);

/// Trailing zero Betti numbers are dropped for comparison purposes.
std::vector<std::size_t> trimmed(std::vector<std::size_t> betti);

/// Components of the 1-skeleton.
std::size_t connected_components(const CellPoset& p);
/// Component label for every 0-cell; other elements get the label of a vertex
/// below them.
std::vector<std::uint32_t> component_labels(const CellPoset& p);

/// True iff every clique of the 1-skeleton spans a simplex.
bool is_flag(const SimplicialComplex& s);

/// Isomorphism search between posets with the same dims and covers. Returns
/// f with f(x) in b for x in a.
std::optional<std::vector<ElementId>> find_poset_isomorphism(const CellPoset& a, const CellPoset& b);
/// Checks that f is a bijection a -> b with x <= y iff f(x) <= f(y).
bool is_poset_isomorphism(const CellPoset& a, const CellPoset& b, std::span<const ElementId> f);

}  // namespace homtopo
