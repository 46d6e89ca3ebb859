#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "homtopo/gf2.hpp"
#include "homtopo/graphs.hpp"
#include "homtopo/homcx.hpp"
#include "homtopo/topology.hpp"

namespace homtopo {

/// A permutation of order dividing 2 on the vertices of a graph or the
/// elements of a poset.
class Involution {
 public:
  /// Throws DomainError unless gamma is an automorphism with gamma^2 = id.
  static Involution on_graph(const Graph& g, GraphMap gamma);
  /// Throws DomainError unless perm is involutive and preserves dimensions
  /// and covers.
  static Involution on_poset(const CellPoset& p, std::vector<ElementId> perm);

  std::size_t size() const noexcept { return perm_.size(); }
  std::uint32_t operator()(std::uint32_t x) const { return perm_[x]; }
  const std::vector<std::uint32_t>& permutation() const noexcept { return perm_; }
  bool is_free() const noexcept { return !fixed_.has_value(); }
  /// Smallest fixed element, if any.
  std::optional<std::uint32_t> fixed_point() const noexcept { return fixed_; }
  std::size_t orbit_count() const;

 private:
  explicit Involution(std::vector<std::uint32_t> perm);
  std::vector<std::uint32_t> perm_;
  std::optional<std::uint32_t> fixed_;
};

/// eta -> eta o gamma on Hom(G,H), for an involutive automorphism gamma of G.
Involution induced_involution(const HomComplex& c, const GraphMap& gamma);

/// Swaps vertices 0 and 1 of K_m.
GraphMap swap01(int m);

/// Quotient of the barycentric subdivision by a free involution, as an
/// ordered Delta-complex. Simplex orbits are represented by the chain with the
/// smaller index in the order complex.
struct QuotientComplex {
  /// lifts[k][i]: a chain of poset elements, bottom-up, representing simplex i.
  std::vector<std::vector<Simplex>> lifts;
  /// faces[k][i][j]: index in dimension k-1 of the face dropping vertex j.
  std::vector<std::vector<std::vector<std::uint32_t>>> faces;
  /// sheet[e] = 0 iff poset element e was chosen to represent its orbit.
  std::vector<std::uint8_t> sheet;
  /// The cocycle on edges: sheet(bottom) xor sheet(top) of any lift.
  std::vector<std::uint8_t> w;

  int dimension() const noexcept { return static_cast<int>(lifts.size()) - 1; }
  std::size_t count(int k) const { return lifts[static_cast<std::size_t>(k)].size(); }
};

/// Throws DomainError naming a fixed element if the action is not free, and
/// ResourceError past `budget` chains. `seed` varies which element of each
/// vertex orbit gets sheet 0; seed 0 picks the smaller id.
QuotientComplex quotient(const CellPoset& x, const Involution& a, std::uint64_t seed = 0,
                         std::size_t budget = 5'000'000);

Gf2ChainComplex quotient_chain_complex(const QuotientComplex& q);
BettiProfile quotient_betti(const QuotientComplex& q);

/// Support of w^k on k-simplices (Alexander-Whitney product along a lift).
Gf2Column cup_power(const QuotientComplex& q, int k);
/// Support of a 1-cochain's coboundary on 2-simplices.
Gf2Column coboundary(const QuotientComplex& q, int k, const Gf2Column& cochain);
/// True iff the k-cochain is delta of some (k-1)-cochain. For k = 0 only the
/// zero cochain qualifies.
bool is_coboundary(const QuotientComplex& q, int k, const Gf2Column& cochain);

/// Largest k <= cap with w^k not a coboundary; 0 if w is one already, -1 for
/// the empty complex.
int sw_height(const QuotientComplex& q, int cap);
int sw_height(const CellPoset& x, const Involution& a, int cap, std::uint64_t seed = 0);

struct ColoringBound {
  bool free = false;
  std::vector<std::size_t> quotient_betti;
  int sw_height = -1;
  int bound = 0;
};

/// k + m with k the height of w on Hom(K_m,g)/swap. g must be loopless.
ColoringBound coloring_bound(const Graph& g, int m, int cap = 8, std::size_t budget = kDefaultCellBudget);

}  // namespace homtopo
