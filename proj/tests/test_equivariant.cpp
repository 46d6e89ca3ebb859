#include <gtest/gtest.h>

#include "homtopo/corpus.hpp"
#include "homtopo/equivariant.hpp"
#include "homtopo/errors.hpp"
#include "homtopo/homcx.hpp"

using namespace homtopo;

namespace {

struct Acted {
  HomComplex hom;
  CellPoset poset;
  Involution action;
};

Acted flip_on(const Graph& g, int m) {
  HomComplex hom = HomComplex::build(complete_graph(m), g);
  CellPoset poset = hom.face_poset();
  Involution action = induced_involution(hom, swap01(m));
  return {std::move(hom), std::move(poset), std::move(action)};
}

// 2k-gon: vertices 0..2k-1, edge 2k+i joins i and i+1.
CellPoset polygon(int k) {
  const int n = 2 * k;
  std::vector<int> dims(static_cast<std::size_t>(2 * n), 0);
  std::vector<std::vector<ElementId>> covers(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    dims[static_cast<std::size_t>(n + i)] = 1;
    covers[static_cast<std::size_t>(n + i)] = {static_cast<ElementId>(i), static_cast<ElementId>((i + 1) % n)};
  }
  return CellPoset(std::move(dims), std::move(covers));
}

std::vector<ElementId> antipode(int k) {
  const int n = 2 * k;
  std::vector<ElementId> perm(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    perm[static_cast<std::size_t>(i)] = static_cast<ElementId>((i + k) % n);
    perm[static_cast<std::size_t>(n + i)] = static_cast<ElementId>(n + (i + k) % n);
  }
  return perm;
}

Gf2Column support(const std::vector<std::uint8_t>& w) {
  Gf2Column out;
  for (std::uint32_t i = 0; i < w.size(); ++i)
    if (w[i]) out.push_back(i);
  return out;
}

long long euler(const BettiProfile& b) {
  long long chi = 0;
  for (std::size_t i = 0; i < b.f_vector.size(); ++i) chi += (i % 2 ? -1 : 1) * static_cast<long long>(b.f_vector[i]);
  return chi;
}

}  // namespace

TEST(Involution, Validation) {
  EXPECT_NO_THROW(Involution::on_graph(cycle_graph(4), {2, 3, 0, 1}));
  EXPECT_THROW(Involution::on_graph(cycle_graph(5), {1, 2, 3, 4, 0}), DomainError);
  EXPECT_THROW(Involution::on_graph(path_graph(3), {1, 0, 2}), DomainError);
  EXPECT_THROW(Involution::on_graph(path_graph(3), {0, 1}), DomainError);
  const CellPoset p = polygon(2);
  EXPECT_TRUE(Involution::on_poset(p, antipode(2)).is_free());
  // swapping a vertex with an edge breaks dimensions
  std::vector<ElementId> bad = antipode(2);
  std::swap(bad[0], bad[4]);
  EXPECT_THROW(Involution::on_poset(p, bad), DomainError);
  EXPECT_THROW(swap01(1), DomainError);
}

TEST(Involution, FlipOnHexagon) {
  const Acted a = flip_on(complete_graph(3), 2);
  EXPECT_TRUE(a.action.is_free());
  EXPECT_EQ(a.action.orbit_count(), 6u);
  for (ElementId x = 0; x < a.poset.size(); ++x) {
    EXPECT_EQ(a.action(a.action(x)), x);
    EXPECT_EQ(a.poset.dim(a.action(x)), a.poset.dim(x));
  }
}

TEST(Involution, EndpointSwapOnPathIsNotFree) {
  const HomComplex hom = HomComplex::build(path_graph(3), complete_graph(3));
  const Involution a = induced_involution(hom, {2, 1, 0});
  EXPECT_FALSE(a.is_free());
  ASSERT_TRUE(a.fixed_point().has_value());
  const auto cell = hom.cell(*a.fixed_point());
  EXPECT_EQ(cell[0], cell[2]);
  EXPECT_THROW(quotient(hom.face_poset(), a), DomainError);
}

TEST(Involution, SwapOnKmnIsFree) {
  for (int m = 2; m <= 4; ++m)
    for (int n = m; n <= 5; ++n) EXPECT_TRUE(flip_on(complete_graph(n), m).action.is_free()) << m << "," << n;
}

TEST(Quotient, ProjectiveSpaces) {
  for (int n = 3; n <= 5; ++n) {
    const Acted a = flip_on(complete_graph(n), 2);
    const QuotientComplex q = quotient(a.poset, a.action);
    EXPECT_EQ(trimmed(quotient_betti(q).betti), std::vector<std::size_t>(static_cast<std::size_t>(n - 1), 1));
    EXPECT_EQ(sw_height(q, 8), n - 2);
  }
  const Acted hex = flip_on(complete_graph(3), 2);
  const QuotientComplex q = quotient(hex.poset, hex.action);
  // a 6-vertex circle: 12 barycentric vertices and 12 edges, halved
  EXPECT_EQ(q.count(0), 6u);
  EXPECT_EQ(q.count(1), 6u);
}

TEST(Quotient, KthreeKfour) {
  const Acted a = flip_on(complete_graph(4), 3);
  EXPECT_EQ(sw_height(a.poset, a.action, 8), 1);
}

TEST(Quotient, EulerCharacteristicHalves) {
  for (const auto& ng : loopless_corpus(6)) {
    for (int m = 2; m <= 3; ++m) {
      const Acted a = flip_on(ng.graph, m);
      if (a.poset.empty() || a.poset.size() > 3000) continue;
      const QuotientComplex q = quotient(a.poset, a.action);
      EXPECT_EQ(2 * euler(quotient_betti(q)), a.poset.euler_characteristic()) << ng.name << " m=" << m;
    }
  }
}

TEST(Quotient, CocycleAndSeedIndependence) {
  for (const Graph& g : {complete_graph(4), cycle_graph(5), complete_bipartite(2, 3)}) {
    const Acted a = flip_on(g, 2);
    const QuotientComplex q0 = quotient(a.poset, a.action);
    const Gf2Column w0 = support(q0.w);
    EXPECT_TRUE(coboundary(q0, 1, w0).empty());
    EXPECT_EQ(cup_power(q0, 1), w0);
    for (std::uint64_t seed : {1u, 7u, 99u}) {
      const QuotientComplex qs = quotient(a.poset, a.action, seed);
      ASSERT_EQ(qs.lifts, q0.lifts);
      Gf2Column diff = support(qs.w);
      EXPECT_TRUE(coboundary(qs, 1, diff).empty());
      gf2_add(diff, w0);
      EXPECT_TRUE(is_coboundary(q0, 1, diff)) << describe(g) << " seed " << seed;
      EXPECT_EQ(sw_height(qs, 8), sw_height(q0, 8));
    }
  }
}

TEST(Quotient, AcyclicQuotientHasHeightZero) {
  // K_{2,3}: Hom(K_2,G) is two contractible pieces swapped by the flip
  const Acted a = flip_on(complete_bipartite(2, 3), 2);
  const QuotientComplex q = quotient(a.poset, a.action);
  EXPECT_EQ(trimmed(quotient_betti(q).betti), (std::vector<std::size_t>{1}));
  EXPECT_EQ(sw_height(q, 8), 0);
}

TEST(Quotient, AntipodalCircleGivesHeightOne) {
  for (int k = 2; k <= 5; ++k) {
    const CellPoset p = polygon(k);
    const QuotientComplex q = quotient(p, Involution::on_poset(p, antipode(k)));
    EXPECT_EQ(trimmed(quotient_betti(q).betti), (std::vector<std::size_t>{1, 1}));
    EXPECT_EQ(sw_height(q, 8), 1);
  }
}

TEST(Quotient, HeightIsMonotoneUnderInvariantCircle) {
  // the antipodal square with an equivariant pair of whiskers attached
  CellPoset square = polygon(2);
  std::vector<int> dims = square.dims();
  std::vector<std::vector<ElementId>> covers;
  for (ElementId x = 0; x < square.size(); ++x) covers.emplace_back(square.facets(x).begin(), square.facets(x).end());
  std::vector<ElementId> perm = antipode(2);
  // new vertices 8, 9 and edges 10 = {0, 8}, 11 = {2, 9}
  dims.insert(dims.end(), {0, 0, 1, 1});
  covers.push_back({});
  covers.push_back({});
  covers.push_back({0, 8});
  covers.push_back({2, 9});
  perm.insert(perm.end(), {9, 8, 11, 10});
  const CellPoset p(dims, covers);
  EXPECT_GE(sw_height(p, Involution::on_poset(p, perm), 8), 1);
}

TEST(Bound, TightExamples) {
  for (int n = 2; n <= 5; ++n) EXPECT_EQ(coloring_bound(complete_graph(n), 2).bound, n);
  EXPECT_EQ(coloring_bound(cycle_graph(5), 2).bound, 3);
  EXPECT_EQ(coloring_bound(complete_graph(4), 3).bound, 4);
  const ColoringBound p = coloring_bound(petersen_graph(), 2);
  EXPECT_TRUE(p.free);
  EXPECT_EQ(p.bound, 3);
}

TEST(Bound, SoundOnSmallCorpus) {
  for (const auto& ng : loopless_corpus(6)) {
    const ColoringBound b = coloring_bound(ng.graph, 2);
    EXPECT_LE(b.bound, chromatic_number(ng.graph)) << ng.name;
    EXPECT_TRUE(b.free);
  }
}

TEST(Bound, EmptyComplexAndErrors) {
  const ColoringBound b = coloring_bound(empty_graph(3), 2);
  EXPECT_EQ(b.sw_height, -1);
  EXPECT_EQ(b.bound, 1);
  EXPECT_THROW(coloring_bound(q_graph(), 2), DomainError);
  EXPECT_THROW(coloring_bound(complete_graph(3), 1), DomainError);
  EXPECT_THROW(coloring_bound(complete_graph(6), 4, 8, 100), ResourceError);
}
