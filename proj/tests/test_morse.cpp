#include <gtest/gtest.h>

#include "homtopo/corpus.hpp"
#include "homtopo/errors.hpp"
#include "homtopo/homcx.hpp"
#include "homtopo/morse.hpp"

using namespace homtopo;

namespace {

// Boundary of a triangle: vertices 0,1,2 and edges 3={0,1}, 4={1,2}, 5={0,2}.
CellPoset triangle_boundary() { return CellPoset({0, 0, 0, 1, 1, 1}, {{}, {}, {}, {0, 1}, {1, 2}, {0, 2}}); }

CellPoset interval() { return CellPoset({0, 0, 1}, {{}, {}, {0, 1}}); }

}  // namespace

TEST(Matchings, EmptyAndElementaryCollapse) {
  const CellPoset p = interval();
  EXPECT_TRUE(is_acyclic(p, {}));
  EXPECT_EQ(critical_cells(p, {}).size(), 3u);
  const PartialMatching m{{{0, 2}}};
  EXPECT_TRUE(is_acyclic(p, m));
  EXPECT_EQ(critical_cells(p, m), (std::vector<ElementId>{1}));
}

TEST(Matchings, GradientCycleIsDetected) {
  const CellPoset p = triangle_boundary();
  EXPECT_FALSE(is_acyclic(p, {{{0, 3}, {1, 4}, {2, 5}}}));
  EXPECT_TRUE(is_acyclic(p, {{{0, 3}, {1, 4}}}));
}

TEST(Matchings, InvalidPairsAreDomainErrors) {
  const CellPoset p = triangle_boundary();
  EXPECT_THROW(validate_matching(p, {{{3, 0}}}), DomainError);
  EXPECT_THROW(validate_matching(p, {{{2, 3}}}), DomainError);
  EXPECT_THROW(validate_matching(p, {{{0, 3}, {0, 5}}}), DomainError);
  EXPECT_THROW(validate_matching(p, {{{0, 3}, {1, 3}}}), DomainError);
  EXPECT_THROW(is_acyclic(p, {{{0, 9}}}), DomainError);
}

TEST(Kmn, TwoThree) {
  const KmnReport r = verify_kmn(2, 3);
  EXPECT_EQ(r.a1_cells, 7u);
  EXPECT_EQ(r.matched_pairs, 2u);
  EXPECT_EQ(r.critical, 3u);
  EXPECT_TRUE(r.acyclic);
  EXPECT_TRUE(r.critical_isomorphic);
  EXPECT_EQ(trimmed(r.critical_betti.betti), (std::vector<std::size_t>{1}));
}

TEST(Kmn, ThreeThreeAndTwoFour) {
  const KmnReport a = verify_kmn(3, 3);
  EXPECT_TRUE(a.critical_isomorphic);
  EXPECT_EQ(a.critical, 2u);
  EXPECT_EQ(trimmed(a.critical_betti.betti), (std::vector<std::size_t>{2}));
  const KmnReport b = verify_kmn(2, 4);
  EXPECT_EQ(b.critical, 7u);
  EXPECT_EQ(b.critical_betti.f_vector, (std::vector<std::size_t>{3, 3, 1}));
}

TEST(Kmn, CriticalCellsHaveOnlyTheLastColourAtVertexZero) {
  const KmnMatching km = kmn_matching(3, 4);
  EXPECT_TRUE(is_acyclic(km.a1, km.matching));
  for (ElementId x : km.critical) EXPECT_EQ(km.hom.cell(km.a1_cells[x])[0], VertexSet::single(3));
  for (auto [lo, hi] : km.matching.pairs) {
    const auto a = km.hom.cell(km.a1_cells[lo]);
    const auto b = km.hom.cell(km.a1_cells[hi]);
    EXPECT_FALSE(a[0].contains(3));
    EXPECT_EQ(b[0], a[0].with(3));
  }
}

TEST(Kmn, PartitionAndBettiInvariants) {
  for (int m = 2; m <= 5; ++m) {
    for (int n = m; n <= 6; ++n) {
      const KmnReport r = verify_kmn(m, n);
      EXPECT_EQ(2 * r.matched_pairs + r.critical, r.a1_cells) << m << "," << n;
      EXPECT_TRUE(r.acyclic);
      EXPECT_TRUE(r.critical_isomorphic);
      EXPECT_EQ(trimmed(r.a1_betti.betti), trimmed(r.critical_betti.betti));
      // the critical complex is Hom(K_{m-1},K_{n-1})
      const auto expected = betti_gf2(HomComplex::build(complete_graph(m - 1), complete_graph(n - 1)).face_poset());
      EXPECT_EQ(trimmed(r.critical_betti.betti), trimmed(expected.betti));
    }
  }
}

TEST(Kmn, BudgetIsResourceError) { EXPECT_THROW(kmn_matching(4, 7, 100), ResourceError); }

TEST(Quillen, IdentityMap) {
  const CellPoset p = triangle_boundary();
  const PosetMap id{p, p, {0, 1, 2, 3, 4, 5}};
  EXPECT_TRUE(is_order_preserving(id));
  EXPECT_TRUE(check_quillen_B(id).ok);
  EXPECT_TRUE(check_quillen_B_op(id).ok);
  EXPECT_TRUE(all_fibers_coned(check_quillen_A_proxy(id)));
}

TEST(Quillen, AntichainToPoint) {
  const PosetMap f{CellPoset({0, 0}, {{}, {}}), CellPoset({0}, {{}}), {0, 0}};
  EXPECT_TRUE(check_quillen_B(f).ok);
  const auto report = check_quillen_A_proxy(f);
  ASSERT_EQ(report.size(), 1u);
  EXPECT_FALSE(report[0].has_maximum);
  ASSERT_TRUE(report[0].betti.has_value());
  EXPECT_EQ(trimmed(report[0].betti->betti), (std::vector<std::size_t>{2}));
  EXPECT_FALSE(all_fibers_coned(report));
}

TEST(Quillen, ConditionBCanFail) {
  // two incomparable elements below a top, mapped to a point: the fiber below
  // the top is the whole source, whose greatest element is the top, so B
  // holds; dropping the top breaks it
  const PosetMap ok{interval(), CellPoset({0}, {{}}), {0, 0, 0}};
  EXPECT_TRUE(check_quillen_B(ok).ok);
  const PosetMap v_shape{CellPoset({0, 0, 1}, {{}, {}, {0, 1}}), CellPoset({0, 1}, {{}, {0}}), {0, 0, 1}};
  const auto r = check_quillen_B(v_shape);
  EXPECT_FALSE(r.ok);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->first, 2u);
}

TEST(Quillen, NeighborhoodMapOfTriangle) {
  const PosetMap f = neighborhood_map(complete_graph(3));
  EXPECT_TRUE(is_order_preserving(f));
  EXPECT_TRUE(check_quillen_B(f).ok);
  const auto report = check_quillen_A_proxy(f);
  EXPECT_EQ(report.size(), 6u);
  EXPECT_TRUE(all_fibers_coned(report));
}

TEST(Quillen, NeighborhoodMapOnLooplessCorpus) {
  for (const auto& ng : loopless_corpus(7)) {
    const PosetMap f = neighborhood_map(ng.graph);
    EXPECT_TRUE(check_quillen_B(f).ok) << ng.name;
    EXPECT_TRUE(all_fibers_coned(check_quillen_A_proxy(f))) << ng.name;
    EXPECT_EQ(trimmed(betti_gf2(f.source).betti), trimmed(betti_gf2(neighborhood_complex(ng.graph)).betti)) << ng.name;
  }
}
