#include <gtest/gtest.h>

#include <array>
#include <functional>
#include <limits>
#include <set>

#include "homtopo/errors.hpp"
#include "homtopo/formulas.hpp"
#include "homtopo/homcx.hpp"

using namespace homtopo;

namespace {

// S(n,k) by the explicit alternating sum, 64-bit.
long long stirling_sum(int n, int k) {
  long long total = 0;
  long long binom = 1;
  long long kfact = 1;
  for (int i = 1; i <= k; ++i) kfact *= i;
  for (int j = 0; j <= k; ++j) {
    long long p = 1;
    for (int i = 0; i < n; ++i) p *= (k - j);
    total += (j % 2 ? -1 : 1) * binom * p;
    binom = binom * (k - j) / (j + 1);
  }
  return total / kfact;
}

// Set partitions of {0..n-1} into k blocks, by restricted growth strings.
long long count_partitions(int n, int k) {
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  long long count = 0;
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (i == n) {
      count += used == k;
      return;
    }
    for (int b = 0; b <= used && b < k; ++b) {
      a[static_cast<std::size_t>(i)] = b;
      rec(i + 1, std::max(used, b + 1));
    }
  };
  rec(0, 0);
  return count;
}

}  // namespace

TEST(Wedge, KnownValues) {
  EXPECT_EQ(f_wedge(3, 4), 13);
  EXPECT_EQ(f_wedge(3, 5), 29);
  EXPECT_EQ(f_wedge(4, 5), 121);
  EXPECT_EQ(f_wedge(4, 6), 479);
  EXPECT_EQ(f_wedge(5, 5), 119);
  for (int n = 3; n <= 12; ++n) EXPECT_EQ(f_wedge(3, n), (BigInt(1) << n) - 3);
  for (int n = 4; n <= 12; ++n) EXPECT_EQ(f_wedge(4, n), pow(BigInt(3), static_cast<unsigned>(n)) - 4 * (BigInt(1) << n) + 6);
}

TEST(Wedge, Boundaries) {
  for (int n = 1; n <= 10; ++n) {
    EXPECT_EQ(f_wedge(1, n), 0);
    EXPECT_EQ(f_wedge(n, n), factorial(n) - 1);
    EXPECT_EQ(f_wedge(n + 1, n), 0);
    EXPECT_EQ(f_wedge(2, n), n >= 2 ? 1 : 0);
  }
  EXPECT_THROW(f_wedge(0, 3), DomainError);
  EXPECT_THROW(f_wedge(3, 0), DomainError);
}

TEST(Wedge, MethodsAgree) {
  for (int m = 1; m <= 12; ++m)
    for (int n = m; n <= 12; ++n) {
      const BigInt c = f_wedge(m, n, WedgeMethod::closed);
      EXPECT_EQ(c, f_wedge(m, n, WedgeMethod::recurrence)) << m << "," << n;
      EXPECT_EQ(c, f_wedge(m, n, WedgeMethod::stirling)) << m << "," << n;
    }
}

TEST(Wedge, LargeValuesAreExact) {
  const BigInt f = f_wedge(20, 30);
  EXPECT_EQ(f, f_wedge(20, 30, WedgeMethod::recurrence));
  EXPECT_GT(f, BigInt(std::numeric_limits<std::uint64_t>::max()));
}

TEST(Chi, ValuesAndIdentity) {
  EXPECT_EQ(chi_hom(2, 3), 0);
  EXPECT_EQ(chi_hom(3, 3), 6);
  EXPECT_EQ(chi_hom(3, 4), -12);
  for (int m = 1; m <= 12; ++m)
    for (int n = m; n <= 12; ++n) {
      const BigInt sign = (n - m) % 2 ? -1 : 1;
      EXPECT_EQ(chi_hom(m, n), 1 + sign * f_wedge(m, n)) << m << "," << n;
    }
}

TEST(Chi, MatchesComplexes) {
  for (int m = 1; m <= 3; ++m)
    for (int n = m; n <= 6; ++n) {
      const HomComplex c = HomComplex::build(complete_graph(m), complete_graph(n));
      EXPECT_EQ(chi_hom(m, n), c.face_poset().euler_characteristic()) << m << "," << n;
    }
}

TEST(Stirling, AgainstExplicitSumAndPartitions) {
  EXPECT_EQ(stirling2(0, 0), 1);
  EXPECT_EQ(stirling2(4, 2), 7);
  EXPECT_EQ(count_partitions(4, 2), 7);
  for (int n = 0; n <= 12; ++n) EXPECT_EQ(stirling2(n, n), 1);
  for (int n = 1; n <= 14; ++n)
    for (int k = 0; k <= n; ++k) EXPECT_EQ(stirling2(n, k), stirling_sum(n, k)) << n << "," << k;
  for (int n = 1; n <= 8; ++n)
    for (int k = 1; k <= n; ++k) EXPECT_EQ(stirling2(n, k), count_partitions(n, k));
  EXPECT_EQ(stirling2(3, 5), 0);
}

TEST(Stirling, Binomials) {
  EXPECT_EQ(binomial(10, 3), 120);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(20), BigInt("2432902008176640000"));
}

TEST(Generating, Identity) {
  for (int m = 1; m <= 12; ++m) EXPECT_TRUE(verify_generating_identity(m, 12)) << m;
  EXPECT_TRUE(verify_generating_identity(3, 30));
}

TEST(Cycles, Components) {
  const std::vector<long long> expected{6, 1, 2, 7, 2, 3, 8};
  for (int t = 3; t <= 9; ++t) EXPECT_EQ(cycle_components(t), expected[static_cast<std::size_t>(t - 3)]);
  for (int t = 3; t <= 30; ++t) {
    const long long want = t % 3 ? (t + 1) / 3 : t / 3 + 5;
    EXPECT_EQ(cycle_components(t), want);
  }
  EXPECT_THROW(cycle_components(2), DomainError);
}

TEST(Mn, FaceCounts) {
  const MnFacePoset two = mn_face_poset(2);
  EXPECT_EQ(two.faces.size(), 12u);
  EXPECT_EQ(two.poset.f_vector(), (std::vector<std::size_t>{6, 6}));
  const MnFacePoset three = mn_face_poset(3);
  EXPECT_EQ(three.faces.size(), 50u);
  EXPECT_EQ(three.poset.f_vector(), (std::vector<std::size_t>{14, 24, 12}));
  EXPECT_EQ(three.poset.euler_characteristic(), 2);
  EXPECT_THROW(mn_face_poset(0), DomainError);
  EXPECT_THROW(mn_face_poset(7), DomainError);
}

TEST(Mn, LabelsAndSymmetry) {
  for (int n = 1; n <= 5; ++n) {
    const MnFacePoset p = mn_face_poset(n);
    // boundary of an n-dimensional polytope is a sphere
    const long long chi = p.poset.euler_characteristic();
    EXPECT_EQ(chi, n % 2 ? 2 : 0) << n;
    for (ElementId x = 0; x < p.faces.size(); ++x) {
      const MnFace& face = p.faces[x];
      EXPECT_EQ(face.label.size(), static_cast<std::size_t>(n));
      const ElementId y = p.central_symmetry[x];
      EXPECT_EQ(p.central_symmetry[y], x);
      EXPECT_NE(y, x);
      EXPECT_EQ(p.faces[y].dim, face.dim);
      if (face.kind == MnFace::Kind::star_plus) {
        EXPECT_EQ(p.faces[y].kind, MnFace::Kind::star_minus);
        EXPECT_TRUE(std::count(face.label.begin(), face.label.end(), 1) >= 1);
        EXPECT_TRUE(std::count(face.label.begin(), face.label.end(), -1) == 0);
      }
      EXPECT_EQ(face.vertices.size() >= 1, true);
    }
  }
}

TEST(Mn, RhoIsABijectionOntoCells) {
  for (int n = 2; n <= 4; ++n) {
    const MnFacePoset p = mn_face_poset(n);
    const HomComplex hom = HomComplex::build(complete_graph(2), complete_graph(n + 1));
    ASSERT_EQ(p.faces.size(), hom.size());
    std::set<std::pair<VertexSet, VertexSet>> seen;
    for (ElementId x = 0; x < p.faces.size(); ++x) {
      const auto [a, b] = p.rho(x);
      const std::array<VertexSet, 2> ab{a, b};
      ASSERT_TRUE(hom.find(ab).has_value());
      // dimension reverses: vertices of M_n go to facets of the complex
      EXPECT_EQ(a.size() + b.size() - 2, n - 1 - p.faces[x].dim);
      EXPECT_TRUE(seen.insert({a, b}).second);
      const auto [c, d] = p.rho(p.central_symmetry[x]);
      EXPECT_EQ(c, b);
      EXPECT_EQ(d, a);
    }
  }
}
