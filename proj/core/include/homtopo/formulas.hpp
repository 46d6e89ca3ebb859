#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "homtopo/graphs.hpp"
#include "homtopo/topology.hpp"

namespace homtopo {

using BigInt = boost::multiprecision::cpp_int;

enum class WedgeMethod { recurrence, closed, stirling };

/// Number of (n-m)-spheres in the wedge Hom(K_m,K_n). Zero for m > n.
/// Throws DomainError for m < 1 or n < 1.
BigInt f_wedge(int m, int n, WedgeMethod method = WedgeMethod::closed);
/// Euler characteristic of Hom(K_m,K_n) from its own recurrence.
BigInt chi_hom(int m, int n);
/// Stirling numbers of the second kind, S(0,0) = 1.
BigInt stirling2(int n, int k);
BigInt factorial(int n);
BigInt binomial(int n, int k);

/// Expands both sides of the generating-function identity for f(m, .) to
/// degree `upto` and compares coefficients.
bool verify_generating_identity(int m, int upto);

/// Components of Hom(C_t,K_3). Throws DomainError for t < 3.
long long cycle_components(int t);

inline constexpr int kStar = 2;

/// A proper face of the zonotope M_n (cube plus main-diagonal segment).
struct MnFace {
  enum class Kind { star_plus, star_minus, middle };
  Kind kind;
  /// n entries over {1, 0, -1, kStar}. For middle faces this is the
  /// {1,0,*} half; the other half is obtained by shifting down by one.
  std::vector<int> label;
  int dim = 0;
  /// Vertices of the face: +mask is the 0/1 point with ones on mask, and
  /// (1 << n) + mask the 0/-1 point with minus ones on mask.
  std::vector<std::uint32_t> vertices;
};

struct MnFacePoset {
  int n = 0;
  std::vector<MnFace> faces;  // sorted by (dim, vertices)
  CellPoset poset;            // face inclusion
  /// Negation of coordinates, as a permutation of faces.
  std::vector<ElementId> central_symmetry;

  /// The cell (A, B) of Hom(K_2,K_{n+1}) labelled by face x; colour n plays
  /// the role of the extra coordinate.
  std::pair<VertexSet, VertexSet> rho(ElementId x) const;
};

/// Faces of M_n from the three label classes, 1 <= n <= 6.
MnFacePoset mn_face_poset(int n);

}  // namespace homtopo
