#include "homtopo/formulas.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <string>

#include "homtopo/errors.hpp"

namespace homtopo {

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

BigInt stirling2(int n, int k) {
  if (n < 0 || k < 0) throw DomainError("stirling2: negative argument");
  std::vector<BigInt> row(static_cast<std::size_t>(k + 1), 0);
  row[0] = 1;  // S(0,0)
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) row[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j - 1)] + j * row[static_cast<std::size_t>(j)];
    row[0] = 0;
  }
  return row[static_cast<std::size_t>(k)];
}

namespace {

BigInt sign(int e) { return (e % 2 == 0) ? BigInt(1) : BigInt(-1); }

BigInt f_recurrence(int m, int n) {
  // table[i][j] = f(i, j) for i <= m, j <= n
  std::vector<std::vector<BigInt>> t(static_cast<std::size_t>(m + 1), std::vector<BigInt>(static_cast<std::size_t>(n + 1), 0));
  for (int j = 1; j <= n; ++j) {
    for (int i = 1; i <= std::min(m, j); ++i) {
      BigInt& v = t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (i == 1) {
        v = 0;
      } else if (i == j) {
        v = factorial(j) - 1;
      } else {
        v = i * t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
            (i - 1) * t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)];
      }
    }
  }
  return t[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)];
}

BigInt f_closed(int m, int n) {
  BigInt sum = 0;
  for (int k = 1; k <= m - 1; ++k) sum += sign(m + k + 1) * binomial(m, k + 1) * boost::multiprecision::pow(BigInt(k), static_cast<unsigned>(n));
  return sum;
}

BigInt f_stirling(int m, int n) {
  BigInt sum = 0;
  for (int k = m; k <= n; ++k) sum += sign(k) * stirling2(k - 1, m - 1);
  return sign(m + n + 1) + factorial(m) * sign(n) * sum;
}

}  // namespace

BigInt f_wedge(int m, int n, WedgeMethod method) {
  if (m < 1 || n < 1) throw DomainError("f_wedge: need m >= 1 and n >= 1");
  if (m > n) return 0;
  switch (method) {
    case WedgeMethod::recurrence: return f_recurrence(m, n);
    case WedgeMethod::closed: return f_closed(m, n);
    case WedgeMethod::stirling: return f_stirling(m, n);
  }
  throw InternalError("f_wedge: unknown method");
}

BigInt chi_hom(int m, int n) {
  if (m < 1 || n < 1) throw DomainError("chi_hom: need m >= 1 and n >= 1");
  if (m > n) return 0;
  std::vector<std::vector<BigInt>> t(static_cast<std::size_t>(m + 1), std::vector<BigInt>(static_cast<std::size_t>(n + 1), 0));
  for (int j = 1; j <= n; ++j) {
    for (int i = 1; i <= std::min(m, j); ++i) {
      BigInt& v = t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (i == 1) {
        v = 1;
      } else if (i == j) {
        v = factorial(j);
      } else {
        v = i * t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] -
            (i - 1) * t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)];
      }
    }
  }
  return t[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)];
}

bool verify_generating_identity(int m, int upto) {
  if (m < 1 || upto < 0) throw DomainError("verify_generating_identity: need m >= 1, upto >= 0");
  const auto len = static_cast<std::size_t>(upto + 1);
  // SF_{m-1} = x^{m-1} / ((1-x)(1-2x)...(1-(m-1)x)), one division at a time
  std::vector<BigInt> sf(len, 0);
  if (m - 1 <= upto) sf[static_cast<std::size_t>(m - 1)] = 1;
  for (int j = 1; j <= m - 1; ++j) {
    for (std::size_t i = 1; i < len; ++i) sf[i] += j * sf[i - 1];
  }
  // numerator m! x SF_{m-1} - x^m
  const BigInt mf = factorial(m);
  std::vector<BigInt> num(len, 0);
  for (std::size_t i = 1; i < len; ++i) num[i] = mf * sf[i - 1];
  if (m <= upto) num[static_cast<std::size_t>(m)] -= 1;
  // divide by 1 + x
  std::vector<BigInt> lhs(len, 0);
  for (std::size_t i = 0; i < len; ++i) lhs[i] = num[i] - (i > 0 ? lhs[i - 1] : BigInt(0));
  for (int n = 0; n <= upto; ++n) {
    const BigInt expected = n == 0 ? BigInt(0) : f_wedge(m, n, WedgeMethod::closed);
    if (lhs[static_cast<std::size_t>(n)] != expected) return false;
  }
  return true;
}

long long cycle_components(int t) {
  if (t < 3) throw DomainError("cycle_components: need t >= 3, got " + std::to_string(t));
  if (t % 3 != 0) return (t + 1) / 3;
  return t / 3 + 5;
}

// --- M_n ------------------------------------------------------------------------

namespace {

// All 0/1 completions of a {1,0,*} label (as +masks) or 0/-1 completions of a
// {0,-1,*} label (as (1<<n)+masks).
std::vector<std::uint32_t> completions(const std::vector<int>& label, bool negative) {
  const int n = static_cast<int>(label.size());
  std::uint32_t fixed = 0;
  std::vector<int> free;
  for (int i = 0; i < n; ++i) {
    const int v = label[static_cast<std::size_t>(i)];
    if (v == kStar) free.push_back(i);
    else if (v != 0) fixed |= 1U << i;
  }
  std::vector<std::uint32_t> out;
  for (std::uint32_t bits = 0; bits < (1U << free.size()); ++bits) {
    std::uint32_t mask = fixed;
    for (std::size_t j = 0; j < free.size(); ++j)
      if ((bits >> j) & 1U) mask |= 1U << free[j];
    out.push_back(negative ? (1U << n) + mask : mask);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int count(const std::vector<int>& label, int value) {
  return static_cast<int>(std::count(label.begin(), label.end(), value));
}

}  // namespace

MnFacePoset mn_face_poset(int n) {
  if (n < 1 || n > 6) throw DomainError("mn_face_poset: need 1 <= n <= 6");
  MnFacePoset out;
  out.n = n;
  int total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  const int digits[3] = {1, 0, kStar};
  for (int code = 0; code < total; ++code) {
    std::vector<int> base(static_cast<std::size_t>(n));
    int c = code;
    for (int i = 0; i < n; ++i, c /= 3) base[static_cast<std::size_t>(i)] = digits[c % 3];
    if (count(base, 1) >= 1) {
      out.faces.push_back({MnFace::Kind::star_plus, base, count(base, kStar), completions(base, false)});
      std::vector<int> neg = base;
      for (int& v : neg)
        if (v == 1) v = -1;
      out.faces.push_back({MnFace::Kind::star_minus, neg, count(neg, kStar), completions(neg, true)});
      if (count(base, 0) >= 1) {
        // A = ones, B = zeros; the lower half is 0 on A and -1 on B
        std::vector<int> lower = base;
        for (int& v : lower) {
          if (v == 1) v = 0;
          else if (v == 0) v = -1;
        }
        auto verts = completions(base, false);
        auto more = completions(lower, true);
        verts.insert(verts.end(), more.begin(), more.end());
        std::sort(verts.begin(), verts.end());
        out.faces.push_back({MnFace::Kind::middle, base, n - count(base, 1) - count(base, 0) + 1, std::move(verts)});
      }
    }
  }
  std::sort(out.faces.begin(), out.faces.end(), [](const MnFace& a, const MnFace& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertices < b.vertices;
  });

  std::vector<int> dims;
  std::vector<std::vector<ElementId>> covers(out.faces.size());
  for (std::size_t i = 0; i < out.faces.size(); ++i) {
    dims.push_back(out.faces[i].dim);
    for (std::size_t j = 0; j < out.faces.size(); ++j) {
      if (out.faces[j].dim != out.faces[i].dim - 1) continue;
      const auto& big = out.faces[i].vertices;
      const auto& small = out.faces[j].vertices;
      if (std::includes(big.begin(), big.end(), small.begin(), small.end())) covers[i].push_back(static_cast<ElementId>(j));
    }
  }
  out.poset = CellPoset(std::move(dims), std::move(covers), Provenance::polytope);
  auto faces = std::make_shared<const std::vector<MnFace>>(out.faces);
  out.poset.set_order_oracle([faces](ElementId a, ElementId b) {
    const auto& va = (*faces)[a].vertices;
    const auto& vb = (*faces)[b].vertices;
    return std::includes(vb.begin(), vb.end(), va.begin(), va.end());
  });

  std::map<std::vector<std::uint32_t>, ElementId> by_vertices;
  for (std::size_t i = 0; i < out.faces.size(); ++i) by_vertices[out.faces[i].vertices] = static_cast<ElementId>(i);
  if (by_vertices.size() != out.faces.size()) throw InternalError("mn_face_poset: two labels give the same face");
  const std::uint32_t half = 1U << n;
  for (const auto& face : out.faces) {
    std::vector<std::uint32_t> neg;
    for (std::uint32_t v : face.vertices) neg.push_back(v >= half ? v - half : v + half);
    std::sort(neg.begin(), neg.end());
    out.central_symmetry.push_back(by_vertices.at(neg));
  }
  return out;
}

std::pair<VertexSet, VertexSet> MnFacePoset::rho(ElementId x) const {
  const MnFace& face = faces.at(x);
  VertexSet ones;
  VertexSet zeros;
  VertexSet minus;
  for (int i = 0; i < n; ++i) {
    const int v = face.label[static_cast<std::size_t>(i)];
    if (v == 1) ones = ones.with(i);
    if (v == 0) zeros = zeros.with(i);
    if (v == -1) minus = minus.with(i);
  }
  switch (face.kind) {
    case MnFace::Kind::star_plus: return {ones, zeros.with(n)};
    case MnFace::Kind::star_minus: return {zeros.with(n), minus};
    case MnFace::Kind::middle: return {ones, zeros};
  }
  throw InternalError("rho: unknown face kind");
}

}  // namespace homtopo
