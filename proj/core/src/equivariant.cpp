#include "homtopo/equivariant.hpp"

#include <algorithm>
#include <string>

#include "homtopo/errors.hpp"

namespace homtopo {

Involution::Involution(std::vector<std::uint32_t> perm) : perm_(std::move(perm)) {
  for (std::uint32_t x = 0; x < perm_.size(); ++x) {
    if (perm_[x] >= perm_.size() || perm_[perm_[x]] != x) {
      throw DomainError("involution: element " + std::to_string(x) + " is not sent back to itself");
    }
    if (!fixed_ && perm_[x] == x) fixed_ = x;
  }
}

Involution Involution::on_graph(const Graph& g, GraphMap gamma) {
  if (gamma.size() != static_cast<std::size_t>(g.order()) || !is_automorphism(g, gamma)) {
    throw DomainError("involution: map is not a graph automorphism");
  }
  return Involution(std::vector<std::uint32_t>(gamma.begin(), gamma.end()));
}

Involution Involution::on_poset(const CellPoset& p, std::vector<ElementId> perm) {
  if (perm.size() != p.size()) throw DomainError("involution: permutation has the wrong size");
  Involution out(std::move(perm));
  for (ElementId x = 0; x < p.size(); ++x) {
    const ElementId y = out(x);
    if (p.dim(x) != p.dim(y)) throw DomainError("involution: element " + std::to_string(x) + " changes dimension");
    std::vector<ElementId> image;
    for (ElementId f : p.facets(x)) image.push_back(out(f));
    std::sort(image.begin(), image.end());
    auto fy = p.facets(y);
    if (!std::equal(image.begin(), image.end(), fy.begin(), fy.end())) {
      throw DomainError("involution: element " + std::to_string(x) + " does not keep its faces");
    }
  }
  return out;
}

std::size_t Involution::orbit_count() const {
  std::size_t n = 0;
  for (std::uint32_t x = 0; x < perm_.size(); ++x)
    if (perm_[x] >= x) ++n;
  return n;
}

Involution induced_involution(const HomComplex& c, const GraphMap& gamma) {
  const Involution on_g = Involution::on_graph(c.source(), gamma);
  std::vector<ElementId> perm(c.size());
  MultiHomCell img(c.width());
  for (CellId id = 0; id < c.size(); ++id) {
    auto cell = c.cell(id);
    for (std::size_t x = 0; x < img.size(); ++x) img[x] = cell[on_g(static_cast<std::uint32_t>(x))];
    auto t = c.find(img);
    if (!t) throw InternalError("induced_involution: image is not a cell");
    perm[id] = *t;
  }
  return Involution::on_poset(c.face_poset(), std::move(perm));
}

GraphMap swap01(int m) {
  if (m < 2) throw DomainError("swap01: need at least two vertices");
  GraphMap gamma(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) gamma[static_cast<std::size_t>(i)] = i;
  std::swap(gamma[0], gamma[1]);
  return gamma;
}

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

QuotientComplex quotient(const CellPoset& x, const Involution& a, std::uint64_t seed, std::size_t budget) {
  if (a.size() != x.size()) throw DomainError("quotient: involution does not act on this poset");
  if (!a.is_free()) {
    throw DomainError("quotient: action is not free, element " + std::to_string(*a.fixed_point()) + " is fixed");
  }
  const SimplicialComplex oc = order_complex(x, budget);
  const auto& label = oc.vertex_labels();
  std::vector<std::uint32_t> number(x.size());
  for (std::uint32_t v = 0; v < label.size(); ++v) number[label[v]] = v;

  QuotientComplex q;
  q.sheet.assign(x.size(), 0);
  for (ElementId e = 0; e < x.size(); ++e) {
    const ElementId lo = std::min(e, a(e));
    const ElementId hi = std::max(e, a(e));
    const bool flip = seed != 0 && (mix(seed ^ lo) & 1U);
    q.sheet[e] = (e == (flip ? hi : lo)) ? 0 : 1;
  }

  std::vector<std::uint32_t> orbit_index(oc.size());
  const int top = oc.dimension();
  q.lifts.resize(static_cast<std::size_t>(top + 1));
  for (std::size_t i = 0; i < oc.size(); ++i) {
    const Simplex& s = oc.simplex(i);
    Simplex image;
    for (std::uint32_t v : s) image.push_back(number[a(label[v])]);
    std::sort(image.begin(), image.end());
    const std::size_t partner = *oc.index_of(image);
    if (partner < i) {
      orbit_index[i] = orbit_index[partner];
      continue;
    }
    auto& level = q.lifts[s.size() - 1];
    orbit_index[i] = static_cast<std::uint32_t>(level.size());
    Simplex lift;
    for (std::uint32_t v : s) lift.push_back(label[v]);
    level.push_back(std::move(lift));
  }

  q.faces.resize(q.lifts.size());
  for (std::size_t k = 1; k < q.lifts.size(); ++k) {
    for (const Simplex& lift : q.lifts[k]) {
      Simplex s;
      for (std::uint32_t e : lift) s.push_back(number[e]);
      std::vector<std::uint32_t> faces;
      for (std::size_t j = 0; j < s.size(); ++j) {
        Simplex f = s;
        f.erase(f.begin() + static_cast<std::ptrdiff_t>(j));
        faces.push_back(orbit_index[*oc.index_of(f)]);
      }
      q.faces[k].push_back(std::move(faces));
    }
  }
  if (q.lifts.size() > 1) {
    for (const Simplex& lift : q.lifts[1]) q.w.push_back(q.sheet[lift[0]] ^ q.sheet[lift[1]]);
  }
  return q;
}

Gf2ChainComplex quotient_chain_complex(const QuotientComplex& q) {
  std::vector<std::size_t> cells;
  std::vector<Gf2Matrix> boundaries(q.lifts.size());
  for (const auto& level : q.lifts) cells.push_back(level.size());
  for (std::size_t k = 1; k < q.lifts.size(); ++k) {
    std::vector<Gf2Column> cols;
    for (const auto& f : q.faces[k]) cols.push_back(gf2_from_multiset(f));
    boundaries[k] = Gf2Matrix(cells[k - 1], std::move(cols));
  }
  Gf2ChainComplex c(std::move(cells), std::move(boundaries));
  c.verify();
  return c;
}

BettiProfile quotient_betti(const QuotientComplex& q) { return betti_gf2(quotient_chain_complex(q)); }

Gf2Column cup_power(const QuotientComplex& q, int k) {
  Gf2Column out;
  if (k < 0 || k > q.dimension()) return out;
  const auto& level = q.lifts[static_cast<std::size_t>(k)];
  for (std::uint32_t i = 0; i < level.size(); ++i) {
    const Simplex& c = level[i];
    bool one = true;
    for (std::size_t j = 1; j < c.size() && one; ++j) one = (q.sheet[c[j - 1]] ^ q.sheet[c[j]]) != 0;
    if (one) out.push_back(i);
  }
  return out;
}

Gf2Column coboundary(const QuotientComplex& q, int k, const Gf2Column& cochain) {
  Gf2Column out;
  if (k + 1 > q.dimension()) return out;
  const auto& faces = q.faces[static_cast<std::size_t>(k + 1)];
  for (std::uint32_t i = 0; i < faces.size(); ++i) {
    bool value = false;
    for (std::uint32_t f : faces[i]) value ^= std::binary_search(cochain.begin(), cochain.end(), f);
    if (value) out.push_back(i);
  }
  return out;
}

bool is_coboundary(const QuotientComplex& q, int k, const Gf2Column& cochain) {
  if (cochain.empty()) return true;
  if (k <= 0 || k > q.dimension()) return false;
  const Gf2Matrix delta = quotient_chain_complex(q).boundary(k).transpose();
  return Gf2Reduction(delta).in_column_space(cochain);
}

int sw_height(const QuotientComplex& q, int cap) {
  if (q.dimension() < 0) return -1;
  const int limit = std::min(cap, q.dimension());
  for (int k = 1; k <= limit; ++k) {
    if (is_coboundary(q, k, cup_power(q, k))) return k - 1;
  }
  return std::max(limit, 0);
}

int sw_height(const CellPoset& x, const Involution& a, int cap, std::uint64_t seed) {
  return sw_height(quotient(x, a, seed), cap);
}

ColoringBound coloring_bound(const Graph& g, int m, int cap, std::size_t budget) {
  if (g.has_loops()) throw DomainError("coloring_bound: graph has a loop");
  if (m < 2) throw DomainError("coloring_bound: need m >= 2");
  HomBuildOptions opts;
  opts.max_cells = budget;
  const HomComplex hom = HomComplex::build(complete_graph(m), g, opts);
  ColoringBound out;
  if (hom.empty()) {
    // no K_m in g: w^0 already vanishes, which certifies only m - 1 colours
    out.free = true;
    out.bound = m - 1;
    return out;
  }
  const Involution a = induced_involution(hom, swap01(m));
  out.free = a.is_free();
  const QuotientComplex q = quotient(hom.face_poset(), a, 0, budget);
  out.quotient_betti = quotient_betti(q).betti;
  out.sw_height = sw_height(q, cap);
  out.bound = out.sw_height + m;
  return out;
}

}  // namespace homtopo
