#include "homtopo/morse.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "homtopo/errors.hpp"

namespace homtopo {

void validate_matching(const CellPoset& p, const PartialMatching& m) {
  std::vector<bool> used(p.size(), false);
  for (const auto& [x, y] : m.pairs) {
    const std::string pair = "(" + std::to_string(x) + ", " + std::to_string(y) + ")";
    if (x >= p.size() || y >= p.size()) throw DomainError("matching pair " + pair + " is out of range");
    auto f = p.facets(y);
    if (!std::binary_search(f.begin(), f.end(), x)) {
      throw DomainError("matching pair " + pair + ": the partner does not cover the element");
    }
    if (used[x] || used[y]) throw DomainError("matching pair " + pair + " reuses an element");
    used[x] = used[y] = true;
  }
}

bool is_acyclic(const CellPoset& p, const PartialMatching& m) {
  validate_matching(p, m);
  std::vector<std::int64_t> partner_up(p.size(), -1);
  for (const auto& [x, y] : m.pairs) partner_up[x] = y;

  std::vector<std::vector<ElementId>> out(p.size());
  for (ElementId x = 0; x < p.size(); ++x) {
    for (ElementId y : p.facets(x)) {
      if (partner_up[y] == static_cast<std::int64_t>(x)) {
        out[y].push_back(x);
      } else {
        out[x].push_back(y);
      }
    }
  }
  // iterative three-colour depth-first search
  enum : char { white, grey, black };
  std::vector<char> colour(p.size(), white);
  std::vector<std::pair<ElementId, std::size_t>> stack;
  for (ElementId s = 0; s < p.size(); ++s) {
    if (colour[s] != white) continue;
    stack.emplace_back(s, 0);
    colour[s] = grey;
    while (!stack.empty()) {
      auto& [x, i] = stack.back();
      if (i < out[x].size()) {
        const ElementId y = out[x][i++];
        if (colour[y] == grey) return false;
        if (colour[y] == white) {
          colour[y] = grey;
          stack.emplace_back(y, 0);
        }
      } else {
        colour[x] = black;
        stack.pop_back();
      }
    }
  }
  return true;
}

std::vector<ElementId> critical_cells(const CellPoset& p, const PartialMatching& m) {
  std::vector<bool> used(p.size(), false);
  for (const auto& [x, y] : m.pairs) used[x] = used[y] = true;
  std::vector<ElementId> out;
  for (ElementId x = 0; x < p.size(); ++x)
    if (!used[x]) out.push_back(x);
  return out;
}

KmnMatching kmn_matching(int m, int n, std::size_t budget) {
  if (m < 2 || m > n) throw DomainError("kmn_matching: need 2 <= m <= n");
  HomBuildOptions opts;
  opts.max_cells = budget;
  KmnMatching out{HomComplex::build(complete_graph(m), complete_graph(n), opts), {}, {}, {}, {}};
  const HomComplex& hom = out.hom;
  const int top = n - 1;

  std::vector<std::int64_t> local(hom.size(), -1);
  for (CellId id = 0; id < hom.size(); ++id) {
    auto c = hom.cell(id);
    bool in_a1 = true;
    for (std::size_t j = 1; j < c.size(); ++j)
      if (c[j].contains(top)) in_a1 = false;
    if (!in_a1) continue;
    local[id] = static_cast<std::int64_t>(out.a1_cells.size());
    out.a1_cells.push_back(id);
  }
  out.a1 = subcomplex(hom.face_poset(), out.a1_cells);

  for (std::size_t i = 0; i < out.a1_cells.size(); ++i) {
    MultiHomCell c = hom.cell_copy(out.a1_cells[i]);
    if (c[0] == VertexSet::single(top)) {
      out.critical.push_back(static_cast<ElementId>(i));
      continue;
    }
    if (c[0].contains(top)) continue;  // matched from below
    c[0] = c[0].with(top);
    auto up = hom.find(c);
    if (!up || local[*up] < 0) throw InternalError("kmn_matching: partner cell missing from A_1");
    out.matching.pairs.emplace_back(static_cast<ElementId>(i), static_cast<ElementId>(local[*up]));
  }
  return out;
}

KmnReport verify_kmn(int m, int n, std::size_t budget) {
  const KmnMatching km = kmn_matching(m, n, budget);
  KmnReport r;
  r.a1_cells = km.a1.size();
  r.matched_pairs = km.matching.pairs.size();
  r.critical = km.critical.size();
  r.acyclic = is_acyclic(km.a1, km.matching);
  r.a1_betti = betti_gf2(km.a1);

  HomBuildOptions opts;
  opts.max_cells = budget;
  const HomComplex smaller = HomComplex::build(complete_graph(m - 1), complete_graph(n - 1), opts);
  try {
    const CellPoset crit = subcomplex(km.a1, km.critical);
    r.critical_betti = betti_gf2(crit);
    std::vector<ElementId> f;
    bool mapped = crit.size() == smaller.size();
    for (std::size_t i = 0; i < km.critical.size() && mapped; ++i) {
      auto c = km.hom.cell(km.a1_cells[km.critical[i]]);
      MultiHomCell rest(c.begin() + 1, c.end());
      auto id = smaller.find(rest);
      if (!id) {
        mapped = false;
      } else {
        f.push_back(*id);
      }
    }
    r.critical_isomorphic = mapped && is_poset_isomorphism(crit, smaller.face_poset(), f);
  } catch (const DomainError&) {
    r.critical_isomorphic = false;  // critical cells are not down-closed
  }
  return r;
}

bool is_order_preserving(const PosetMap& f) {
  if (f.image.size() != f.source.size()) return false;
  for (ElementId x = 0; x < f.source.size(); ++x) {
    if (f.image[x] >= f.target.size()) return false;
    for (ElementId y : f.source.facets(x))
      if (!f.target.leq(f.image[y], f.image[x])) return false;
  }
  return true;
}

namespace {

std::vector<ElementId> down_set(const CellPoset& p, ElementId top) {
  std::vector<ElementId> out{top};
  std::vector<bool> seen(p.size(), false);
  seen[top] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (ElementId y : p.facets(out[i])) {
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  }
  return out;
}

std::optional<ElementId> greatest(const CellPoset& p, const std::vector<ElementId>& elements) {
  if (elements.empty()) return std::nullopt;
  ElementId best = elements[0];
  for (ElementId x : elements)
    if (p.dim(x) > p.dim(best)) best = x;
  for (ElementId x : elements)
    if (!p.leq(x, best)) return std::nullopt;
  return best;
}

}  // namespace

QuillenResult check_quillen_B(const PosetMap& f) {
  if (!is_order_preserving(f)) throw DomainError("check_quillen_B: map is not order-preserving");
  for (ElementId p = 0; p < f.source.size(); ++p) {
    std::map<ElementId, std::vector<ElementId>> by_image;
    for (ElementId x : down_set(f.source, p)) by_image[f.image[x]].push_back(x);
    for (ElementId q : down_set(f.target, f.image[p])) {
      auto it = by_image.find(q);
      if (it == by_image.end() || !greatest(f.source, it->second)) {
        return QuillenResult{false, std::make_pair(p, q)};
      }
    }
  }
  return {};
}

QuillenResult check_quillen_B_op(const PosetMap& f) {
  return check_quillen_B(PosetMap{opposite(f.source), opposite(f.target), f.image});
}

std::vector<FiberReport> check_quillen_A_proxy(const PosetMap& f) {
  std::vector<std::vector<ElementId>> fibers(f.target.size());
  for (ElementId x = 0; x < f.source.size(); ++x) fibers[f.image[x]].push_back(x);
  std::vector<FiberReport> out;
  for (ElementId q = 0; q < f.target.size(); ++q) {
    FiberReport r;
    r.q = q;
    r.size = fibers[q].size();
    r.has_maximum = greatest(f.source, fibers[q]).has_value();
    if (!r.has_maximum) r.betti = betti_gf2(order_complex(induced_subposet(f.source, fibers[q])));
    out.push_back(std::move(r));
  }
  return out;
}

bool all_fibers_coned(const std::vector<FiberReport>& report) {
  return std::all_of(report.begin(), report.end(), [](const FiberReport& r) { return r.has_maximum; });
}

PosetMap neighborhood_map(const Graph& g, std::size_t budget) {
  HomBuildOptions opts;
  opts.max_cells = budget;
  const HomComplex hom = HomComplex::build(complete_graph(2), g, opts);
  const SimplicialComplex nc = neighborhood_complex(g);
  PosetMap f{hom.face_poset(), nc.face_poset(), {}};
  for (CellId id = 0; id < hom.size(); ++id) {
    auto a = hom.cell(id)[0].to_vector();
    auto idx = nc.index_of(Simplex(a.begin(), a.end()));
    if (!idx) throw InternalError("neighborhood_map: eta(0) is not a simplex of N(G)");
    f.image.push_back(static_cast<ElementId>(*idx));
  }
  return f;
}

}  // namespace homtopo
