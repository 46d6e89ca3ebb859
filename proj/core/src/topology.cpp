#include "homtopo/topology.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <unordered_set>

#include "homtopo/errors.hpp"

namespace homtopo {

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::generic: return "generic";
    case Provenance::hom_complex: return "hom-complex";
    case Provenance::simplicial: return "simplicial";
    case Provenance::order_complex: return "order-complex";
    case Provenance::quotient: return "quotient";
    case Provenance::polytope: return "polytope";
    case Provenance::opposite: return "opposite";
  }
  return "unknown";
}

// --- CellPoset ---------------------------------------------------------------

CellPoset::CellPoset(std::vector<int> dims, std::vector<std::vector<ElementId>> covers,
                     Provenance provenance)
    : dims_(std::move(dims)), covers_(std::move(covers)), provenance_(provenance) {
  if (dims_.size() != covers_.size()) throw DomainError("CellPoset: dims/covers size mismatch");
  for (std::size_t x = 0; x < covers_.size(); ++x) {
    auto& c = covers_[x];
    std::sort(c.begin(), c.end());
    if (std::adjacent_find(c.begin(), c.end()) != c.end()) {
      throw DomainError("CellPoset: duplicate cover of element " + std::to_string(x));
    }
    for (ElementId y : c) {
      if (y >= dims_.size()) throw DomainError("CellPoset: cover id out of range");
      if (dims_[y] >= dims_[x]) {
        throw DomainError("CellPoset: cover " + std::to_string(y) + " of " + std::to_string(x) +
                          " does not drop dimension");
      }
    }
    dimension_ = std::max(dimension_, dims_[x]);
  }
}

std::vector<std::vector<ElementId>> CellPoset::cofacets() const {
  std::vector<std::vector<ElementId>> up(size());
  for (ElementId x = 0; x < size(); ++x)
    for (ElementId y : covers_[x]) up[y].push_back(x);
  return up;
}

bool CellPoset::is_graded_by_dimension() const {
  for (ElementId x = 0; x < size(); ++x)
    for (ElementId y : covers_[x])
      if (dims_[y] != dims_[x] - 1) return false;
  return true;
}

void CellPoset::set_order_oracle(std::function<bool(ElementId, ElementId)> leq) {
  oracle_ = std::move(leq);
}

bool CellPoset::leq(ElementId a, ElementId b) const {
  if (a == b) return true;
  if (oracle_) return oracle_(a, b);
  if (dims_[a] >= dims_[b]) return false;
  std::vector<ElementId> stack{b};
  std::unordered_set<ElementId> seen{b};
  while (!stack.empty()) {
    const ElementId x = stack.back();
    stack.pop_back();
    for (ElementId y : covers_[x]) {
      if (y == a) return true;
      if (dims_[y] > dims_[a] && seen.insert(y).second) stack.push_back(y);
    }
  }
  return false;
}

std::vector<std::size_t> CellPoset::f_vector() const {
  std::vector<std::size_t> f(static_cast<std::size_t>(dimension_ + 1), 0);
  for (int d : dims_)
    if (d >= 0) ++f[static_cast<std::size_t>(d)];
  return f;
}

long long CellPoset::euler_characteristic() const {
  long long chi = 0;
  const auto f = f_vector();
  for (std::size_t k = 0; k < f.size(); ++k) chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(f[k]);
  return chi;
}

CellPoset opposite(const CellPoset& p) {
  std::vector<int> dims(p.size());
  for (ElementId x = 0; x < p.size(); ++x) dims[x] = p.dimension() - p.dim(x);
  CellPoset out(std::move(dims), p.cofacets(), Provenance::opposite);
  if (p.has_order_oracle()) {
    auto source = std::make_shared<const CellPoset>(p);
    out.set_order_oracle([source](ElementId a, ElementId b) { return source->leq(b, a); });
  }
  return out;
}

CellPoset subcomplex(const CellPoset& p, std::span<const ElementId> elements) {
  std::vector<std::int64_t> local(p.size(), -1);
  for (std::size_t i = 0; i < elements.size(); ++i) local[elements[i]] = static_cast<std::int64_t>(i);
  std::vector<int> dims;
  std::vector<std::vector<ElementId>> covers;
  for (ElementId x : elements) {
    dims.push_back(p.dim(x));
    std::vector<ElementId> c;
    for (ElementId y : p.facets(x)) {
      if (local[y] < 0) throw DomainError("subcomplex: element set is not down-closed");
      c.push_back(static_cast<ElementId>(local[y]));
    }
    covers.push_back(std::move(c));
  }
  return CellPoset(std::move(dims), std::move(covers), p.provenance());
}

CellPoset induced_subposet(const CellPoset& p, std::span<const ElementId> elements) {
  const std::size_t k = elements.size();
  std::vector<std::vector<bool>> less(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j && p.leq(elements[i], elements[j])) less[i][j] = true;
  std::vector<int> dims;
  std::vector<std::vector<ElementId>> covers(k);
  for (std::size_t j = 0; j < k; ++j) {
    dims.push_back(p.dim(elements[j]));
    for (std::size_t i = 0; i < k; ++i) {
      if (!less[i][j]) continue;
      bool covered = true;
      for (std::size_t m = 0; m < k && covered; ++m)
        if (less[i][m] && less[m][j]) covered = false;
      if (covered) covers[j].push_back(static_cast<ElementId>(i));
    }
  }
  return CellPoset(std::move(dims), std::move(covers), p.provenance());
}

std::vector<std::vector<ElementId>> strict_up_sets(const CellPoset& p) {
  const auto up_covers = p.cofacets();
  std::vector<ElementId> order(p.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](ElementId a, ElementId b) { return p.dim(a) > p.dim(b); });
  std::vector<std::vector<ElementId>> up(p.size());
  for (ElementId x : order) {
    std::vector<ElementId> acc;
    for (ElementId c : up_covers[x]) {
      acc.push_back(c);
      acc.insert(acc.end(), up[c].begin(), up[c].end());
    }
    std::sort(acc.begin(), acc.end());
    acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
    up[x] = std::move(acc);
  }
  return up;
}

// --- SimplicialComplex -------------------------------------------------------

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ s.size();
  for (std::uint32_t v : s) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

namespace {

bool simplex_less(const Simplex& a, const Simplex& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

void SimplicialComplex::canonicalize() {
  std::sort(simplices_.begin(), simplices_.end(), simplex_less);
  index_.clear();
  index_.reserve(simplices_.size());
  for (std::size_t i = 0; i < simplices_.size(); ++i) {
    if (!index_.emplace(simplices_[i], i).second) throw DomainError("SimplicialComplex: duplicate simplex");
  }
}

SimplicialComplex SimplicialComplex::from_maximal(std::vector<Simplex> generators, std::size_t budget) {
  std::unordered_set<Simplex, SimplexHash> all;
  for (auto& g : generators) {
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    if (g.empty()) continue;
    if (g.size() > 40) throw ResourceError("simplex with more than 40 vertices", all.size());
    const std::uint64_t subsets = std::uint64_t{1} << g.size();
    for (std::uint64_t mask = 1; mask < subsets; ++mask) {
      Simplex s;
      for (std::size_t i = 0; i < g.size(); ++i)
        if ((mask >> i) & 1U) s.push_back(g[i]);
      all.insert(std::move(s));
      if (all.size() > budget) {
        throw ResourceError("simplicial closure exceeded budget of " + std::to_string(budget), all.size());
      }
    }
  }
  SimplicialComplex out;
  out.simplices_.assign(all.begin(), all.end());
  out.canonicalize();
  return out;
}

SimplicialComplex SimplicialComplex::from_simplices(std::vector<Simplex> simplices) {
  SimplicialComplex out;
  for (auto& s : simplices) {
    std::sort(s.begin(), s.end());
    if (s.empty() || std::adjacent_find(s.begin(), s.end()) != s.end()) {
      throw DomainError("SimplicialComplex: empty simplex or repeated vertex");
    }
  }
  out.simplices_ = std::move(simplices);
  out.canonicalize();
  for (const auto& s : out.simplices_) {
    if (s.size() < 2) continue;
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex f = s;
      f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
      if (!out.contains(f)) throw DomainError("SimplicialComplex: not closed under faces");
    }
  }
  return out;
}

int SimplicialComplex::dimension() const {
  return simplices_.empty() ? -1 : static_cast<int>(simplices_.back().size()) - 1;
}

std::vector<std::uint32_t> SimplicialComplex::vertices() const {
  std::vector<std::uint32_t> out;
  for (const auto& s : simplices_) {
    if (s.size() != 1) break;
    out.push_back(s[0]);
  }
  return out;
}

bool SimplicialComplex::contains(const Simplex& s) const { return index_.count(s) != 0; }

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
  std::vector<bool> covered(simplices_.size(), false);
  for (const auto& s : simplices_) {
    if (s.size() < 2) continue;
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex f = s;
      f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
      covered[index_.at(f)] = true;
    }
  }
  std::vector<Simplex> out;
  for (std::size_t i = 0; i < simplices_.size(); ++i)
    if (!covered[i]) out.push_back(simplices_[i]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f(static_cast<std::size_t>(dimension() + 1), 0);
  for (const auto& s : simplices_) ++f[s.size() - 1];
  return f;
}

CellPoset SimplicialComplex::face_poset() const {
  std::vector<int> dims(simplices_.size());
  std::vector<std::vector<ElementId>> covers(simplices_.size());
  for (std::size_t i = 0; i < simplices_.size(); ++i) {
    const Simplex& s = simplices_[i];
    dims[i] = static_cast<int>(s.size()) - 1;
    if (s.size() < 2) continue;
    for (std::size_t j = 0; j < s.size(); ++j) {
      Simplex f = s;
      f.erase(f.begin() + static_cast<std::ptrdiff_t>(j));
      covers[i].push_back(static_cast<ElementId>(index_.at(f)));
    }
  }
  CellPoset p(std::move(dims), std::move(covers), Provenance::simplicial);
  auto simplices = std::make_shared<const std::vector<Simplex>>(simplices_);
  p.set_order_oracle([simplices](ElementId a, ElementId b) {
    const Simplex& sa = (*simplices)[a];
    const Simplex& sb = (*simplices)[b];
    return std::includes(sb.begin(), sb.end(), sa.begin(), sa.end());
  });
  return p;
}

SimplicialComplex order_complex(const CellPoset& p, std::size_t budget) {
  std::vector<ElementId> by_grade(p.size());
  std::iota(by_grade.begin(), by_grade.end(), 0);
  std::stable_sort(by_grade.begin(), by_grade.end(),
                   [&](ElementId a, ElementId b) { return p.dim(a) < p.dim(b); });
  std::vector<std::uint32_t> number(p.size());
  for (std::size_t i = 0; i < by_grade.size(); ++i) number[by_grade[i]] = static_cast<std::uint32_t>(i);

  const auto up = strict_up_sets(p);
  std::vector<Simplex> chains;
  Simplex chain;
  std::function<void(ElementId)> extend = [&](ElementId top) {
    chains.push_back(chain);
    if (chains.size() > budget) {
      throw ResourceError("order complex exceeded budget of " + std::to_string(budget) + " chains",
                          chains.size());
    }
    for (ElementId y : up[top]) {
      chain.push_back(number[y]);
      extend(y);
      chain.pop_back();
    }
  };
  for (ElementId x : by_grade) {
    chain.assign(1, number[x]);
    extend(x);
  }
  SimplicialComplex result = SimplicialComplex::from_simplices(std::move(chains));
  result.set_vertex_labels(std::vector<std::uint32_t>(by_grade.begin(), by_grade.end()));
  return result;
}

// --- chain complexes ---------------------------------------------------------

Gf2ChainComplex::Gf2ChainComplex(std::vector<std::size_t> cells_per_dim, std::vector<Gf2Matrix> boundaries)
    : cells_(std::move(cells_per_dim)), boundaries_(std::move(boundaries)) {
  if (boundaries_.size() != cells_.size()) {
    throw InternalError("Gf2ChainComplex: need one boundary slot per dimension");
  }
  for (std::size_t k = 1; k < cells_.size(); ++k) {
    if (boundaries_[k].rows() != cells_[k - 1] || boundaries_[k].cols() != cells_[k]) {
      throw InternalError("Gf2ChainComplex: boundary " + std::to_string(k) + " has wrong shape");
    }
  }
}

Gf2ChainComplex Gf2ChainComplex::from_poset(const CellPoset& p) {
  if (!p.is_graded_by_dimension()) {
    throw DomainError("betti_gf2: poset is not in regular-CW mode (a cover skips a dimension)");
  }
  const int top = p.dimension();
  std::vector<std::size_t> cells(static_cast<std::size_t>(top + 1), 0);
  std::vector<std::uint32_t> local(p.size());
  for (ElementId x = 0; x < p.size(); ++x) {
    if (p.dim(x) < 0) throw DomainError("betti_gf2: negative cell dimension");
    local[x] = static_cast<std::uint32_t>(cells[static_cast<std::size_t>(p.dim(x))]++);
  }
  std::vector<std::vector<Gf2Column>> cols(static_cast<std::size_t>(top + 1));
  for (std::size_t k = 0; k < cols.size(); ++k) cols[k].resize(cells[k]);
  for (ElementId x = 0; x < p.size(); ++x) {
    Gf2Column c;
    for (ElementId y : p.facets(x)) c.push_back(local[y]);
    std::sort(c.begin(), c.end());
    cols[static_cast<std::size_t>(p.dim(x))][local[x]] = std::move(c);
  }
  std::vector<Gf2Matrix> boundaries(cells.size());
  for (std::size_t k = 1; k < cells.size(); ++k) boundaries[k] = Gf2Matrix(cells[k - 1], std::move(cols[k]));
  Gf2ChainComplex out(std::move(cells), std::move(boundaries));
  out.verify();
  return out;
}

void Gf2ChainComplex::verify() const {
  for (std::size_t k = 2; k < cells_.size(); ++k) {
    if (!boundaries_[k - 1].multiply(boundaries_[k]).is_zero()) {
      throw InternalError("boundary does not square to zero in dimension " + std::to_string(k) +
                          " (input is not a regular CW complex)");
    }
  }
}

BettiProfile betti_gf2(const Gf2ChainComplex& c) {
  const int top = c.top_dimension();
  BettiProfile out;
  if (top < 0) return out;
  std::vector<std::size_t> rank(static_cast<std::size_t>(top + 2), 0);
  // clearing: a k-cell that is the pivot of a reduced (k+1)-boundary column
  // reduces to zero in the k-boundary, so it can be skipped
  std::vector<bool> skip;
  for (int k = top; k >= 1; --k) {
    Gf2Reduction red(c.boundary(k), skip.empty() ? nullptr : &skip);
    rank[static_cast<std::size_t>(k)] = red.rank();
    skip.assign(c.cells(k - 1), false);
    for (const auto& low : red.pivots())
      if (low) skip[*low] = true;
  }
  long long chi_cells = 0;
  long long chi_betti = 0;
  for (int k = 0; k <= top; ++k) {
    const std::size_t n = c.cells(k);
    const std::size_t b = n - rank[static_cast<std::size_t>(k)] - rank[static_cast<std::size_t>(k + 1)];
    out.betti.push_back(b);
    out.f_vector.push_back(n);
    const long long sign = (k % 2 == 0) ? 1 : -1;
    chi_cells += sign * static_cast<long long>(n);
    chi_betti += sign * static_cast<long long>(b);
  }
  if (chi_cells != chi_betti) throw InternalError("Euler characteristic mismatch between cells and Betti numbers");
  out.euler = chi_cells;
  return out;
}

BettiProfile betti_gf2(const CellPoset& p) { return betti_gf2(Gf2ChainComplex::from_poset(p)); }

BettiProfile betti_gf2(const SimplicialComplex& s) { return betti_gf2(s.face_poset()); }

std::vector<std::size_t> trimmed(std::vector<std::size_t> betti) {
  while (!betti.empty() && betti.back() == 0) betti.pop_back();
  return betti;
}

// --- components ---------------------------------------------------------------

namespace {

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::vector<std::uint32_t> component_labels(const CellPoset& p) {
  UnionFind uf(p.size());
  for (ElementId x = 0; x < p.size(); ++x) {
    if (p.dim(x) != 1) continue;
    auto f = p.facets(x);
    for (std::size_t i = 1; i < f.size(); ++i) uf.unite(f[0], f[i]);
  }
  std::vector<std::uint32_t> label(p.size(), 0);
  std::vector<ElementId> by_dim(p.size());
  std::iota(by_dim.begin(), by_dim.end(), 0);
  std::stable_sort(by_dim.begin(), by_dim.end(), [&](ElementId a, ElementId b) { return p.dim(a) < p.dim(b); });
  for (ElementId x : by_dim) {
    if (p.facets(x).empty()) {
      label[x] = uf.find(x);
    } else {
      label[x] = label[p.facets(x)[0]];
    }
  }
  return label;
}

std::size_t connected_components(const CellPoset& p) {
  const auto label = component_labels(p);
  std::unordered_set<std::uint32_t> roots;
  for (ElementId x = 0; x < p.size(); ++x)
    if (p.dim(x) == 0) roots.insert(label[x]);
  return roots.size();
}

// --- flag test -----------------------------------------------------------------

bool is_flag(const SimplicialComplex& s) {
  std::map<std::uint32_t, std::vector<std::uint32_t>> adjacency;
  for (const auto& simplex : s.simplices()) {
    if (simplex.size() == 1) adjacency[simplex[0]];
    if (simplex.size() != 2) continue;
    adjacency[simplex[0]].push_back(simplex[1]);
    adjacency[simplex[1]].push_back(simplex[0]);
  }
  for (auto& [v, nbrs] : adjacency) std::sort(nbrs.begin(), nbrs.end());
  // every clique is reached by adding one commonly-adjacent vertex to a smaller
  // clique, so checking one-vertex extensions of simplices suffices
  for (const auto& simplex : s.simplices()) {
    std::vector<std::uint32_t> common = adjacency[simplex[0]];
    for (std::size_t i = 1; i < simplex.size() && !common.empty(); ++i) {
      std::vector<std::uint32_t> next;
      const auto& nb = adjacency[simplex[i]];
      std::set_intersection(common.begin(), common.end(), nb.begin(), nb.end(), std::back_inserter(next));
      common.swap(next);
    }
    for (std::uint32_t v : common) {
      Simplex bigger = simplex;
      bigger.insert(std::upper_bound(bigger.begin(), bigger.end(), v), v);
      if (!s.contains(bigger)) return false;
    }
  }
  return true;
}

// --- poset isomorphism -----------------------------------------------------------

bool is_poset_isomorphism(const CellPoset& a, const CellPoset& b, std::span<const ElementId> f) {
  if (a.size() != b.size() || f.size() != a.size()) return false;
  std::vector<bool> hit(b.size(), false);
  for (ElementId y : f) {
    if (y >= b.size() || hit[y]) return false;
    hit[y] = true;
  }
  const auto up_a = strict_up_sets(a);
  const auto up_b = strict_up_sets(b);
  for (ElementId x = 0; x < a.size(); ++x) {
    std::vector<ElementId> image;
    image.reserve(up_a[x].size());
    for (ElementId y : up_a[x]) image.push_back(f[y]);
    std::sort(image.begin(), image.end());
    if (image != up_b[f[x]]) return false;
  }
  return true;
}

std::optional<std::vector<ElementId>> find_poset_isomorphism(const CellPoset& a, const CellPoset& b) {
  if (a.size() != b.size()) return std::nullopt;
  const std::size_t n = a.size();
  const auto up_a = a.cofacets();
  const auto up_b = b.cofacets();

  // colour refinement on the Hasse diagram, run jointly so colours are comparable
  auto initial = [](const CellPoset& p, const std::vector<std::vector<ElementId>>& up, ElementId x) {
    return std::vector<long long>{p.dim(x), static_cast<long long>(p.facets(x).size()),
                                  static_cast<long long>(up[x].size())};
  };
  std::vector<std::size_t> col_a(n);
  std::vector<std::size_t> col_b(n);
  {
    std::map<std::vector<long long>, std::size_t> ids;
    std::vector<std::vector<long long>> sa(n);
    std::vector<std::vector<long long>> sb(n);
    for (ElementId x = 0; x < n; ++x) {
      sa[x] = initial(a, up_a, x);
      sb[x] = initial(b, up_b, x);
      ids.emplace(sa[x], 0);
      ids.emplace(sb[x], 0);
    }
    std::size_t next = 0;
    for (auto& [k, v] : ids) v = next++;
    for (ElementId x = 0; x < n; ++x) {
      col_a[x] = ids[sa[x]];
      col_b[x] = ids[sb[x]];
    }
  }
  for (int round = 0; round < 4; ++round) {
    std::map<std::vector<long long>, std::size_t> ids;
    auto signature = [](const CellPoset& p, const std::vector<std::vector<ElementId>>& up,
                        const std::vector<std::size_t>& col, ElementId x) {
      std::vector<long long> down_cols;
      std::vector<long long> up_cols;
      for (ElementId y : p.facets(x)) down_cols.push_back(static_cast<long long>(col[y]));
      for (ElementId y : up[x]) up_cols.push_back(static_cast<long long>(col[y]));
      std::sort(down_cols.begin(), down_cols.end());
      std::sort(up_cols.begin(), up_cols.end());
      std::vector<long long> sig{static_cast<long long>(col[x]), -1};
      sig.insert(sig.end(), down_cols.begin(), down_cols.end());
      sig.push_back(-2);
      sig.insert(sig.end(), up_cols.begin(), up_cols.end());
      return sig;
    };
    std::vector<std::vector<long long>> sa(n);
    std::vector<std::vector<long long>> sb(n);
    for (ElementId x = 0; x < n; ++x) {
      sa[x] = signature(a, up_a, col_a, x);
      sb[x] = signature(b, up_b, col_b, x);
      ids.emplace(sa[x], 0);
      ids.emplace(sb[x], 0);
    }
    std::size_t next = 0;
    for (auto& [k, v] : ids) v = next++;
    for (ElementId x = 0; x < n; ++x) {
      col_a[x] = ids[sa[x]];
      col_b[x] = ids[sb[x]];
    }
  }
  {
    auto ca = col_a;
    auto cb = col_b;
    std::sort(ca.begin(), ca.end());
    std::sort(cb.begin(), cb.end());
    if (ca != cb) return std::nullopt;
  }

  // visit a's elements so that each has an already-visited Hasse neighbour
  std::vector<ElementId> order;
  std::vector<bool> seen(n, false);
  for (ElementId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<ElementId> queue{s};
    seen[s] = true;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const ElementId x = queue[i];
      order.push_back(x);
      auto visit = [&](ElementId y) {
        if (!seen[y]) {
          seen[y] = true;
          queue.push_back(y);
        }
      };
      for (ElementId y : a.facets(x)) visit(y);
      for (ElementId y : up_a[x]) visit(y);
    }
  }
  std::vector<std::vector<ElementId>> by_colour_b;
  {
    std::size_t max_col = 0;
    for (auto c : col_b) max_col = std::max(max_col, c);
    by_colour_b.resize(max_col + 1);
    for (ElementId y = 0; y < n; ++y) by_colour_b[col_b[y]].push_back(y);
  }

  constexpr ElementId kUnset = ~ElementId{0};
  std::vector<ElementId> f(n, kUnset);
  std::vector<ElementId> inverse(n, kUnset);
  std::size_t steps = 0;
  std::function<bool(std::size_t)> extend = [&](std::size_t depth) -> bool {
    if (depth == n) return true;
    if (++steps > 50'000'000) throw ResourceError("poset isomorphism search exceeded its step budget");
    const ElementId x = order[depth];
    for (ElementId c : by_colour_b[col_a[x]]) {
      if (inverse[c] != kUnset) continue;
      bool ok = true;
      // mapped neighbours of x must land on neighbours of c in the same direction
      for (ElementId y : a.facets(x)) {
        if (f[y] != kUnset && !std::binary_search(b.facets(c).begin(), b.facets(c).end(), f[y])) ok = false;
      }
      for (ElementId y : up_a[x]) {
        if (f[y] != kUnset && std::find(up_b[c].begin(), up_b[c].end(), f[y]) == up_b[c].end()) ok = false;
      }
      // and mapped neighbours of c must come from neighbours of x
      for (ElementId z : b.facets(c)) {
        if (inverse[z] != kUnset && !std::binary_search(a.facets(x).begin(), a.facets(x).end(), inverse[z])) ok = false;
      }
      for (ElementId z : up_b[c]) {
        if (inverse[z] != kUnset && std::find(up_a[x].begin(), up_a[x].end(), inverse[z]) == up_a[x].end()) ok = false;
      }
      if (!ok) continue;
      f[x] = c;
      inverse[c] = x;
      if (extend(depth + 1)) return true;
      f[x] = kUnset;
      inverse[c] = kUnset;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return f;
}

}  // namespace homtopo
