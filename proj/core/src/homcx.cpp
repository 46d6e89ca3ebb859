#include "homtopo/homcx.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "homtopo/errors.hpp"

namespace homtopo {

namespace {

constexpr CellId kEmpty = ~CellId{0};

std::uint64_t mix(std::uint64_t x) {
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 33;
  x *= 0xc4ceb9fe1a85ec53ULL;
  x ^= x >> 33;
  return x;
}

std::uint64_t hash_cell(CellView c) {
  std::uint64_t h = 0x84222325cbf29ce4ULL;
  for (VertexSet s : c) h = mix(h ^ s.bits()) + 0x9e3779b97f4a7c15ULL;
  return h;
}

bool lex_less(CellView a, CellView b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].bits() != b[i].bits()) return a[i].bits() < b[i].bits();
  }
  return false;
}

// Depth-first enumeration of all cells, vertices of G taken in
// degree-descending order.
class Enumerator {
 public:
  Enumerator(const Graph& g, const Graph& h, const HomBuildOptions& opts)
      : g_(g), h_(h), opts_(opts), n_(static_cast<std::size_t>(g.order())) {
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    allowed_.assign((n_ + 1) * n_, h.vertices().bits());
    current_.resize(n_);
    for (int v = 0; v < h.order(); ++v) rows_.push_back(h.neighbors(v).bits());
  }

  void run(std::vector<VertexSet>& cells, std::vector<int>& dims) {
    cells_ = &cells;
    dims_ = &dims;
    if (n_ == 0) {
      dims.push_back(0);
      return;
    }
    if (h_.order() == 0) return;
    descend(0, 0);
  }

 private:
  std::uint64_t common(std::uint64_t s) const {
    std::uint64_t out = h_.vertices().bits();
    for (std::uint64_t b = s; b != 0; b &= b - 1) out &= rows_[static_cast<std::size_t>(std::countr_zero(b))];
    return out;
  }

  void descend(std::size_t depth, int dim_so_far) {
    if (depth == n_) {
      cells_->insert(cells_->end(), current_.begin(), current_.end());
      dims_->push_back(dim_so_far);
      if (dims_->size() > opts_.max_cells) {
        throw ResourceError("Hom complex exceeds the budget of " + std::to_string(opts_.max_cells) + " cells",
                            dims_->size());
      }
      return;
    }
    const int x = order_[depth];
    const std::uint64_t* here = &allowed_[depth * n_];
    std::uint64_t* next = &allowed_[(depth + 1) * n_];
    const std::uint64_t mask = here[x];
    const bool looped = g_.has_loop(x);
    const std::uint64_t nbrs = g_.neighbors(x).without(x).bits();
    for (std::uint64_t sub = mask; sub != 0; sub = (sub - 1) & mask) {
      const int extra = std::popcount(sub) - 1;
      if (opts_.max_dim >= 0 && dim_so_far + extra > opts_.max_dim) continue;
      const std::uint64_t cn = common(sub);
      if (looped && (sub & ~cn) != 0) continue;
      bool dead = false;
      std::copy(here, here + n_, next);
      for (std::size_t d = depth + 1; d < n_; ++d) {
        const int u = order_[d];
        if ((nbrs >> u) & 1U) {
          next[u] &= cn;
          if (next[u] == 0) {
            dead = true;
            break;
          }
        }
      }
      if (dead) continue;
      current_[static_cast<std::size_t>(x)] = VertexSet{sub};
      descend(depth + 1, dim_so_far + extra);
    }
  }

  const Graph& g_;
  const Graph& h_;
  const HomBuildOptions& opts_;
  std::size_t n_;
  std::vector<int> order_;
  std::vector<std::uint64_t> allowed_;
  std::vector<std::uint64_t> rows_;
  std::vector<VertexSet> current_;
  std::vector<VertexSet>* cells_ = nullptr;
  std::vector<int>* dims_ = nullptr;
};

}  // namespace

bool same_cell(CellView a, CellView b) {
  return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin());
}

int cell_dimension(CellView c) {
  int d = 0;
  for (VertexSet s : c) d += s.size() - 1;
  return d;
}

HomComplex HomComplex::build(const Graph& g, const Graph& h, HomBuildOptions opts) {
  std::vector<VertexSet> raw;
  std::vector<int> raw_dims;
  Enumerator(g, h, opts).run(raw, raw_dims);

  const std::size_t n = static_cast<std::size_t>(g.order());
  const std::size_t count = raw_dims.size();
  std::vector<CellId> perm(count);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](CellId a, CellId b) {
    if (raw_dims[a] != raw_dims[b]) return raw_dims[a] < raw_dims[b];
    return lex_less({raw.data() + a * n, n}, {raw.data() + b * n, n});
  });

  auto data = std::make_shared<Data>();
  data->g = g;
  data->h = h;
  data->cells.reserve(count * n);
  data->dims.reserve(count);
  for (CellId p : perm) {
    data->cells.insert(data->cells.end(), raw.begin() + static_cast<std::ptrdiff_t>(p * n),
                       raw.begin() + static_cast<std::ptrdiff_t>((p + 1) * n));
    data->dims.push_back(raw_dims[p]);
  }
  const int top = count == 0 ? -1 : data->dims.back();
  data->dim_start.assign(static_cast<std::size_t>(top + 2), static_cast<CellId>(count));
  for (std::size_t i = count; i-- > 0;) data->dim_start[static_cast<std::size_t>(data->dims[i])] = static_cast<CellId>(i);
  for (std::size_t k = data->dim_start.size() - 1; k-- > 0;)
    data->dim_start[k] = std::min(data->dim_start[k], data->dim_start[k + 1]);

  std::size_t capacity = 16;
  while (capacity < 2 * count) capacity <<= 1;
  data->table.assign(capacity, kEmpty);
  for (CellId id = 0; id < count; ++id) {
    std::size_t slot = hash_cell({data->cells.data() + id * n, n}) & (capacity - 1);
    while (data->table[slot] != kEmpty) slot = (slot + 1) & (capacity - 1);
    data->table[slot] = id;
  }

  HomComplex out;
  out.data_ = std::move(data);
  return out;
}

MultiHomCell HomComplex::cell_copy(CellId id) const {
  auto c = cell(id);
  return {c.begin(), c.end()};
}

int HomComplex::dimension() const noexcept { return empty() ? -1 : data_->dims.back(); }

std::vector<std::size_t> HomComplex::f_vector() const {
  std::vector<std::size_t> f;
  for (int k = 0; k <= dimension(); ++k) f.push_back(first_of_dim(k + 1) - first_of_dim(k));
  return f;
}

CellId HomComplex::first_of_dim(int k) const {
  if (k < 0) return 0;
  if (static_cast<std::size_t>(k) >= data_->dim_start.size()) return static_cast<CellId>(size());
  return data_->dim_start[static_cast<std::size_t>(k)];
}

std::optional<CellId> HomComplex::find(CellView c) const {
  if (c.size() != width() || data_->table.empty()) return std::nullopt;
  const std::size_t mask = data_->table.size() - 1;
  std::size_t slot = hash_cell(c) & mask;
  while (true) {
    const CellId id = data_->table[slot];
    if (id == kEmpty) return std::nullopt;
    if (same_cell(cell(id), c)) return id;
    slot = (slot + 1) & mask;
  }
}

bool HomComplex::face_relation(CellView a, CellView b) const {
  if (!find(a) || !find(b)) throw DomainError("face_relation: argument is not a cell of this complex");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_subset_of(b[i])) return false;
  return true;
}

bool HomComplex::leq(CellId a, CellId b) const {
  auto ca = cell(a);
  auto cb = cell(b);
  for (std::size_t i = 0; i < ca.size(); ++i)
    if (!ca[i].is_subset_of(cb[i])) return false;
  return true;
}

std::vector<CellId> HomComplex::facets(CellId id) const {
  std::vector<CellId> out;
  MultiHomCell face = cell_copy(id);
  for (std::size_t x = 0; x < face.size(); ++x) {
    const VertexSet s = face[x];
    if (s.size() < 2) continue;
    s.for_each([&](int v) {
      face[x] = s.without(v);
      auto f = find(face);
      if (!f) throw InternalError("Hom complex is not closed under faces");
      out.push_back(*f);
    });
    face[x] = s;
  }
  std::sort(out.begin(), out.end());
  return out;
}

GraphMap HomComplex::vertex_map(CellId id) const {
  if (dim(id) != 0) throw DomainError("vertex_map: cell is not a 0-cell");
  GraphMap f;
  for (VertexSet s : cell(id)) f.push_back(s.first());
  return f;
}

CellPoset HomComplex::face_poset() const {
  std::vector<std::vector<ElementId>> covers(size());
  for (CellId id = 0; id < size(); ++id) covers[id] = facets(id);
  CellPoset p(data_->dims, std::move(covers), Provenance::hom_complex);
  p.set_order_oracle([self = *this](ElementId a, ElementId b) { return self.leq(a, b); });
  return p;
}

namespace {

VertexSet image(const GraphMap& phi, VertexSet s) {
  VertexSet out;
  s.for_each([&](int v) { out = out.with(phi[static_cast<std::size_t>(v)]); });
  return out;
}

}  // namespace

std::vector<CellId> covariant_map(const GraphMap& phi, const HomComplex& from, const HomComplex& to) {
  if (from.source() != to.source()) throw DomainError("covariant_map: complexes have different source graphs");
  if (phi.size() != static_cast<std::size_t>(from.target().order()) ||
      !is_homomorphism(from.target(), to.target(), phi)) {
    throw DomainError("covariant_map: phi is not a homomorphism between the target graphs");
  }
  std::vector<CellId> out(from.size());
  MultiHomCell img(from.width());
  for (CellId id = 0; id < from.size(); ++id) {
    auto c = from.cell(id);
    for (std::size_t x = 0; x < c.size(); ++x) img[x] = image(phi, c[x]);
    auto t = to.find(img);
    if (!t) throw InternalError("covariant_map: image is not a cell of the target complex");
    out[id] = *t;
  }
  return out;
}

std::vector<CellId> contravariant_map(const GraphMap& phi, const HomComplex& from, const HomComplex& to) {
  if (from.target() != to.target()) throw DomainError("contravariant_map: complexes have different target graphs");
  if (phi.size() != static_cast<std::size_t>(to.source().order()) ||
      !is_homomorphism(to.source(), from.source(), phi)) {
    throw DomainError("contravariant_map: phi is not a homomorphism between the source graphs");
  }
  std::vector<CellId> out(from.size());
  MultiHomCell img(to.width());
  for (CellId id = 0; id < from.size(); ++id) {
    auto c = from.cell(id);
    for (std::size_t x = 0; x < img.size(); ++x) img[x] = c[static_cast<std::size_t>(phi[x])];
    auto t = to.find(img);
    if (!t) throw InternalError("contravariant_map: image is not a cell of the target complex");
    out[id] = *t;
  }
  return out;
}

std::variant<CubicalLink, NonCubicalVertex> link_data(const HomComplex& c, CellId phi) {
  if (phi >= c.size() || c.dim(phi) != 0) throw DomainError("link_data: not a 0-cell");
  if (c.target().has_loops()) throw DomainError("link_data: target graph must be loopless");
  const Graph& g = c.source();
  const Graph& h = c.target();
  auto base = c.cell(phi);
  CubicalLink out;
  for (int v = 0; v < g.order(); ++v) {
    VertexSet used;
    g.neighbors(v).for_each([&](int w) { used = used | base[static_cast<std::size_t>(w)]; });
    const VertexSet a = common_neighbors(h, used);
    if (a.size() > 2) return NonCubicalVertex{v, a.size()};
    if (a.size() == 2) out.m = out.m.with(v);
    out.a.push_back(a);
  }
  std::vector<Simplex> simplices;
  for (CellId id = c.first_of_dim(1); id < c.size(); ++id) {
    if (!c.leq(phi, id)) continue;
    Simplex s;
    auto cell = c.cell(id);
    for (std::size_t v = 0; v < cell.size(); ++v)
      if (cell[v].size() == 2) s.push_back(static_cast<std::uint32_t>(v));
    simplices.push_back(std::move(s));
  }
  out.link = SimplicialComplex::from_simplices(std::move(simplices));
  return out;
}

SimplicialComplex neighborhood_complex(const Graph& g) {
  std::vector<Simplex> gens;
  for (int v = 0; v < g.order(); ++v) {
    auto nb = g.neighbors(v).to_vector();
    if (nb.empty()) continue;
    gens.emplace_back(nb.begin(), nb.end());
  }
  return SimplicialComplex::from_maximal(std::move(gens));
}

SimplicialComplex independence_complex(const Graph& g) {
  if (g.has_loops()) throw DomainError("independence_complex: graph has a loop");
  std::vector<Simplex> simplices;
  Simplex current;
  auto extend = [&](auto& self, int from, VertexSet forbidden) -> void {
    for (int v = from; v < g.order(); ++v) {
      if (forbidden.contains(v)) continue;
      current.push_back(static_cast<std::uint32_t>(v));
      simplices.push_back(current);
      if (simplices.size() > kDefaultCellBudget) throw ResourceError("independence complex too large", simplices.size());
      self(self, v + 1, forbidden | g.neighbors(v));
      current.pop_back();
    }
  };
  extend(extend, 0, VertexSet{});
  return SimplicialComplex::from_simplices(std::move(simplices));
}

bool product_fvector_check(const Graph& g, const Graph& h, const Graph& k, std::size_t budget) {
  HomBuildOptions opts;
  opts.max_cells = budget;
  const auto whole = HomComplex::build(disjoint_union(g, h), k, opts);
  const auto left = HomComplex::build(g, k, opts);
  const auto right = HomComplex::build(h, k, opts);
  if (whole.size() != left.size() * right.size()) return false;
  MultiHomCell joined(whole.width());
  for (CellId a = 0; a < left.size(); ++a) {
    auto ca = left.cell(a);
    std::copy(ca.begin(), ca.end(), joined.begin());
    for (CellId b = 0; b < right.size(); ++b) {
      auto cb = right.cell(b);
      std::copy(cb.begin(), cb.end(), joined.begin() + static_cast<std::ptrdiff_t>(ca.size()));
      auto id = whole.find(joined);
      if (!id || whole.dim(*id) != left.dim(a) + right.dim(b)) return false;
    }
  }
  return true;
}

}  // namespace homtopo
