#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "homtopo/graphs.hpp"
#include "homtopo/topology.hpp"

namespace homtopo {

using CellId = std::uint32_t;
/// One vertex set of H per vertex of G, indexed by G's vertex order.
using MultiHomCell = std::vector<VertexSet>;
using CellView = std::span<const VertexSet>;

inline constexpr std::size_t kDefaultCellBudget = 5'000'000;

struct HomBuildOptions {
  std::size_t max_cells = kDefaultCellBudget;
  /// Only cells of dimension <= max_dim are produced; -1 means all. The result
  /// is still closed under faces.
  int max_dim = -1;
};

/// The cell complex Hom(G,H). Cells are stored explicitly, sorted by dimension
/// and then lexicographically on their bitmask arrays; the face relation is
/// entrywise inclusion.
class HomComplex {
 public:
  static HomComplex build(const Graph& g, const Graph& h, HomBuildOptions opts = {});

  const Graph& source() const noexcept { return data_->g; }
  const Graph& target() const noexcept { return data_->h; }
  std::size_t size() const noexcept { return data_->dims.size(); }
  bool empty() const noexcept { return size() == 0; }
  /// |V(G)|, the number of entries per cell.
  std::size_t width() const noexcept { return static_cast<std::size_t>(data_->g.order()); }
  CellView cell(CellId id) const {
    return {data_->cells.data() + static_cast<std::size_t>(id) * width(), width()};
  }
  MultiHomCell cell_copy(CellId id) const;
  int dim(CellId id) const { return data_->dims[id]; }
  int dimension() const noexcept;
  std::vector<std::size_t> f_vector() const;
  /// Ids of the cells of dimension k form [first_of_dim(k), first_of_dim(k+1)).
  CellId first_of_dim(int k) const;

  std::optional<CellId> find(CellView c) const;
  /// a <= b entrywise. Throws DomainError if either is not a cell of this complex.
  bool face_relation(CellView a, CellView b) const;
  bool leq(CellId a, CellId b) const;
  /// Codimension-1 faces, sorted by id.
  std::vector<CellId> facets(CellId id) const;
  /// The 0-cell `id` as a homomorphism.
  GraphMap vertex_map(CellId id) const;

  /// Face poset with covers = facets and an entrywise-inclusion order oracle.
  CellPoset face_poset() const;

 private:
  struct Data {
    Graph g;
    Graph h;
    std::vector<VertexSet> cells;  // flat, width entries per cell
    std::vector<int> dims;
    std::vector<CellId> dim_start;  // dim_start[k] = first id of dimension k
    std::vector<CellId> table;      // open addressing, kEmpty = free
  };
  std::size_t slot_of(CellView c) const;
  std::shared_ptr<const Data> data_;
};

/// True iff the two cell views are equal entrywise.
bool same_cell(CellView a, CellView b);
/// dim = sum |eta(x)| - |V(G)|.
int cell_dimension(CellView c);

/// phi^H: Hom(H,G) -> Hom(H,G') for a homomorphism phi: G -> G'. `from` is
/// Hom(H,G) and `to` is Hom(H,G'). Returns the image id of every cell.
std::vector<CellId> covariant_map(const GraphMap& phi, const HomComplex& from, const HomComplex& to);
/// phi_H: Hom(G',H) -> Hom(G,H), eta -> eta o phi, for phi: G -> G'. `from`
/// is Hom(G',H) and `to` is Hom(G,H).
std::vector<CellId> contravariant_map(const GraphMap& phi, const HomComplex& from, const HomComplex& to);

struct CubicalLink {
  /// Vertices v of G with exactly one alternative colour.
  VertexSet m;
  /// A_phi(v) = N(phi(N(v))), per vertex of G.
  std::vector<VertexSet> a;
  /// Link of the 0-cell; vertex v stands for the edge that widens phi at v.
  SimplicialComplex link;
};

/// Reported instead of a link when some |A_phi(v)| >= 3.
struct NonCubicalVertex {
  int vertex;
  int alternatives;  // |A_phi(vertex)|
};

/// Link data of a 0-cell in Hom(G,H) for loopless H. The link is read off the
/// cells above phi, so callers can compare it with the pairwise rule
/// independently.
std::variant<CubicalLink, NonCubicalVertex> link_data(const HomComplex& c, CellId phi);

/// Simplices are the vertex sets with a common neighbour; isolated vertices of
/// g contribute nothing.
SimplicialComplex neighborhood_complex(const Graph& g);
/// All independent sets. Throws DomainError if g has a loop.
SimplicialComplex independence_complex(const Graph& g);

/// Checks Hom(G+H,K) = Hom(G,K) x Hom(H,K) cell by cell: every concatenation
/// of cells is a cell of the union complex with the summed dimension, and the
/// counts match.
bool product_fvector_check(const Graph& g, const Graph& h, const Graph& k,
                           std::size_t budget = kDefaultCellBudget);

}  // namespace homtopo
