#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "homtopo/graphs.hpp"
#include "homtopo/homcx.hpp"
#include "homtopo/topology.hpp"

namespace homtopo {

/// Pairs (x, mu(x)) with mu(x) covering x.
struct PartialMatching {
  std::vector<std::pair<ElementId, ElementId>> pairs;
};

/// Throws DomainError naming the first pair that is not a cover or that reuses
/// an element.
void validate_matching(const CellPoset& p, const PartialMatching& m);
/// Matched covers point up, all other covers point down; acyclic iff this
/// digraph has no directed cycle. Validates first.
bool is_acyclic(const CellPoset& p, const PartialMatching& m);
/// Elements not touched by the matching, sorted.
std::vector<ElementId> critical_cells(const CellPoset& p, const PartialMatching& m);

/// The matching on A_1 inside Hom(K_m,K_n), using vertex 0 of K_m and colour
/// n-1: a cell without n-1 in eta(0) is matched with the cell that adds it.
struct KmnMatching {
  HomComplex hom;
  /// Ids in `hom` of the cells of A_1, ascending; local id i is a1_cells[i].
  std::vector<CellId> a1_cells;
  CellPoset a1;
  PartialMatching matching;       // local ids
  std::vector<ElementId> critical;  // local ids
};

KmnMatching kmn_matching(int m, int n, std::size_t budget = kDefaultCellBudget);

struct KmnReport {
  std::size_t a1_cells = 0;
  std::size_t matched_pairs = 0;
  std::size_t critical = 0;
  bool acyclic = false;
  /// The critical cells are down-closed and, after dropping vertex 0, are
  /// exactly Hom(K_{m-1},K_{n-1}) with the same order.
  bool critical_isomorphic = false;
  BettiProfile a1_betti;
  BettiProfile critical_betti;
};

KmnReport verify_kmn(int m, int n, std::size_t budget = kDefaultCellBudget);

struct PosetMap {
  CellPoset source;
  CellPoset target;
  std::vector<ElementId> image;
};

bool is_order_preserving(const PosetMap& f);

struct QuillenResult {
  bool ok = true;
  /// (p, q) for which f^{-1}(q) restricted below p has no greatest element.
  std::optional<std::pair<ElementId, ElementId>> witness;
};

/// For all p and all q <= f(p), f^{-1}(q) intersected with P_{<=p} must have a
/// greatest element.
QuillenResult check_quillen_B(const PosetMap& f);
/// Condition B for the induced map of opposite posets.
QuillenResult check_quillen_B_op(const PosetMap& f);

struct FiberReport {
  ElementId q = 0;
  std::size_t size = 0;
  bool has_maximum = false;
  /// Betti numbers of the fiber's order complex, only when there is no maximum.
  std::optional<BettiProfile> betti;
};

/// A fiber with a greatest element is a cone, so a full pass certifies
/// condition (A); a failure is inconclusive.
std::vector<FiberReport> check_quillen_A_proxy(const PosetMap& f);
bool all_fibers_coned(const std::vector<FiberReport>& report);

/// P(Hom(K_2,G)) -> P(N(G)), eta -> eta(0).
PosetMap neighborhood_map(const Graph& g, std::size_t budget = kDefaultCellBudget);

}  // namespace homtopo
