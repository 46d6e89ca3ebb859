#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "homtopo/graphs.hpp"

namespace homtopo {

enum class DominationKind { equivalent, strong };

/// N(dominated) is contained in N(dominator).
struct DominationRecord {
  int dominator;
  int dominated;
  DominationKind kind;
  friend bool operator==(const DominationRecord&, const DominationRecord&) = default;
};

/// All ordered dominations of g, sorted by (dominated, dominator).
std::vector<DominationRecord> dominated_pairs(const Graph& g);
/// Same, restricted to the induced subgraph on `alive` (labels are g's).
std::vector<DominationRecord> dominated_pairs(const Graph& g, VertexSet alive);

struct FoldStep {
  Graph graph;    // g - v, relabelled as by remove_vertex
  int dominator;  // smallest vertex dominating v, in g's labels
};

/// Throws DomainError if nothing dominates v.
FoldStep fold(const Graph& g, int v);

struct ReductionTrace {
  /// (removed vertex, dominator), in g's labels, in removal order.
  std::vector<std::pair<int, int>> removed;
  std::vector<int> core_vertices;
};

struct CorePolicy {
  enum class Kind { smallest_index, random };
  Kind kind = Kind::smallest_index;
  std::uint64_t seed = 0;
};

struct CoreResult {
  Graph core;
  ReductionTrace trace;
};

/// Removes one dominated vertex at a time until the graph is irreducible.
CoreResult irreducible_core(const Graph& g, CorePolicy policy = {});

inline constexpr int kCoreUniquenessCap = 12;

/// Runs `trials` random tie-break policies and checks that all cores are
/// isomorphic. Throws ResourceError above kCoreUniquenessCap vertices.
bool core_uniqueness_check(const Graph& g, int trials, std::uint64_t seed = 1);

struct InvariantCoreResult {
  VertexSet s;
  Graph core;
  ReductionTrace trace;
};

/// Greedy gamma-invariant reduction: repeatedly drops the first orbit {v, gamma v}
/// whose members are all dominated by vertices outside the orbit. Stops when
/// no orbit qualifies. Throws DomainError unless gamma is an involutive
/// automorphism.
InvariantCoreResult invariant_core(const Graph& g, const GraphMap& gamma);

}  // namespace homtopo
