#include "homtopo/folds.hpp"

#include <random>
#include <string>

#include "homtopo/errors.hpp"

namespace homtopo {

namespace {

// Smallest u in `alive`, u != v, with N(v) & alive inside N(u) & alive;
// -1 if none. `excluded` vertices may not serve as dominators.
int first_dominator(const Graph& g, VertexSet alive, int v, VertexSet excluded = {}) {
  const VertexSet nv = g.neighbors(v) & alive;
  int found = -1;
  (alive - excluded).for_each([&](int u) {
    if (found < 0 && u != v && nv.is_subset_of(g.neighbors(u) & alive)) found = u;
  });
  return found;
}

}  // namespace

std::vector<DominationRecord> dominated_pairs(const Graph& g, VertexSet alive) {
  std::vector<DominationRecord> out;
  alive.for_each([&](int v) {
    const VertexSet nv = g.neighbors(v) & alive;
    alive.for_each([&](int u) {
      if (u == v) return;
      const VertexSet nu = g.neighbors(u) & alive;
      if (!nv.is_subset_of(nu)) return;
      out.push_back({u, v, nv == nu ? DominationKind::equivalent : DominationKind::strong});
    });
  });
  return out;
}

std::vector<DominationRecord> dominated_pairs(const Graph& g) { return dominated_pairs(g, g.vertices()); }

FoldStep fold(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw DomainError("fold: vertex " + std::to_string(v) + " out of range");
  const int u = first_dominator(g, g.vertices(), v);
  if (u < 0) throw DomainError("fold: vertex " + std::to_string(v) + " is not dominated");
  return {remove_vertex(g, v), u};
}

CoreResult irreducible_core(const Graph& g, CorePolicy policy) {
  std::mt19937_64 rng(policy.seed);
  VertexSet alive = g.vertices();
  ReductionTrace trace;
  while (true) {
    std::vector<std::pair<int, int>> candidates;
    alive.for_each([&](int v) {
      const int u = first_dominator(g, alive, v);
      if (u >= 0) candidates.emplace_back(v, u);
    });
    if (candidates.empty()) break;
    std::size_t pick = 0;
    if (policy.kind == CorePolicy::Kind::random) {
      pick = std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng);
    }
    trace.removed.push_back(candidates[pick]);
    alive = alive.without(candidates[pick].first);
  }
  trace.core_vertices = alive.to_vector();
  return {induced_subgraph(g, alive), std::move(trace)};
}

bool core_uniqueness_check(const Graph& g, int trials, std::uint64_t seed) {
  if (g.order() > kCoreUniquenessCap) {
    throw ResourceError("core_uniqueness_check: more than " + std::to_string(kCoreUniquenessCap) + " vertices");
  }
  const Graph reference = irreducible_core(g).core;
  for (int t = 0; t < trials; ++t) {
    CorePolicy policy{CorePolicy::Kind::random, seed + static_cast<std::uint64_t>(t)};
    if (!are_isomorphic(reference, irreducible_core(g, policy).core)) return false;
  }
  return true;
}

InvariantCoreResult invariant_core(const Graph& g, const GraphMap& gamma) {
  if (gamma.size() != static_cast<std::size_t>(g.order()) || !is_automorphism(g, gamma)) {
    throw DomainError("invariant_core: gamma is not an automorphism");
  }
  for (int v = 0; v < g.order(); ++v) {
    if (gamma[static_cast<std::size_t>(gamma[static_cast<std::size_t>(v)])] != v) {
      throw DomainError("invariant_core: gamma is not an involution");
    }
  }
  VertexSet alive = g.vertices();
  ReductionTrace trace;
  bool progress = true;
  while (progress) {
    progress = false;
    alive.for_each([&](int v) {
      if (progress) return;
      const int w = gamma[static_cast<std::size_t>(v)];
      const VertexSet orbit = VertexSet::single(v).with(w);
      const int dv = first_dominator(g, alive, v, orbit);
      if (dv < 0) return;
      const int dw = first_dominator(g, alive, w, orbit);
      if (dw < 0) return;
      trace.removed.emplace_back(v, dv);
      alive = alive.without(v);
      if (w != v) {
        // w stays dominated: gamma(dv) dominates it and is neither v nor w
        trace.removed.emplace_back(w, first_dominator(g, alive, w, orbit));
        alive = alive.without(w);
      }
      progress = true;
    });
  }
  trace.core_vertices = alive.to_vector();
  return {alive, induced_subgraph(g, alive), std::move(trace)};
}

}  // namespace homtopo
