#pragma once

// Brute-force reference implementations used only by the tests.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "homtopo/graphs.hpp"

namespace oracle {

// Every map V(g) -> V(h) checked edge by edge, in lexicographic order.
inline std::vector<homtopo::GraphMap> homomorphisms(const homtopo::Graph& g, const homtopo::Graph& h) {
  std::vector<homtopo::GraphMap> out;
  const int n = g.order();
  const int k = h.order();
  if (k == 0) return n == 0 ? std::vector<homtopo::GraphMap>{{}} : out;
  homtopo::GraphMap f(static_cast<std::size_t>(n), 0);
  while (true) {
    bool ok = true;
    for (auto [u, v] : g.edges()) ok = ok && h.adjacent(f[static_cast<std::size_t>(u)], f[static_cast<std::size_t>(v)]);
    if (ok) out.push_back(f);
    int i = n - 1;
    while (i >= 0 && ++f[static_cast<std::size_t>(i)] == k) f[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
  }
  return out;
}

// Number of ordered m-tuples of pairwise disjoint nonempty subsets of an
// n-set: the cells of Hom(K_m,K_n), by inclusion-exclusion over unused labels.
inline long long kmn_cells(int m, int n) {
  long long total = 0;
  long long binom = 1;
  for (int j = 0; j <= m; ++j) {
    long long p = 1;
    for (int i = 0; i < n; ++i) p *= (m + 1 - j);
    total += (j % 2 == 0 ? 1 : -1) * binom * p;
    binom = binom * (m - j) / (j + 1);
  }
  return total;
}

// Smallest k with a proper k-colouring, by trying all colourings.
inline int chromatic(const homtopo::Graph& g) {
  if (g.order() == 0) return 0;
  for (int k = 1;; ++k)
    if (!homomorphisms(g, homtopo::complete_graph(k)).empty()) return k;
}

// Rank over GF(2) of a dense matrix given as row bitmasks.
inline int rank_gf2(std::vector<std::uint64_t> rows) {
  int rank = 0;
  for (int bit = 0; bit < 64; ++bit) {
    auto it = std::find_if(rows.begin() + rank, rows.end(), [&](std::uint64_t r) { return (r >> bit) & 1U; });
    if (it == rows.end()) continue;
    std::iter_swap(rows.begin() + rank, it);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (static_cast<int>(i) != rank && ((rows[i] >> bit) & 1U)) rows[i] ^= rows[static_cast<std::size_t>(rank)];
    ++rank;
  }
  return rank;
}

}  // namespace oracle
