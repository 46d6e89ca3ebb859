#include "homtopo/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "homtopo/corpus.hpp"
#include "homtopo/equivariant.hpp"
#include "homtopo/errors.hpp"
#include "homtopo/folds.hpp"
#include "homtopo/formulas.hpp"
#include "homtopo/homcx.hpp"
#include "homtopo/morse.hpp"
#include "homtopo/topology.hpp"

namespace homtopo {

namespace {

struct Ctx {
  bool full = false;
  std::size_t budget = 0;
  std::size_t cap(std::size_t local) const { return std::min(budget, local); }
};

struct Outcome {
  std::string expected;
  std::string computed;
  bool pass = false;
};

std::string seq(const std::vector<std::size_t>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

std::string str(const BigInt& x) { return x.str(); }

std::vector<std::size_t> betti_of(const HomComplex& c) {
  return trimmed(betti_gf2(c.face_poset()).betti);
}

std::vector<std::size_t> sphere(int d) {
  std::vector<std::size_t> b(static_cast<std::size_t>(d + 1), 0);
  b[0] += 1;
  b[static_cast<std::size_t>(d)] += 1;
  return b;
}

std::optional<HomComplex> try_build(const Graph& g, const Graph& h, std::size_t cap, int max_dim = -1) {
  try {
    return HomComplex::build(g, h, {cap, max_dim});
  } catch (const ResourceError&) {
    return std::nullopt;
  }
}

// Tallies instances of one family, remembering the first failure.
struct Tally {
  std::size_t ok = 0;
  std::size_t bad = 0;
  std::size_t skipped = 0;
  std::string first_failure;
  void record(bool good, const std::string& what) {
    if (good) {
      ++ok;
    } else {
      if (bad++ == 0) first_failure = what;
    }
  }
  std::string summary(const std::string& label) const {
    std::string s = label + " " + std::to_string(ok) + "/" + std::to_string(ok + bad);
    if (skipped) s += " (skipped " + std::to_string(skipped) + " over budget)";
    if (bad) s += " first failure " + first_failure;
    return s;
  }
};

// --- 1 ---------------------------------------------------------------------------

Outcome wedge_counts(const Ctx& ctx) {
  Tally t;
  std::map<std::pair<int, int>, std::size_t> top;
  for (int m = 2; m <= 4; ++m) {
    for (int n = m; n <= 7; ++n) {
      auto c = try_build(complete_graph(m), complete_graph(n), ctx.cap(5'000'000));
      if (!c) {
        ++t.skipped;
        continue;
      }
      const BettiProfile b = betti_gf2(c->face_poset());
      const BigInt f = f_wedge(m, n);
      std::vector<std::size_t> want(static_cast<std::size_t>(n - m + 1), 0);
      want[0] = 1;
      want[static_cast<std::size_t>(n - m)] += static_cast<std::size_t>(f);
      const auto got = trimmed(b.betti);
      const bool good = got == want && BigInt(b.euler) == chi_hom(m, n);
      t.record(good, "K" + std::to_string(m) + "->K" + std::to_string(n) + " " + seq(got));
      top[{m, n}] = got.back();
    }
  }
  bool named = true;
  std::string spot;
  for (auto [m, n, f] : {std::tuple{3, 4, 13}, {3, 5, 29}, {4, 5, 121}, {4, 6, 479}}) {
    auto it = top.find({m, n});
    const std::string v = it == top.end() ? "skipped" : std::to_string(it->second);
    named = named && it != top.end() && it->second == static_cast<std::size_t>(f);
    spot += " f(" + std::to_string(m) + "," + std::to_string(n) + ")=" + v;
  }
  return {"Betti (1,0,..,0,f(m,n)) for 2<=m<=4, m<=n<=7; f(3,4)=13 f(3,5)=29 f(4,5)=121 f(4,6)=479",
          t.summary("instances") + ";" + spot, t.bad == 0 && named};
}

// --- 2 ---------------------------------------------------------------------------

Outcome formula_agreement(const Ctx&) {
  Tally t;
  for (int m = 1; m <= 12; ++m) {
    for (int n = m; n <= 12; ++n) {
      const BigInt a = f_wedge(m, n, WedgeMethod::recurrence);
      const BigInt b = f_wedge(m, n, WedgeMethod::closed);
      const BigInt c = f_wedge(m, n, WedgeMethod::stirling);
      const BigInt sign = (n - m) % 2 == 0 ? 1 : -1;
      const bool good = a == b && b == c && chi_hom(m, n) == 1 + sign * a;
      t.record(good, "f(" + std::to_string(m) + "," + std::to_string(n) + ") " + str(a) + "/" + str(b) + "/" + str(c));
    }
    t.record(verify_generating_identity(m, 12), "generating identity m=" + std::to_string(m));
  }
  return {"recurrence = closed = Stirling = generating series, chi = 1 + (-1)^(n-m) f, 1<=m<=n<=12",
          t.summary("agreements") + "; f(12,12)=" + str(f_wedge(12, 12)), t.bad == 0};
}

// --- 3 ---------------------------------------------------------------------------

Outcome sphere_polytope(const Ctx& ctx) {
  Tally spheres;
  for (int n = 3; n <= 6; ++n) {
    auto c = try_build(complete_graph(2), complete_graph(n), ctx.cap(5'000'000));
    if (!c) {
      ++spheres.skipped;
      continue;
    }
    const auto got = betti_of(*c);
    spheres.record(got == sphere(n - 2), "n=" + std::to_string(n) + " " + seq(got));
  }
  Tally iso;
  for (int n = 2; n <= 4; ++n) {
    const MnFacePoset mn = mn_face_poset(n);
    const HomComplex hom = HomComplex::build(complete_graph(2), complete_graph(n + 1));
    const CellPoset op = opposite(hom.face_poset());
    std::vector<ElementId> f(mn.faces.size());
    bool mapped = mn.faces.size() == hom.size();
    for (ElementId x = 0; mapped && x < mn.faces.size(); ++x) {
      const auto [a, b] = mn.rho(x);
      const std::vector<VertexSet> cell{a, b};
      const auto id = hom.find(cell);
      if (!id) mapped = false;
      else f[x] = *id;
    }
    bool good = mapped && is_poset_isomorphism(mn.poset, op, f);
    if (good) {
      const Involution flip = induced_involution(hom, swap01(2));
      for (ElementId x = 0; x < mn.faces.size(); ++x)
        good = good && f[mn.central_symmetry[x]] == flip(f[x]);
      good = good && find_poset_isomorphism(mn.poset, op).has_value();
    }
    iso.record(good, "M_" + std::to_string(n));
  }
  return {"Hom(K2,Kn) ~ S^(n-2) for n=3..6; P(Hom(K2,K(n+1)))^op = faces of M_n, flip <-> -x, n=2,3,4",
          spheres.summary("spheres") + "; " + iso.summary("polytopes"), spheres.bad == 0 && iso.bad == 0};
}

// --- 4 ---------------------------------------------------------------------------

Outcome cycle_examples(const Ctx& ctx) {
  Tally t;
  std::string notes;
  const Graph k3 = complete_graph(3);
  {
    const HomComplex c = HomComplex::build(cycle_graph(5), k3);
    const auto fv = c.f_vector();
    const auto b = betti_of(c);
    t.record(fv == std::vector<std::size_t>{30, 30} && b == std::vector<std::size_t>{2, 2}, "C5 " + seq(fv) + " " + seq(b));
    notes += " C5 f=" + seq(fv) + " b=" + seq(b);
  }
  {
    const HomComplex c = HomComplex::build(cycle_graph(7), k3);
    const auto b = betti_of(c);
    const auto comps = connected_components(c.face_poset());
    t.record(b == std::vector<std::size_t>{2, 2} && comps == 2, "C7 " + seq(b));
    notes += " C7 b=" + seq(b) + " components=" + std::to_string(comps);
  }
  {
    const HomComplex c = HomComplex::build(cycle_graph(6), k3);
    const auto fv = c.f_vector();
    const auto comps = connected_components(c.face_poset());
    const std::size_t cubes = fv.size() > 3 ? fv[3] : 0;
    t.record(comps == 7 && fv.size() == 4 && cubes == 6, "C6 " + seq(fv));
    notes += " C6 components=" + std::to_string(comps) + " 3-cells=" + std::to_string(cubes);
  }
  std::string ct;
  for (int len = 3; len <= 9; ++len) {
    auto c = try_build(cycle_graph(len), k3, ctx.cap(5'000'000));
    if (!c) {
      ++t.skipped;
      continue;
    }
    const auto comps = connected_components(c->face_poset());
    t.record(static_cast<long long>(comps) == cycle_components(len), "c_" + std::to_string(len));
    ct += (ct.empty() ? "" : ",") + std::to_string(comps);
  }
  return {"C5: f=(30,30) b=(2,2); C7: b=(2,2), 2 components; C6: 7 components, 6 3-cells; c_t for t=3..9",
          t.summary("checks") + ";" + notes + "; c_3..c_9=(" + ct + ")", t.bad == 0};
}

// --- 5 ---------------------------------------------------------------------------

Outcome cayley_graph(const Ctx&) {
  Tally t;
  for (int n = 3; n <= 4; ++n) {
    std::vector<std::vector<int>> perms;
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
    std::set<std::pair<int, int>> cayley;
    for (const auto& q : perms) {
      for (int a = 0; a + 1 < n; ++a) {
        auto r = q;
        std::swap(r[static_cast<std::size_t>(a)], r[static_cast<std::size_t>(n - 1)]);
        cayley.insert(std::minmax(index[q], index[r]));
      }
    }

    const HomComplex hom = HomComplex::build(complete_graph(n - 1), complete_graph(n));
    const auto fv = hom.f_vector();
    std::vector<int> to_perm(fv.empty() ? 0 : fv[0], -1);
    std::set<int> hit;
    for (CellId v = 0; v < to_perm.size(); ++v) {
      GraphMap phi = hom.vertex_map(v);
      int used = 0;
      for (int c : phi) used |= 1 << c;
      for (int c = 0; c < n; ++c)
        if (!((used >> c) & 1)) phi.push_back(c);
      to_perm[v] = index.count(phi) ? index[phi] : -1;
      hit.insert(to_perm[v]);
    }
    std::set<std::pair<int, int>> skeleton;
    if (fv.size() > 1) {
      for (CellId e = hom.first_of_dim(1); e < hom.first_of_dim(1) + fv[1]; ++e) {
        const auto ends = hom.facets(e);
        if (ends.size() == 2) skeleton.insert(std::minmax(to_perm[ends[0]], to_perm[ends[1]]));
      }
    }
    bool good = hit.size() == perms.size() && !hit.count(-1) && skeleton == cayley && fv.size() > 1 &&
                fv[1] == cayley.size();
    if (good && perms.size() <= static_cast<std::size_t>(kIsomorphismCap)) {
      std::vector<std::pair<int, int>> a(skeleton.begin(), skeleton.end());
      std::vector<std::pair<int, int>> b(cayley.begin(), cayley.end());
      good = are_isomorphic(Graph::from_edges(static_cast<int>(perms.size()), a),
                            Graph::from_edges(static_cast<int>(perms.size()), b));
    }
    t.record(good, "n=" + std::to_string(n));
  }
  return {"1-skeleton of Hom(K(n-1),Kn) = Cayley(S_n, {(a n)}) for n=3,4", t.summary("instances"), t.bad == 0};
}

// --- 6 ---------------------------------------------------------------------------

std::vector<std::size_t> product_of_spheres(int k, int d) {
  std::vector<std::size_t> b(static_cast<std::size_t>(k * d + 1), 0);
  for (int j = 0; j <= k; ++j) b[static_cast<std::size_t>(j * d)] += static_cast<std::size_t>(binomial(k, j));
  return trimmed(b);
}

// Components with at least one edge.
int nontrivial_components(const Graph& g) {
  int isolated = 0;
  for (int v = 0; v < g.order(); ++v) isolated += g.degree(v) == 0;
  return component_count(g) - isolated;
}

std::vector<Graph> edge_components(const Graph& g) {
  std::vector<Graph> out;
  VertexSet seen;
  for (int v = 0; v < g.order(); ++v) {
    if (seen.contains(v) || g.degree(v) == 0) continue;
    VertexSet comp = VertexSet::single(v);
    for (VertexSet frontier = comp; !frontier.empty();) {
      VertexSet next;
      frontier.for_each([&](int x) { next = next | g.neighbors(x); });
      frontier = next - comp;
      comp = comp | next;
    }
    seen = seen | comp;
    out.push_back(induced_subgraph(g, comp));
  }
  return out;
}

// Betti numbers of a product over GF(2).
std::vector<std::size_t> kunneth(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return trimmed(out);
}

std::vector<GraphMap> involutions(const Graph& g) {
  std::vector<GraphMap> out;
  for (auto& f : enumerate_homomorphisms(g, g)) {
    bool inv = is_automorphism(g, f);
    bool identity = true;
    for (int v = 0; inv && v < g.order(); ++v) {
      inv = f[static_cast<std::size_t>(f[static_cast<std::size_t>(v)])] == v;
      identity = identity && f[static_cast<std::size_t>(v)] == v;
    }
    if (inv && !identity) out.push_back(std::move(f));
  }
  return out;
}

Outcome fold_soundness(const Ctx& ctx) {
  const std::size_t pair_cap = ctx.cap(100'000);
  const std::size_t family_cap = ctx.cap(ctx.full ? 10'000'000 : 300'000);
  const std::size_t quotient_cap = ctx.cap(ctx.full ? 2'000 : 600);

  Tally pairs;
  {
    const std::vector<std::string> targets{"K2", "K3", "K4", "C4", "C5", "L3", "K2,3", "Q", "K2o"};
    std::map<std::string, Graph> by_name;
    for (auto& ng : named_corpus()) by_name[ng.name] = ng.graph;
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<int> order(4, 7);
    std::uniform_real_distribution<double> density(0.25, 0.6);
    std::uniform_int_distribution<std::size_t> pick(0, targets.size() - 1);
    for (int attempt = 0; attempt < 5000 && pairs.ok + pairs.bad < 30; ++attempt) {
      const Graph g = random_graph(order(rng), density(rng), rng());
      const Graph& h = by_name.at(targets[pick(rng)]);
      const auto dom = dominated_pairs(g);
      if (dom.empty()) continue;
      const FoldStep step = fold(g, dom.front().dominated);
      auto before = try_build(g, h, pair_cap);
      auto after = try_build(step.graph, h, pair_cap);
      if (!before || !after) continue;
      const auto b0 = betti_of(*before);
      const auto b1 = betti_of(*after);
      pairs.record(b0 == b1, describe(g) + " " + seq(b0) + " vs " + seq(b1));
    }
  }

  Tally trees;
  Tally cores;
  Tally flips;
  std::size_t free_count = 0;
  std::size_t height_checked = 0;
  for (int v = 2; v <= 7; ++v) {
    for (const Graph& tree : all_trees(v)) {
      const CoreResult core = irreducible_core(tree);
      cores.record(core.core.order() == 2 && core.core.edge_count() == 1, describe(tree));
      const auto invs = involutions(tree);
      for (int n = 3; n <= 5; ++n) {
        auto c = try_build(tree, complete_graph(n), family_cap);
        if (!c) {
          ++trees.skipped;
          flips.skipped += invs.size();
          continue;
        }
        const auto b = betti_of(*c);
        trees.record(b == sphere(n - 2), describe(tree) + " n=" + std::to_string(n) + " " + seq(b));
        for (const GraphMap& gamma : invs) {
          bool flips_edge = false;
          for (int x = 0; x < tree.order(); ++x)
            flips_edge = flips_edge || tree.adjacent(x, gamma[static_cast<std::size_t>(x)]);
          const Involution a = induced_involution(*c, gamma);
          bool good = a.is_free() == flips_edge;
          if (good && flips_edge) {
            ++free_count;
            if (c->size() <= quotient_cap) {
              ++height_checked;
              const QuotientComplex q = quotient(c->face_poset(), a);
              const auto qb = trimmed(quotient_betti(q).betti);
              good = qb == std::vector<std::size_t>(static_cast<std::size_t>(n - 1), 1) &&
                     sw_height(q, n) == n - 2;
            }
          }
          flips.record(good, describe(tree) + " n=" + std::to_string(n));
        }
      }
    }
  }

  Tally forests;
  std::size_t by_parts = 0;
  Tally complements;
  for (int v = 1; v <= 7; ++v) {
    for (const Graph& forest : all_forests(v)) {
      const int k = nontrivial_components(forest);
      const Graph co = complement(forest, false);
      const int alpha = max_independent_set(forest);
      const CoreResult core = irreducible_core(co);
      complements.record(are_isomorphic(core.core, complete_graph(alpha)), "core of complement " + describe(forest));
      for (int n = 3; n <= 5; ++n) {
        const auto want = product_of_spheres(k, n - 2);
        if (auto c = try_build(forest, complete_graph(n), family_cap)) {
          const auto b = betti_of(*c);
          forests.record(b == want, describe(forest) + " n=" + std::to_string(n) + " " + seq(b));
        } else if (component_count(forest) > 1) {
          // Hom of a disjoint union is the product of the Homs of the parts;
          // isolated vertices contribute contractible simplices
          std::vector<std::size_t> b{1};
          bool built = true;
          for (const Graph& part : edge_components(forest)) {
            auto c = try_build(part, complete_graph(n), family_cap);
            if (!c) {
              built = false;
              break;
            }
            b = kunneth(b, betti_of(*c));
          }
          if (built) {
            ++by_parts;
            forests.record(b == want, describe(forest) + " n=" + std::to_string(n) + " by parts " + seq(b));
          } else {
            ++forests.skipped;
          }
        } else {
          ++forests.skipped;
        }
        auto lhs = try_build(co, complete_graph(n), family_cap);
        auto rhs = try_build(complete_graph(alpha), complete_graph(n), family_cap);
        if (!lhs || !rhs) {
          ++complements.skipped;
          continue;
        }
        const auto bl = betti_of(*lhs);
        const auto br = betti_of(*rhs);
        complements.record(bl == br, "complement of " + describe(forest) + " n=" + std::to_string(n));
      }
    }
  }

  const bool pass = pairs.ok == 30 && pairs.bad == 0 && trees.bad == 0 && cores.bad == 0 && flips.bad == 0 &&
                    forests.bad == 0 && complements.bad == 0;
  return {"30 random fold pairs keep Betti; trees ~ S^(n-2) with core K2; edge-flipping involutions act freely "
          "with RP quotient and height n-2, others have fixed cells; forests ~ product of spheres; "
          "Hom(complement F,Kn) ~ Hom(K_alpha,Kn); trees/forests <= 7 vertices, n=3,4,5",
          pairs.summary("fold pairs") + "; " + trees.summary("trees") + "; " + cores.summary("tree cores") + "; " +
              flips.summary("tree involutions") + " (free " + std::to_string(free_count) + ", quotient checked " +
              std::to_string(height_checked) + "); " + forests.summary("forests") + " (" + std::to_string(by_parts) + " as products of their components); " +
              complements.summary("complements"),
          pass};
}

// --- 7 ---------------------------------------------------------------------------

Outcome core_uniqueness(const Ctx&) {
  Tally t;
  std::size_t reduced = 0;
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> order(4, 10);
  std::uniform_real_distribution<double> density(0.15, 0.5);
  for (int i = 0; i < 50; ++i) {
    const Graph g = random_graph(order(rng), density(rng), rng());
    if (irreducible_core(g).core.order() < g.order()) ++reduced;
    t.record(core_uniqueness_check(g, 20, rng()), describe(g));
  }
  return {"20 random tie-break policies give isomorphic cores on 50 random graphs with 4..10 vertices",
          t.summary("graphs") + " (" + std::to_string(reduced) + " reducible)", t.bad == 0 && t.ok == 50};
}

// --- 8 ---------------------------------------------------------------------------

Outcome morse(const Ctx& ctx) {
  Tally t;
  for (int m = 2; m <= 6; ++m) {
    for (int n = m; n <= 6; ++n) {
      try {
        const KmnReport r = verify_kmn(m, n, ctx.cap(5'000'000));
        const bool good = r.acyclic && r.critical_isomorphic &&
                          trimmed(r.a1_betti.betti) == trimmed(r.critical_betti.betti);
        t.record(good, "K" + std::to_string(m) + "->K" + std::to_string(n));
      } catch (const ResourceError&) {
        ++t.skipped;
      }
    }
  }
  return {"acyclic matching on A_1, critical cells = Hom(K(m-1),K(n-1)), Betti(A_1) = Betti(critical), 2<=m<=n<=6",
          t.summary("instances"), t.bad == 0};
}

// --- 9 ---------------------------------------------------------------------------

Outcome quillen(const Ctx& ctx) {
  Tally t;
  for (const auto& ng : loopless_corpus(7)) {
    try {
      const PosetMap f = neighborhood_map(ng.graph, ctx.cap(5'000'000));
      const bool b_ok = check_quillen_B(f).ok;
      const bool a_ok = all_fibers_coned(check_quillen_A_proxy(f));
      const auto hom_b = trimmed(betti_gf2(f.source).betti);
      const auto nbr_b = trimmed(betti_gf2(neighborhood_complex(ng.graph)).betti);
      t.record(b_ok && a_ok && hom_b == nbr_b, ng.name + (b_ok ? "" : " B") + (a_ok ? "" : " A") + " " + seq(hom_b) + " vs " + seq(nbr_b));
    } catch (const ResourceError&) {
      ++t.skipped;
    }
  }
  return {"Hom(K2,G) -> N(G) satisfies condition B and has coned fibers; equal Betti; loopless corpus <= 7 vertices",
          t.summary("graphs"), t.bad == 0};
}

// --- 10 --------------------------------------------------------------------------

Outcome equivariant(const Ctx& ctx) {
  Tally rp;
  for (int n = 3; n <= 5; ++n) {
    const HomComplex c = HomComplex::build(complete_graph(2), complete_graph(n));
    const Involution flip = induced_involution(c, swap01(2));
    const QuotientComplex q = quotient(c.face_poset(), flip);
    const auto b = trimmed(quotient_betti(q).betti);
    const int h = sw_height(q, n);
    rp.record(flip.is_free() && b == std::vector<std::size_t>(static_cast<std::size_t>(n - 1), 1) && h == n - 2,
              "n=" + std::to_string(n) + " " + seq(b) + " height " + std::to_string(h));
  }
  Tally sound;
  Tally tight;
  std::string bounds;
  const std::set<std::string> tight_names{"K1", "K2", "K3", "K4", "K5", "C5", "petersen"};
  for (const auto& ng : loopless_corpus(kMaxVertices)) {
    try {
      const int bound = coloring_bound(ng.graph, 2, 8, ctx.cap(5'000'000)).bound;
      const int chi = chromatic_number(ng.graph);
      sound.record(bound <= chi, ng.name + " " + std::to_string(bound) + ">" + std::to_string(chi));
      if (tight_names.count(ng.name)) {
        tight.record(bound == chi, ng.name);
        bounds += " " + ng.name + "=" + std::to_string(bound);
      }
    } catch (const ResourceError&) {
      ++sound.skipped;
    }
  }
  const bool pass = rp.bad == 0 && sound.bad == 0 && tight.bad == 0 && tight.ok == tight_names.size();
  return {"Hom(K2,Kn)/flip ~ RP^(n-2), height n-2, n=3,4,5; coloring_bound(g,2) <= chi(g) on loopless corpus, "
          "equality on K1..K5, C5, Petersen",
          rp.summary("quotients") + "; " + sound.summary("bounds") + "; " + tight.summary("tight") + ";" + bounds, pass};
}

// --- 11 --------------------------------------------------------------------------

Outcome connectivity(const Ctx& ctx) {
  Tally t;
  const std::size_t cap = ctx.cap(ctx.full ? 3'000'000 : 400'000);
  for (const auto& ng : loopless_corpus(kMaxVertices)) {
    const int d = ng.graph.max_degree();
    for (int n = d + 2; n <= d + 3; ++n) {
      auto c = try_build(ng.graph, complete_graph(n), cap, 1);
      if (!c) {
        ++t.skipped;
        continue;
      }
      t.record(connected_components(c->face_poset()) == 1, ng.name + " n=" + std::to_string(n));
    }
  }
  return {"b_0(Hom(G,Kn)) = 1 for n = d+2, d+3 on the loopless corpus", t.summary("instances"), t.bad == 0};
}

// --- 12 --------------------------------------------------------------------------

Outcome excluded_claims(const Ctx&) {
  const auto b = betti_of(HomComplex::build(cycle_graph(5), complete_graph(4)));
  return {"Hom(C5,K4) Betti (1,1,1,1); odd-cycle conjecture proof, Stiefel manifold homeomorphism and integral "
          "torsion claims are out of scope",
          "Betti " + seq(b) + "; excluded items not computed", b == std::vector<std::size_t>{1, 1, 1, 1}};
}

using CheckFn = Outcome (*)(const Ctx&);

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> r{
      {"wedge-counts", wedge_counts},       {"formula-agreement", formula_agreement},
      {"sphere-polytope", sphere_polytope}, {"cycle-examples", cycle_examples},
      {"cayley-graph", cayley_graph},       {"fold-soundness", fold_soundness},
      {"core-uniqueness", core_uniqueness}, {"morse", morse},
      {"quillen", quillen},                 {"equivariant", equivariant},
      {"connectivity", connectivity},       {"excluded-claims", excluded_claims},
  };
  return r;
}

CheckResult run_one(const std::string& name, CheckFn fn, const Ctx& ctx) {
  CheckResult r;
  r.name = name;
  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome o = fn(ctx);
    r.expected = std::move(o.expected);
    r.computed = std::move(o.computed);
    r.pass = o.pass;
  } catch (const std::exception& e) {
    r.computed = std::string("error: ") + e.what();
    r.pass = false;
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

bool VerificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::string VerificationReport::to_json(bool stable, int indent) const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["status"] = all_pass() ? "pass" : "fail";
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["expected"] = c.expected;
    e["computed"] = c.computed;
    e["pass"] = c.pass;
    if (!stable) e["seconds"] = c.seconds;
    j["checks"].push_back(std::move(e));
  }
  return j.dump(indent);
}

std::string VerificationReport::to_text(bool stable) const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!stable) out << " (" << std::fixed << std::setprecision(2) << c.seconds << "s)";
    out << "\n  expected: " << c.expected << "\n  computed: " << c.computed << "\n";
  }
  out << (all_pass() ? "all checks passed" : "some checks FAILED") << "\n";
  return out.str();
}

const std::vector<std::string>& criterion_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : registry()) n.push_back(name);
    return n;
  }();
  return names;
}

VerificationReport run_verification(const VerifyOptions& opts) {
  for (const auto& name : opts.only) {
    const auto& all = criterion_names();
    if (std::find(all.begin(), all.end(), name) == all.end()) throw DomainError("unknown check: " + name);
  }
  const Ctx ctx{opts.suite == Suite::full, opts.budget};
  std::vector<std::pair<std::string, CheckFn>> todo;
  for (const auto& entry : registry())
    if (opts.only.empty() || std::find(opts.only.begin(), opts.only.end(), entry.first) != opts.only.end())
      todo.push_back(entry);

  VerificationReport report;
  report.suite = opts.suite == Suite::full ? "full" : "fast";
  report.checks.resize(todo.size());
  unsigned jobs = opts.jobs ? opts.jobs : std::max(1U, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(todo.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < todo.size(); i = next++) report.checks[i] = run_one(todo[i].first, todo[i].second, ctx);
  };
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < jobs; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return report;
}

}  // namespace homtopo
