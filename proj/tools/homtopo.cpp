#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "homtopo/corpus.hpp"
#include "homtopo/equivariant.hpp"
#include "homtopo/errors.hpp"
#include "homtopo/folds.hpp"
#include "homtopo/formulas.hpp"
#include "homtopo/homcx.hpp"
#include "homtopo/io.hpp"
#include "homtopo/morse.hpp"
#include "homtopo/verify.hpp"

using namespace homtopo;
using nlohmann::ordered_json;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kBudget = 3 };

struct Global {
  bool pretty = false;
  std::optional<std::size_t> budget;
  unsigned jobs = 0;

  // HOMTOPO_BUDGET_CELLS caps whatever the flags and config file say.
  std::size_t cells(std::size_t fallback = kDefaultCellBudget) const {
    const std::size_t chosen = budget.value_or(fallback);
    if (const char* env = std::getenv("HOMTOPO_BUDGET_CELLS")) {
      try {
        return std::min<std::size_t>(chosen, std::stoull(env));
      } catch (const std::exception&) {
        throw DomainError(std::string("HOMTOPO_BUDGET_CELLS is not a number: ") + env);
      }
    }
    return chosen;
  }
};

void emit(const Global& g, const ordered_json& j, const std::string& table) {
  if (g.pretty) std::cout << table;
  else std::cout << j.dump() << "\n";
}

std::vector<std::size_t> parse_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(std::stoul(item));
    } catch (const std::exception&) {
      throw DomainError("expected a comma-separated list of integers, got '" + text + "'");
    }
  }
  return out;
}

GraphMap parse_map(const std::string& text) {
  GraphMap out;
  for (auto v : parse_list(text)) out.push_back(static_cast<int>(v));
  return out;
}

std::string row(const std::string& key, const std::string& value) {
  std::ostringstream out;
  out << std::left << std::setw(16) << key << value << "\n";
  return out.str();
}

template <class V>
std::string spaced(const V& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
  return out.str();
}

ordered_json graph_json(const Graph& g) { return ordered_json::parse(graph_to_json(g)); }

// --- hom ----------------------------------------------------------------------

struct HomArgs {
  std::string source;
  std::string target;
  bool betti = false;
  bool components = false;
  bool fvector = false;
  bool cells = false;
  int max_dim = -1;
};

int cmd_hom(const Global& g, const HomArgs& a) {
  const HomComplex c = HomComplex::build(load_graph(a.source), load_graph(a.target), {g.cells(), a.max_dim});
  const bool any = a.betti || a.components || a.fvector || a.cells;
  ordered_json j;
  j["source"] = a.source;
  j["target"] = a.target;
  std::string table;
  if (a.fvector || !any) {
    j["f_vector"] = c.f_vector();
    table += row("f-vector", spaced(c.f_vector()));
  }
  if (a.betti) {
    const auto b = trimmed(betti_gf2(c.face_poset()).betti);
    j["betti"] = b;
    table += row("betti", spaced(b));
  }
  if (a.components) {
    const auto n = connected_components(c.face_poset());
    j["components"] = n;
    table += row("components", std::to_string(n));
  }
  if (a.cells) {
    j["cells"] = ordered_json::parse(complex_json(c, true))["cells"];
    for (CellId id = 0; id < c.size(); ++id) {
      std::string cell;
      for (VertexSet s : c.cell(id)) cell += "{" + spaced(s.to_vector()) + "}";
      table += row("cell " + std::to_string(id), cell);
    }
  }
  emit(g, j, table);
  return kPass;
}

// --- reduce ---------------------------------------------------------------------

struct ReduceArgs {
  std::string graph;
  int vertex = -1;
  bool random = false;
  std::uint64_t seed = 0;
  std::string gamma;
};

std::string trace_table(const ReductionTrace& t) {
  std::string out;
  for (auto [v, u] : t.removed) out += row("fold", std::to_string(v) + " (dominated by " + std::to_string(u) + ")");
  out += row("core vertices", spaced(t.core_vertices));
  return out;
}

int cmd_reduce_core(const Global& g, const ReduceArgs& a) {
  const Graph graph = load_graph(a.graph);
  CorePolicy policy;
  if (a.random) policy = {CorePolicy::Kind::random, a.seed};
  const CoreResult r = irreducible_core(graph, policy);
  ordered_json j;
  j["core"] = graph_json(r.core);
  j["trace"] = ordered_json::parse(trace_json(r.trace));
  emit(g, j, trace_table(r.trace) + row("core", describe(r.core)));
  return kPass;
}

int cmd_reduce_fold(const Global& g, const ReduceArgs& a) {
  const FoldStep s = fold(load_graph(a.graph), a.vertex);
  ordered_json j;
  j["vertex"] = a.vertex;
  j["dominator"] = s.dominator;
  j["graph"] = graph_json(s.graph);
  emit(g, j, row("dominator", std::to_string(s.dominator)) + row("result", describe(s.graph)));
  return kPass;
}

int cmd_reduce_dominated(const Global& g, const ReduceArgs& a) {
  ordered_json list = ordered_json::array();
  std::string table;
  for (const auto& d : dominated_pairs(load_graph(a.graph))) {
    const char* kind = d.kind == DominationKind::equivalent ? "equivalent" : "strong";
    list.push_back({{"dominated", d.dominated}, {"dominator", d.dominator}, {"kind", kind}});
    table += row(std::to_string(d.dominated) + " <= " + std::to_string(d.dominator), kind);
  }
  emit(g, ordered_json{{"pairs", list}}, table.empty() ? "no dominated vertices\n" : table);
  return kPass;
}

int cmd_reduce_invariant(const Global& g, const ReduceArgs& a) {
  const InvariantCoreResult r = invariant_core(load_graph(a.graph), parse_map(a.gamma));
  ordered_json j;
  j["s"] = r.s.to_vector();
  j["core"] = graph_json(r.core);
  j["trace"] = ordered_json::parse(trace_json(r.trace));
  emit(g, j, trace_table(r.trace) + row("invariant set", spaced(r.s.to_vector())));
  return kPass;
}

// --- morse ----------------------------------------------------------------------

struct MorseArgs {
  int m = 0;
  int n = 0;
  std::string graph;
};

int cmd_morse_kmn(const Global& g, const MorseArgs& a) {
  const KmnReport r = verify_kmn(a.m, a.n, g.cells());
  ordered_json j = ordered_json::parse(matching_json(r));
  j["a1_cells"] = r.a1_cells;
  j["critical_isomorphic"] = r.critical_isomorphic;
  j["a1_betti"] = trimmed(r.a1_betti.betti);
  j["critical_betti"] = trimmed(r.critical_betti.betti);
  const std::string table = row("A_1 cells", std::to_string(r.a1_cells)) +
                            row("matched pairs", std::to_string(r.matched_pairs)) +
                            row("critical", std::to_string(r.critical)) + row("acyclic", r.acyclic ? "yes" : "no") +
                            row("critical = Hom", r.critical_isomorphic ? "yes" : "no") +
                            row("A_1 betti", spaced(trimmed(r.a1_betti.betti)));
  emit(g, j, table);
  return r.acyclic && r.critical_isomorphic ? kPass : kFail;
}

int cmd_morse_quillen(const Global& g, const MorseArgs& a) {
  const PosetMap f = neighborhood_map(load_graph(a.graph), g.cells());
  const QuillenResult b = check_quillen_B(f);
  const QuillenResult bop = check_quillen_B_op(f);
  const auto fibers = check_quillen_A_proxy(f);
  const bool coned = all_fibers_coned(fibers);
  ordered_json j;
  j["order_preserving"] = is_order_preserving(f);
  j["condition_B"] = b.ok;
  j["condition_B_op"] = bop.ok;
  j["fibers_coned"] = coned;
  if (b.witness) j["witness"] = {b.witness->first, b.witness->second};
  emit(g, j,
       row("condition B", b.ok ? "yes" : "no") + row("condition B op", bop.ok ? "yes" : "no") +
           row("fibers coned", coned ? "yes" : "no"));
  return kPass;
}

// --- equivariant ------------------------------------------------------------------

struct EquivArgs {
  std::string graph;
  int m = 2;
  int cap = 8;
  std::string source;
  std::string target;
  std::string gamma;
  std::uint64_t seed = 0;
};

int cmd_equivariant_bound(const Global& g, const EquivArgs& a) {
  const ColoringBound b = coloring_bound(load_graph(a.graph), a.m, a.cap, g.cells());
  emit(g, ordered_json::parse(equivariant_json(b)),
       row("free", b.free ? "yes" : "no") + row("quotient betti", spaced(b.quotient_betti)) +
           row("sw height", std::to_string(b.sw_height)) + row("bound", std::to_string(b.bound)));
  return kPass;
}

int cmd_equivariant_quotient(const Global& g, const EquivArgs& a) {
  const HomComplex c = HomComplex::build(load_graph(a.source), load_graph(a.target), {g.cells(), -1});
  const Involution inv = induced_involution(c, parse_map(a.gamma));
  ordered_json j;
  j["free"] = inv.is_free();
  if (!inv.is_free()) {
    j["fixed_cell"] = *inv.fixed_point();
    emit(g, j, row("free", "no") + row("fixed cell", std::to_string(*inv.fixed_point())));
    return kPass;
  }
  const QuotientComplex q = quotient(c.face_poset(), inv, a.seed, g.cells());
  const auto b = trimmed(quotient_betti(q).betti);
  const int h = sw_height(q, a.cap);
  j["quotient_betti"] = b;
  j["sw_height"] = h;
  emit(g, j, row("free", "yes") + row("quotient betti", spaced(b)) + row("sw height", std::to_string(h)));
  return kPass;
}

// --- formulas ----------------------------------------------------------------------

struct FormulaArgs {
  int m = 0;
  int n = 0;
  int t = 0;
  int max_m = 0;
  int max_n = 0;
  std::string method = "closed";
};

WedgeMethod method_of(const std::string& s) {
  if (s == "recurrence") return WedgeMethod::recurrence;
  if (s == "closed") return WedgeMethod::closed;
  if (s == "stirling") return WedgeMethod::stirling;
  throw DomainError("unknown method '" + s + "' (recurrence, closed, stirling)");
}

int cmd_formulas_f(const Global& g, const FormulaArgs& a) {
  const BigInt f = f_wedge(a.m, a.n, method_of(a.method));
  // Values beyond 64 bits are emitted as strings.
  ordered_json j;
  j["m"] = a.m;
  j["n"] = a.n;
  if (f <= BigInt(std::numeric_limits<long long>::max())) j["f"] = static_cast<long long>(f);
  else j["f"] = f.str();
  emit(g, j, row("f(" + std::to_string(a.m) + "," + std::to_string(a.n) + ")", f.str()));
  return kPass;
}

int cmd_formulas_chi(const Global& g, const FormulaArgs& a) {
  const BigInt chi = chi_hom(a.m, a.n);
  ordered_json j{{"m", a.m}, {"n", a.n}, {"chi", chi.str()}};
  emit(g, j, row("chi", chi.str()));
  return kPass;
}

int cmd_formulas_cycle(const Global& g, const FormulaArgs& a) {
  const long long c = cycle_components(a.t);
  emit(g, ordered_json{{"t", a.t}, {"components", c}}, row("c_" + std::to_string(a.t), std::to_string(c)));
  return kPass;
}

int cmd_formulas_table(const Global& g, const FormulaArgs& a) {
  if (a.max_m < 1 || a.max_n < a.max_m || a.max_n > 30) throw DomainError("need 1 <= --max-m <= --max-n <= 30");
  // rows m = 1..max_m, columns n = m..max_n
  ordered_json rows = ordered_json::array();
  std::ostringstream table;
  table << std::setw(4) << "m\\n";
  for (int n = 1; n <= a.max_n; ++n) table << " " << std::setw(12) << n;
  table << "\n";
  for (int m = 1; m <= a.max_m; ++m) {
    ordered_json r = ordered_json::array();
    table << std::setw(4) << m;
    for (int n = 1; n <= a.max_n; ++n) {
      if (n < m) {
        table << " " << std::setw(12) << "";
        continue;
      }
      const std::string v = f_wedge(m, n, method_of(a.method)).str();
      r.push_back(v);
      table << " " << std::setw(12) << v;
    }
    rows.push_back(ordered_json{{"m", m}, {"f", std::move(r)}});
    table << "\n";
  }
  emit(g, ordered_json{{"max_m", a.max_m}, {"max_n", a.max_n}, {"rows", rows}}, table.str());
  return kPass;
}

int cmd_formulas_f_or_table(const Global& g, const FormulaArgs& a) {
  if (a.max_m > 0 || a.max_n > 0) {
    if (a.m > 0 || a.n > 0) throw DomainError("give either --m/--n or --max-m/--max-n");
    return cmd_formulas_table(g, a);
  }
  if (a.m < 1 || a.n < 1) throw DomainError("formulas f needs --m and --n, or --max-m and --max-n");
  return cmd_formulas_f(g, a);
}

// --- verify --------------------------------------------------------------------------

struct VerifyArgs {
  std::string suite = "fast";
  std::vector<std::string> only;
  std::string json_path;
  bool stable = false;
};

int cmd_verify(const Global& g, const VerifyArgs& a) {
  VerifyOptions opts;
  opts.suite = a.suite == "full" ? Suite::full : Suite::fast;
  opts.only = a.only;
  // verify has its own per-check caps; only an explicit budget lowers them
  opts.budget = g.cells(std::numeric_limits<std::size_t>::max());
  opts.jobs = g.jobs;
  const VerificationReport r = run_verification(opts);
  const std::string json = r.to_json(a.stable);
  if (!a.json_path.empty()) {
    std::ofstream out(a.json_path);
    if (!out) throw DomainError("cannot write " + a.json_path);
    out << json << "\n";
  }
  if (g.pretty) std::cout << r.to_text(a.stable);
  else std::cout << json << "\n";
  return r.all_pass() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hom complexes of graphs: construction, homology, folds, Morse matchings and Z/2 bounds"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value file with defaults for the global options");
  Global g;
  app.add_flag("--pretty", g.pretty, "Human-readable tables instead of JSON");
  app.add_option("--budget", g.budget, "Maximum number of cells in any complex (default 5000000)");
  app.add_option("--jobs", g.jobs, "Worker threads for verify (0 = all cores)");

  int code = kPass;
  auto run = [&](auto fn, const auto& args) { return [&, fn] { code = fn(g, args); }; };

  HomArgs hom;
  auto* h = app.add_subcommand("hom", "Build Hom(G,H) and report invariants")->fallthrough();
  h->add_option("--source", hom.source, "Graph G (family name, corpus name or file)")->required();
  h->add_option("--target", hom.target, "Graph H")->required();
  h->add_flag("--betti", hom.betti, "GF(2) Betti numbers");
  h->add_flag("--components", hom.components, "Connected components");
  h->add_flag("--fvector", hom.fvector, "Cells per dimension (default)");
  h->add_flag("--emit-cells,--cells", hom.cells, "List every cell");
  h->add_option("--max-dim", hom.max_dim, "Only build cells up to this dimension");
  h->callback(run(cmd_hom, hom));

  ReduceArgs red;
  auto* r = app.add_subcommand("reduce", "Folds and irreducible cores")->fallthrough()->require_subcommand(1);
  auto* rc = r->add_subcommand("core", "Fold down to an irreducible core")->fallthrough();
  rc->add_option("--graph", red.graph)->required();
  rc->add_flag("--random", red.random, "Random tie-breaking");
  rc->add_option("--seed", red.seed);
  rc->callback(run(cmd_reduce_core, red));
  auto* rf = r->add_subcommand("fold", "Remove one dominated vertex")->fallthrough();
  rf->add_option("--graph", red.graph)->required();
  rf->add_option("--vertex", red.vertex)->required();
  rf->callback(run(cmd_reduce_fold, red));
  auto* rd = r->add_subcommand("dominated", "List dominated vertices")->fallthrough();
  rd->add_option("--graph", red.graph)->required();
  rd->callback(run(cmd_reduce_dominated, red));
  auto* ri = r->add_subcommand("invariant", "Involution-invariant reduction")->fallthrough();
  ri->add_option("--graph", red.graph)->required();
  ri->add_option("--gamma", red.gamma, "Involution as comma-separated images")->required();
  ri->callback(run(cmd_reduce_invariant, red));

  MorseArgs mo;
  auto* mc = app.add_subcommand("morse", "Acyclic matchings and Quillen checks")->fallthrough()->require_subcommand(1);
  auto* mk = mc->add_subcommand("kmn", "Matching on Hom(K_m,K_n)")->fallthrough();
  mk->add_option("--m", mo.m)->required();
  mk->add_option("--n", mo.n)->required();
  mk->callback(run(cmd_morse_kmn, mo));
  auto* mq = mc->add_subcommand("quillen", "Hom(K_2,G) -> N(G) fiber checks")->fallthrough();
  mq->add_option("--graph", mo.graph)->required();
  mq->callback(run(cmd_morse_quillen, mo));

  EquivArgs eq;
  auto* ec = app.add_subcommand("equivariant", "Free involutions and coloring bounds")->fallthrough()->require_subcommand(1);
  auto* eb = ec->add_subcommand("bound", "Lower bound for the chromatic number")->fallthrough();
  eb->add_option("--graph", eq.graph)->required();
  eb->add_option("--m", eq.m)->capture_default_str();
  eb->add_option("--cap", eq.cap, "Largest height tested")->capture_default_str();
  eb->callback(run(cmd_equivariant_bound, eq));
  auto* eqq = ec->add_subcommand("quotient", "Quotient of Hom(G,H) by an involution of G")->fallthrough();
  eqq->add_option("--source", eq.source)->required();
  eqq->add_option("--target", eq.target)->required();
  eqq->add_option("--gamma", eq.gamma, "Involution of the source as comma-separated images")->required();
  eqq->add_option("--cap", eq.cap)->capture_default_str();
  eqq->add_option("--seed", eq.seed, "Varies the choice of orbit representatives");
  eqq->callback(run(cmd_equivariant_quotient, eq));

  FormulaArgs fo;
  auto* fc = app.add_subcommand("formulas", "Closed forms")->fallthrough()->require_subcommand(1);
  auto* ff = fc->add_subcommand("f", "Spheres in the wedge Hom(K_m,K_n)")->fallthrough();
  ff->add_option("--m", fo.m);
  ff->add_option("--n", fo.n);
  ff->add_option("--max-m", fo.max_m, "Print the triangle of f up to this m");
  ff->add_option("--max-n", fo.max_n, "Print the triangle of f up to this n");
  ff->add_option("--method", fo.method, "recurrence, closed or stirling")->capture_default_str();
  ff->callback(run(cmd_formulas_f_or_table, fo));
  auto* fx = fc->add_subcommand("chi", "Euler characteristic of Hom(K_m,K_n)")->fallthrough();
  fx->add_option("--m", fo.m)->required();
  fx->add_option("--n", fo.n)->required();
  fx->callback(run(cmd_formulas_chi, fo));
  auto* fy = fc->add_subcommand("cycle", "Components of Hom(C_t,K_3)")->fallthrough();
  fy->add_option("--t", fo.t)->required();
  fy->callback(run(cmd_formulas_cycle, fo));

  VerifyArgs ve;
  auto* v = app.add_subcommand("verify", "Run the acceptance checks")->fallthrough();
  v->add_option("suite", ve.suite, "fast or full")->check(CLI::IsMember({"fast", "full"}))->capture_default_str();
  v->add_option("--only", ve.only, "Run only the named checks")->check(CLI::IsMember(criterion_names()));
  v->add_option("--json", ve.json_path, "Also write the JSON report to this file");
  v->add_flag("--stable", ve.stable, "Omit timings so output is reproducible");
  v->callback(run(cmd_verify, ve));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  } catch (const ResourceError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kFail;
  }
  return code;
}
