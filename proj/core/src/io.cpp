#include "homtopo/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "homtopo/corpus.hpp"
#include "homtopo/errors.hpp"
#include "json.hpp"

namespace homtopo {

using json = nlohmann::ordered_json;

namespace {

Graph from_edges_checked(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0 || n > kMaxVertices) throw DomainError("graph must have between 0 and 64 vertices");
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw DomainError("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range");
    }
  }
  return Graph::from_edges(n, edges);
}

int parameter(const std::string& spec, std::size_t offset) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(spec.substr(offset), &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || offset + used != spec.size()) throw DomainError("bad parameter in graph name '" + spec + "'");
  return value;
}

std::string dump(const json& j, int indent) { return j.dump(indent) + "\n"; }

}  // namespace

Graph parse_graph_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    const int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw DomainError("each edge must be a pair [u, v]");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return from_edges_checked(n, edges);
  } catch (const json::exception& e) {
    throw DomainError(std::string("graph JSON: ") + e.what());
  }
}

std::string graph_to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return dump(json{{"n", g.order()}, {"edges", edges}}, -1);
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;
    if (n < 0) {
      if (first != "n" || !(fields >> n)) throw DomainError("edge list must start with 'n <count>'");
      continue;
    }
    int u = 0;
    int v = 0;
    try {
      u = std::stoi(first);
    } catch (const std::exception&) {
      throw DomainError("edge list line " + std::to_string(line_no) + ": expected 'u v'");
    }
    if (!(fields >> v)) throw DomainError("edge list line " + std::to_string(line_no) + ": expected 'u v'");
    edges.emplace_back(u, v);
  }
  if (n < 0) throw DomainError("edge list is missing the 'n <count>' header");
  return from_edges_checked(n, edges);
}

std::string graph_to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.order() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

Graph load_graph(const std::string& spec) {
  if (std::filesystem::is_regular_file(spec)) {
    std::ifstream file(spec);
    std::stringstream buffer;
    buffer << file.rdbuf();
    const std::string text = buffer.str();
    const auto start = text.find_first_not_of(" \t\r\n");
    if (start != std::string::npos && text[start] == '{') return parse_graph_json(text);
    return parse_edge_list(text);
  }
  for (auto& ng : named_corpus())
    if (ng.name == spec) return ng.graph;
  if (spec.rfind("wheel:", 0) == 0) return wheel_graph(parameter(spec, 6));
  if (spec.rfind("prism:", 0) == 0) return prism_graph(parameter(spec, 6));
  return make_family(spec);
}

std::string complex_json(const HomComplex& c, bool emit_cells, int indent) {
  json j;
  j["f_vector"] = c.f_vector();
  if (emit_cells) {
    json cells = json::array();
    for (CellId id = 0; id < c.size(); ++id) {
      json cell = json::array();
      for (VertexSet s : c.cell(id)) cell.push_back(s.bits());
      cells.push_back(std::move(cell));
    }
    j["cells"] = std::move(cells);
  }
  return dump(j, indent);
}

std::string betti_json(const BettiProfile& b, int indent) {
  return dump(json{{"betti", b.betti}, {"euler", b.euler}, {"f_vector", b.f_vector}}, indent);
}

std::string matching_json(const KmnReport& r, int indent) {
  return dump(json{{"acyclic", r.acyclic}, {"critical", r.critical}, {"matched_pairs", r.matched_pairs}}, indent);
}

std::string trace_json(const ReductionTrace& t, int indent) {
  json removed = json::array();
  for (auto [v, u] : t.removed) removed.push_back({v, u});
  return dump(json{{"removed", removed}, {"core_vertices", t.core_vertices}}, indent);
}

std::string equivariant_json(const ColoringBound& b, int indent) {
  return dump(json{{"free", b.free}, {"quotient_betti", b.quotient_betti}, {"sw_height", b.sw_height}, {"bound", b.bound}},
              indent);
}

}  // namespace homtopo
