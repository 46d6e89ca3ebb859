#pragma once

#include <string>
#include <string_view>

#include "homtopo/equivariant.hpp"
#include "homtopo/folds.hpp"
#include "homtopo/graphs.hpp"
#include "homtopo/homcx.hpp"
#include "homtopo/morse.hpp"
#include "homtopo/topology.hpp"

namespace homtopo {

// Parsers throw DomainError on malformed input.

/// {"n": int, "edges": [[u, v], ...]}; u == v is a loop.
Graph parse_graph_json(std::string_view text);
std::string graph_to_json(const Graph& g);
/// Header line "n <count>", then one "u v" pair per line. '#' starts a comment.
Graph parse_edge_list(std::string_view text);
std::string graph_to_edge_list(const Graph& g);

/// A corpus or family name ("K5", "Kneser:2,5", "K3,3", "wheel:5"), or a path
/// to a JSON or edge-list file.
Graph load_graph(const std::string& spec);

/// `indent` < 0 gives compact output.
std::string complex_json(const HomComplex& c, bool emit_cells, int indent = -1);
std::string betti_json(const BettiProfile& b, int indent = -1);
std::string matching_json(const KmnReport& r, int indent = -1);
std::string trace_json(const ReductionTrace& t, int indent = -1);
std::string equivariant_json(const ColoringBound& b, int indent = -1);

}  // namespace homtopo
