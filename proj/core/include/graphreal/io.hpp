#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "graphreal/minimal.hpp"
#include "graphreal/model.hpp"
#include "graphreal/vctree.hpp"

namespace graphreal {

/// Parsers throw ValidationError naming the source, and either the line and
/// column of a syntax error or the offending field.
std::string read_text_file(const std::string& path);

/// {"field": q, "index_set": [...], "generators": [[...], ...]}
LinearCode parse_code(std::string_view text, std::string_view source = "code");
std::string code_to_json(const LinearCode& code);

/// {"vertices": [...], "edges": [["a","b"], ...]}
Graph parse_graph(std::string_view text, std::string_view source = "graph");
std::string graph_to_json(const Graph& g);

/// {"omega": {"<coordinate>": "<vertex>", ...}}, one entry per coordinate.
GraphDecomposition parse_omega(std::string_view text, const Graph& g, const LinearCode& code,
                               std::string_view source = "omega");
std::string omega_to_json(const GraphDecomposition& d);

/// A graph file that must describe a tree.
Tree parse_tree(std::string_view text, std::string_view source = "tree");

/// {"nodes": [...], "edges": [[...], ...], "bags": {"<node>": [vertices]}}
VertexCutTree parse_vctree(std::string_view text, const Graph& target, std::string_view source = "vctree");
std::string vctree_to_json(const Graph& target, const VertexCutTree& vct);

/// {"cuts": [[vertices], ...]}
std::vector<VertexSet> parse_cuts(std::string_view text, const Graph& g, std::string_view source = "cuts");

/// Decomposition inline, per-edge state dimensions in edge order, and per
/// vertex the generator rows over its local index order.
GraphicalModel parse_realization(std::string_view text, std::string_view source = "realization");
std::string realization_to_json(const GraphicalModel& model);

}  // namespace graphreal
