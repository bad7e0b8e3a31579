#pragma once

#include <string>
#include <vector>

#include "graphreal/bound_engine.hpp"
#include "graphreal/cut_bounds.hpp"
#include "graphreal/fixtures.hpp"
#include "graphreal/model.hpp"
#include "graphreal/vc_search.hpp"
#include "json.hpp"

namespace graphreal::cli::report {

using json = nlohmann::ordered_json;

json labels(const Graph& g, VertexSet s);
json complexity(const ComplexityReport& m);
json minimal_tree(const LinearCode& code, const CodeTreeDecomposition& td, const GraphicalModel& model);
json tree_decomposition(const CodeTreeDecomposition& td);
json cut(const Graph& g, const CutBoundResult& res);
json certificate(const LinearCode& code, const Graph& g, const VertexCutTree& vct,
                 const LowerBoundCertificate& cert);
json corollary(const CorollaryReport& r);
json width(const Graph& g, const WidthResult& res);
json expected(const std::vector<ExpectedValue>& values);

/// Graph with vertex labels annotated by constraint dims and edge labels by state dims.
std::string model_dot(const GraphicalModel& model);
/// Tree nodes annotated with their bags (and m(z) when given).
std::string vctree_dot(const Graph& g, const VertexCutTree& vct, const std::vector<std::size_t>* m);

}  // namespace graphreal::cli::report
