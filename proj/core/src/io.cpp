#include "graphreal/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace graphreal {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string where(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

json load(std::string_view text, std::string_view source) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string(source) + ": malformed JSON at " + where(text, e.byte == 0 ? 0 : e.byte - 1));
  }
}

[[noreturn]] void bad(std::string_view source, const std::string& field, const std::string& what) {
  throw ValidationError(std::string(source) + ": field '" + field + "': " + what);
}

const json& member(const json& j, const char* key, std::string_view source, const std::string& prefix = "") {
  if (!j.is_object()) bad(source, prefix.empty() ? "<root>" : prefix, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(source, prefix + key, "missing");
  return *it;
}

std::string str(const json& j, std::string_view source, const std::string& field) {
  if (!j.is_string()) bad(source, field, "expected a string");
  return j.get<std::string>();
}

std::uint64_t uint(const json& j, std::string_view source, const std::string& field) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    bad(source, field, "expected a nonnegative integer");
  }
  return j.get<std::uint64_t>();
}

std::vector<std::string> strings(const json& j, std::string_view source, const std::string& field) {
  if (!j.is_array()) bad(source, field, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(str(j[i], source, field + "[" + std::to_string(i) + "]"));
  return out;
}

Matrix matrix(const json& j, Field f, std::size_t cols, std::string_view source, const std::string& field) {
  if (!j.is_array()) bad(source, field, "expected an array of rows");
  Matrix m(f, 0, cols);
  std::vector<Element> row;
  for (std::size_t r = 0; r < j.size(); ++r) {
    const std::string rf = field + "[" + std::to_string(r) + "]";
    if (!j[r].is_array()) bad(source, rf, "expected a row array");
    if (j[r].size() != cols) {
      bad(source, rf, "row has " + std::to_string(j[r].size()) + " entries, expected " + std::to_string(cols));
    }
    row.clear();
    for (std::size_t c = 0; c < cols; ++c) {
      const auto v = uint(j[r][c], source, rf + "[" + std::to_string(c) + "]");
      if (!f.contains(v)) bad(source, rf + "[" + std::to_string(c) + "]", "entry is not below the field order");
      row.push_back(static_cast<Element>(v));
    }
    m.append_row(row);
  }
  return m;
}

Field field_of(const json& j, std::string_view source, const std::string& field) {
  const auto q = uint(j, source, field);
  if (q > UINT32_MAX || !is_prime(q)) bad(source, field, "field order must be a prime");
  return Field(static_cast<std::uint32_t>(q));
}

Graph graph_from(const json& j, std::string_view source, const std::string& prefix = "") {
  auto vertices = strings(member(j, "vertices", source, prefix), source, prefix + "vertices");
  const json& edges = member(j, "edges", source, prefix);
  if (!edges.is_array()) bad(source, prefix + "edges", "expected an array of pairs");
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto ends = strings(edges[i], source, prefix + "edges[" + std::to_string(i) + "]");
    if (ends.size() != 2) bad(source, prefix + "edges[" + std::to_string(i) + "]", "expected two endpoints");
    pairs.emplace_back(ends[0], ends[1]);
  }
  try {
    return Graph(std::move(vertices), pairs);
  } catch (const ValidationError& e) {
    throw ValidationError(std::string(source) + ": " + e.what());
  }
}

ordered_json graph_json(const Graph& g) {
  ordered_json j;
  j["vertices"] = g.labels();
  j["edges"] = ordered_json::array();
  for (const auto& e : g.edges()) j["edges"].push_back({g.label(e.u), g.label(e.v)});
  return j;
}

ordered_json omega_json(const GraphDecomposition& d) {
  ordered_json m = ordered_json::object();
  for (std::size_t i = 0; i < d.index_set().size(); ++i) m[d.index_set()[i]] = d.graph().label(d.omega(i));
  return m;
}

GraphDecomposition omega_from(const json& m, const Graph& g, const std::vector<std::string>& index_set,
                              std::string_view source, const std::string& field) {
  if (!m.is_object()) bad(source, field, "expected an object mapping coordinates to vertices");
  std::vector<VertexId> omega;
  for (const auto& label : index_set) {
    auto it = m.find(label);
    if (it == m.end()) bad(source, field + "." + label, "coordinate has no vertex");
    const auto v = str(*it, source, field + "." + label);
    auto id = g.find(v);
    if (!id) bad(source, field + "." + label, "unknown vertex '" + v + "'");
    omega.push_back(*id);
  }
  if (m.size() != index_set.size()) bad(source, field, "mentions coordinates outside the code");
  return GraphDecomposition(g, index_set, std::move(omega));
}

VertexSet vertex_set(const json& j, const Graph& g, std::string_view source, const std::string& field) {
  VertexSet s;
  for (const auto& l : strings(j, source, field)) {
    auto id = g.find(l);
    if (!id) bad(source, field, "unknown vertex '" + l + "'");
    s.insert(*id);
  }
  return s;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LinearCode parse_code(std::string_view text, std::string_view source) {
  const json j = load(text, source);
  const Field f = field_of(member(j, "field", source), source, "field");
  auto labels = strings(member(j, "index_set", source), source, "index_set");
  Matrix g = matrix(member(j, "generators", source), f, labels.size(), source, "generators");
  try {
    return LinearCode::canonicalize(std::move(g), std::move(labels));
  } catch (const ValidationError& e) {
    throw ValidationError(std::string(source) + ": " + e.what());
  }
}

std::string code_to_json(const LinearCode& code) {
  ordered_json j;
  j["field"] = code.field().order();
  j["index_set"] = code.index_set();
  j["generators"] = code.generators().to_rows();
  return dump(j);
}

Graph parse_graph(std::string_view text, std::string_view source) { return graph_from(load(text, source), source); }

std::string graph_to_json(const Graph& g) { return dump(graph_json(g)); }

GraphDecomposition parse_omega(std::string_view text, const Graph& g, const LinearCode& code,
                               std::string_view source) {
  const json j = load(text, source);
  return omega_from(member(j, "omega", source), g, code.index_set(), source, "omega");
}

std::string omega_to_json(const GraphDecomposition& d) {
  ordered_json j;
  j["omega"] = omega_json(d);
  return dump(j);
}

Tree parse_tree(std::string_view text, std::string_view source) {
  Graph g = parse_graph(text, source);
  try {
    return Tree(std::move(g));
  } catch (const ValidationError& e) {
    throw ValidationError(std::string(source) + ": " + e.what());
  }
}

VertexCutTree parse_vctree(std::string_view text, const Graph& target, std::string_view source) {
  const json j = load(text, source);
  json shape = {{"vertices", member(j, "nodes", source)}, {"edges", member(j, "edges", source)}};
  Graph t = graph_from(shape, source);
  Tree tree = [&] {
    try {
      return Tree(t);
    } catch (const ValidationError& e) {
      throw ValidationError(std::string(source) + ": " + e.what());
    }
  }();
  const json& bags = member(j, "bags", source);
  if (!bags.is_object()) bad(source, "bags", "expected an object mapping nodes to vertex lists");
  std::vector<VertexSet> beta(t.vertex_count());
  for (VertexId z = 0; z < t.vertex_count(); ++z) {
    auto it = bags.find(t.label(z));
    if (it == bags.end()) bad(source, "bags." + t.label(z), "node has no bag");
    beta[z] = vertex_set(*it, target, source, "bags." + t.label(z));
  }
  if (bags.size() != t.vertex_count()) bad(source, "bags", "mentions nodes outside the tree");
  return {std::move(tree), std::move(beta)};
}

std::string vctree_to_json(const Graph& target, const VertexCutTree& vct) {
  const Graph& t = vct.tree.graph();
  ordered_json j;
  j["nodes"] = t.labels();
  j["edges"] = ordered_json::array();
  for (const auto& e : t.edges()) j["edges"].push_back({t.label(e.u), t.label(e.v)});
  j["bags"] = ordered_json::object();
  for (VertexId z = 0; z < t.vertex_count(); ++z) j["bags"][t.label(z)] = target.labels_of(vct.beta[z]);
  return dump(j);
}

std::vector<VertexSet> parse_cuts(std::string_view text, const Graph& g, std::string_view source) {
  const json j = load(text, source);
  const json& cuts = member(j, "cuts", source);
  if (!cuts.is_array()) bad(source, "cuts", "expected an array of vertex lists");
  std::vector<VertexSet> out;
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    const std::string field = "cuts[" + std::to_string(i) + "]";
    out.push_back(vertex_set(cuts[i], g, source, field));
    if (out.back().empty()) bad(source, field, "cut is empty");
  }
  return out;
}

GraphicalModel parse_realization(std::string_view text, std::string_view source) {
  const json j = load(text, source);
  const Field f = field_of(member(j, "field", source), source, "field");
  auto index_set = strings(member(j, "index_set", source), source, "index_set");
  Graph g = graph_from(member(j, "graph", source), source, "graph.");
  GraphDecomposition d = [&] {
    try {
      return omega_from(member(j, "omega", source), g, index_set, source, "omega");
    } catch (const ValidationError& e) {
      const std::string what = e.what();
      if (what.rfind(std::string(source), 0) == 0) throw;
      throw ValidationError(std::string(source) + ": " + what);
    }
  }();
  const json& dims_json = member(j, "state_dims", source);
  if (!dims_json.is_array() || dims_json.size() != g.edge_count()) {
    bad(source, "state_dims", "expected one dimension per graph edge, in edge order");
  }
  std::vector<std::size_t> dims;
  for (std::size_t e = 0; e < dims_json.size(); ++e) {
    dims.push_back(uint(dims_json[e], source, "state_dims[" + std::to_string(e) + "]"));
  }
  const json& cons = member(j, "constraints", source);
  if (!cons.is_object()) bad(source, "constraints", "expected an object keyed by vertex");
  std::vector<LinearCode> constraints;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const std::string field = "constraints." + g.label(v);
    auto it = cons.find(g.label(v));
    if (it == cons.end()) bad(source, field, "vertex has no constraint");
    const auto local = GraphicalModel::local_index(d, dims, v);
    auto declared = strings(member(*it, "index", source, field + "."), source, field + ".index");
    if (declared != local) bad(source, field + ".index", "does not match the local index order of the vertex");
    Matrix m = matrix(member(*it, "generators", source, field + "."), f, local.size(), source, field + ".generators");
    constraints.push_back(LinearCode::canonicalize(std::move(m), local));
  }
  if (cons.size() != g.vertex_count()) bad(source, "constraints", "mentions vertices outside the graph");
  try {
    return GraphicalModel(std::move(d), f, std::move(dims), std::move(constraints));
  } catch (const ValidationError& e) {
    throw ValidationError(std::string(source) + ": " + e.what());
  }
}

std::string realization_to_json(const GraphicalModel& model) {
  ordered_json j;
  j["field"] = model.field().order();
  j["index_set"] = model.decomposition().index_set();
  j["graph"] = graph_json(model.graph());
  j["omega"] = omega_json(model.decomposition());
  j["state_dims"] = model.state_dims();
  j["constraints"] = ordered_json::object();
  for (VertexId v = 0; v < model.graph().vertex_count(); ++v) {
    const LinearCode& c = model.constraint(v);
    j["constraints"][model.graph().label(v)] = {{"index", c.index_set()}, {"generators", c.generators().to_rows()}};
  }
  return dump(j);
}

}  // namespace graphreal
