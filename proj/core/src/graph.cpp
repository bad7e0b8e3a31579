#include "graphreal/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "graphreal/tree.hpp"

namespace graphreal {

Graph::Graph(std::vector<std::string> vertices,
             const std::vector<std::pair<std::string, std::string>>& edges)
    : labels_(std::move(vertices)) {
  if (labels_.size() > kMaxVertices) {
    throw ValidationError("graphs are limited to " + std::to_string(kMaxVertices) + " vertices");
  }
  for (VertexId v = 0; v < labels_.size(); ++v) {
    if (!lookup_.emplace(labels_[v], v).second) {
      throw ValidationError("duplicate vertex label '" + labels_[v] + "'");
    }
  }
  std::vector<Edge> ids;
  ids.reserve(edges.size());
  for (const auto& [a, b] : edges) ids.push_back({id(a), id(b)});
  build(ids);
}

Graph::Graph(std::vector<std::string> vertices, const std::vector<Edge>& edges)
    : labels_(std::move(vertices)) {
  if (labels_.size() > kMaxVertices) {
    throw ValidationError("graphs are limited to " + std::to_string(kMaxVertices) + " vertices");
  }
  for (VertexId v = 0; v < labels_.size(); ++v) {
    if (!lookup_.emplace(labels_[v], v).second) {
      throw ValidationError("duplicate vertex label '" + labels_[v] + "'");
    }
  }
  build(edges);
}

void Graph::build(const std::vector<Edge>& edges) {
  incident_.assign(labels_.size(), {});
  adjacency_.assign(labels_.size(), VertexSet{});
  for (const auto& e : edges) {
    if (e.u >= labels_.size() || e.v >= labels_.size()) throw ValidationError("edge endpoint out of range");
    if (e.u == e.v) throw ValidationError("self-loop at '" + labels_[e.u] + "'");
    if (adjacency_[e.u].contains(e.v)) {
      throw ValidationError("parallel edge between '" + labels_[e.u] + "' and '" + labels_[e.v] + "'");
    }
    const EdgeId id = edges_.size();
    edges_.push_back(e);
    incident_[e.u].push_back(id);
    incident_[e.v].push_back(id);
    adjacency_[e.u].insert(e.v);
    adjacency_[e.v].insert(e.u);
  }
}

std::optional<VertexId> Graph::find(std::string_view label) const {
  auto it = lookup_.find(std::string(label));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

VertexId Graph::id(std::string_view label) const {
  if (auto v = find(label)) return *v;
  throw ValidationError("unknown vertex '" + std::string(label) + "'");
}

VertexSet Graph::ids(std::span<const std::string> labels) const {
  VertexSet s;
  for (const auto& l : labels) s.insert(id(l));
  return s;
}

std::vector<std::string> Graph::labels_of(VertexSet s) const {
  std::vector<std::string> out;
  for (auto v : s.to_vector()) out.push_back(labels_[v]);
  return out;
}

std::optional<EdgeId> Graph::edge_between(VertexId a, VertexId b) const {
  for (auto e : incident_[a]) {
    if (edges_[e].other(a) == b) return e;
  }
  return std::nullopt;
}

VertexSet Graph::neighborhood(VertexSet w) const {
  VertexSet out;
  for (auto v : w.to_vector()) out |= adjacency_[v];
  return out;
}

std::vector<VertexSet> Graph::components(VertexSet alive) const {
  std::vector<VertexSet> out;
  VertexSet unseen = alive;
  while (!unseen.empty()) {
    VertexSet comp = VertexSet::single(unseen.front());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      const VertexSet next = (neighborhood(frontier) & alive) - comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    unseen -= comp;
  }
  return out;
}

std::vector<VertexSet> Graph::components_without_edges(std::span<const EdgeId> removed) const {
  std::vector<bool> gone(edges_.size(), false);
  for (auto e : removed) {
    if (e >= edges_.size()) throw ValidationError("unknown edge id " + std::to_string(e));
    gone[e] = true;
  }
  std::vector<VertexId> parent(labels_.size());
  std::iota(parent.begin(), parent.end(), VertexId{0});
  auto root = [&](VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    if (gone[e]) continue;
    const auto a = root(edges_[e].u);
    const auto b = root(edges_[e].v);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<VertexSet> by_root(labels_.size());
  for (VertexId v = 0; v < labels_.size(); ++v) by_root[root(v)].insert(v);
  std::vector<VertexSet> out;
  for (const auto& s : by_root) {
    if (!s.empty()) out.push_back(s);
  }
  return out;
}

bool Graph::connected() const { return components(all()).size() <= 1; }

VertexId Graph::least_vertex() const {
  if (labels_.empty()) throw ValidationError("empty graph has no least vertex");
  return static_cast<VertexId>(std::min_element(labels_.begin(), labels_.end()) - labels_.begin());
}

std::string Graph::to_dot(std::string_view name) const {
  std::ostringstream os;
  os << "graph \"" << name << "\" {\n";
  for (const auto& l : labels_) os << "  \"" << l << "\";\n";
  for (const auto& e : edges_) os << "  \"" << labels_[e.u] << "\" -- \"" << labels_[e.v] << "\";\n";
  os << "}\n";
  return os.str();
}

namespace {

Graph induced_without(const Graph& g, VertexSet removed, std::span<const EdgeId> removed_edges) {
  std::vector<bool> gone(g.edge_count(), false);
  for (auto e : removed_edges) gone[e] = true;
  std::vector<std::string> labels;
  std::vector<VertexId> new_id(g.vertex_count(), 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (removed.contains(v)) continue;
    new_id[v] = labels.size();
    labels.push_back(g.label(v));
  }
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    if (gone[e] || removed.contains(ed.u) || removed.contains(ed.v)) continue;
    edges.push_back({new_id[ed.u], new_id[ed.v]});
  }
  return Graph(std::move(labels), edges);
}

}  // namespace

Split delete_vertices(const Graph& g, VertexSet removed) {
  if (!removed.subset_of(g.all())) throw ValidationError("delete_vertices: unknown vertex");
  return {induced_without(g, removed, {}), g.components(g.all() - removed)};
}

Split delete_edges(const Graph& g, std::span<const EdgeId> removed) {
  for (auto e : removed) {
    if (e >= g.edge_count()) throw ValidationError("delete_edges: unknown edge id " + std::to_string(e));
  }
  return {induced_without(g, VertexSet{}, removed), g.components_without_edges(removed)};
}

Check validate_star_partition(const Graph& g, const StarPartition& sp) {
  const VertexSet all = g.all();
  if (!sp.center.subset_of(all)) return Check::fail("V0 contains an unknown vertex");
  VertexSet covered = sp.center;
  for (std::size_t i = 0; i < sp.parts.size(); ++i) {
    const VertexSet part = sp.parts[i];
    if (!part.subset_of(all)) return Check::fail("V" + std::to_string(i + 1) + " contains an unknown vertex");
    if (part.intersects(covered)) {
      const VertexId v = (part & covered).front();
      return Check::fail("vertex '" + g.label(v) + "' appears in V" + std::to_string(i + 1) +
                         " and an earlier set");
    }
    covered |= part;
  }
  if (covered != all) {
    return Check::fail("vertex '" + g.label((all - covered).front()) + "' is not covered");
  }
  for (std::size_t i = 0; i < sp.parts.size(); ++i) {
    const VertexSet allowed = sp.parts[i] | sp.center;
    for (auto v : sp.parts[i].to_vector()) {
      const VertexSet bad = g.neighbors(v) - allowed;
      if (!bad.empty()) {
        return Check::fail("part V" + std::to_string(i + 1) + ": vertex '" + g.label(v) +
                           "' has neighbour '" + g.label(bad.front()) + "' outside V" +
                           std::to_string(i + 1) + " u V0");
      }
    }
  }
  return Check::pass();
}

StarPartition star_partition_from_cut(const Graph& g, VertexSet w) {
  return {w, g.components(g.all() - w)};
}

bool is_biconnected(const Graph& g) {
  if (g.vertex_count() < 3 || !g.connected()) return false;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.components(g.all() - VertexSet::single(v)).size() > 1) return false;
  }
  return true;
}

Tree spanning_tree(const Graph& g) {
  if (g.vertex_count() == 0) throw ValidationError("spanning tree of an empty graph");
  if (!g.connected()) throw ValidationError("spanning tree requested for a disconnected graph");
  std::vector<Edge> tree_edges;
  VertexSet seen = VertexSet::single(g.least_vertex());
  std::deque<VertexId> queue{g.least_vertex()};
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    auto next = g.neighbors(v).to_vector();
    std::sort(next.begin(), next.end(), [&](VertexId a, VertexId b) { return g.label(a) < g.label(b); });
    for (auto u : next) {
      if (seen.contains(u)) continue;
      seen.insert(u);
      tree_edges.push_back({v, u});
      queue.push_back(u);
    }
  }
  return Tree(Graph(g.labels(), tree_edges));
}

}  // namespace graphreal
