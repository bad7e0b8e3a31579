#include "graphreal/fixtures.hpp"

#include <algorithm>

namespace graphreal {

const ExpectedValue* Fixture::find(std::string_view key) const {
  for (const auto& e : expected) {
    if (e.key == key) return &e;
  }
  return nullptr;
}

Graph cycle_graph(std::size_t n, std::string_view prefix) {
  if (n < 3) throw ValidationError("a cycle needs at least 3 vertices");
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::string(prefix) + std::to_string(i));
    edges.push_back({i, (i + 1) % n});
  }
  return Graph(std::move(labels), edges);
}

VertexCutTree cycle_vctree(const Graph& cycle) {
  const std::size_t n = cycle.vertex_count();
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  std::vector<VertexSet> beta;
  for (std::size_t i = 1; i < n; ++i) {
    labels.push_back("z" + std::to_string(i));
    if (i > 1) edges.push_back({i - 2, i - 1});
    beta.push_back(VertexSet::of({0, i}));
  }
  return {Tree(Graph(std::move(labels), edges)), std::move(beta)};
}

namespace {

std::vector<std::string> numbered(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

LinearCode binary(const std::vector<std::string>& rows) {
  const std::size_t n = rows.front().size();
  std::vector<std::vector<std::uint64_t>> m;
  for (const auto& r : rows) {
    std::vector<std::uint64_t> row;
    for (char c : r) row.push_back(c == '1' ? 1 : 0);
    m.push_back(std::move(row));
  }
  return LinearCode::canonicalize(Matrix::from_rows(Field(2), n, m), numbered(n));
}

GraphDecomposition along(const Graph& g, const LinearCode& code, const std::vector<std::size_t>& ordering) {
  std::vector<VertexId> omega(code.length());
  for (std::size_t i = 0; i < ordering.size(); ++i) omega[ordering[i]] = i;
  return GraphDecomposition(g, code.index_set(), std::move(omega));
}

std::vector<std::size_t> identity(std::size_t n) {
  std::vector<std::size_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = i;
  return out;
}

Graph path_graph(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("p" + std::to_string(i));
    if (i > 0) edges.push_back({i - 1, i});
  }
  return Graph(std::move(labels), edges);
}

Fixture cycle11() {
  Fixture f;
  f.name = "cycle-11-3-3";
  f.description = "binary [11,3,3] code on the 11-cycle, coordinate i on vertex v{i-1}";
  f.notes = "The index map is fixed to the bijection i -> v{i-1}. Reference measures of specific "
            "realizations are listed but not checkable: those realizations are not available as data.";
  f.code = binary({"00011100000", "00000111000", "00101010100"});
  const Graph g = cycle_graph(11);
  f.ordering = identity(11);
  f.decomposition = along(g, f.code, f.ordering);
  f.vctree = cycle_vctree(g);
  f.expected = {
      {"n", 11, "published"},
      {"k", 3, "published"},
      {"d", 3, "published"},
      {"mu", 3, "computed"},
      {"theorem_bound", 2, "computed"},
      {"kappa_path_ordering", 3, "computed"},
      {"vc_tree", 2, "published"},
      {"kappa_gamma1", 2, "published", false},
      {"kappa_plus_gamma1", 14, "published", false},
      {"kappa_gamma2", 3, "published", false},
      {"kappa_plus_gamma2", 13, "published", false},
  };
  return f;
}

Fixture golay() {
  Fixture f;
  f.name = "golay-24-12-8";
  f.description = "binary [24,12,8] Golay code (a+x | b+x | a+b+x from two cyclic [8,4] Hamming codes) on the 24-cycle";
  f.notes = "Coordinates are laid around the cycle in a path ordering whose minimal trellis has "
            "kappa 9, found by local search; optimality of 9 is not rechecked.";
  f.code = binary({
      "110100010000000011010001", "011010010000000001101001", "001101010000000000110101",
      "000110110000000000011011", "000000001101000111010001", "000000000110100101101001",
      "000000000011010100110101", "000000000001101100011011", "101100011011000110110001",
      "010110010101100101011001", "001011010010110100101101", "000101110001011100010111",
  });
  f.ordering = {18, 20, 4, 8, 17, 22, 10, 3, 23, 6, 16, 9, 7, 13, 21, 19, 0, 15, 5, 1, 2, 11, 12, 14};
  const Graph g = cycle_graph(24);
  f.decomposition = along(g, f.code, f.ordering);
  f.vctree = cycle_vctree(g);
  f.expected = {
      {"n", 24, "published"},
      {"k", 12, "published"},
      {"d", 8, "published"},
      {"kappa_path_ordering", 9, "published"},
      {"corollary_path_bound", 5, "published"},
      {"vc_path", 2, "published"},
      {"nkd_kappa_tree_lower", 1, "computed"},
      {"nkd_kappa_path_lower", 4, "computed"},
  };
  return f;
}

Fixture even_weight() {
  Fixture f;
  f.name = "even-weight-3-2";
  f.description = "binary [3,2,2] even-weight code on the 3-vertex path";
  f.code = binary({"110", "011"});
  f.ordering = identity(3);
  f.decomposition = along(path_graph(3), f.code, f.ordering);
  f.expected = {
      {"n", 3, "computed"},
      {"k", 2, "computed"},
      {"d", 2, "computed"},
      {"kappa_path_exact", 2, "computed"},
      {"kappa_tree_exact", 2, "computed"},
  };
  return f;
}

Fixture repetition() {
  Fixture f;
  f.name = "repetition-3-1";
  f.description = "binary [3,1,3] repetition code on the triangle";
  f.code = binary({"111"});
  f.ordering = identity(3);
  f.decomposition = along(cycle_graph(3), f.code, f.ordering);
  f.vctree = cycle_vctree(f.decomposition.graph());
  f.expected = {
      {"n", 3, "computed"},
      {"k", 1, "computed"},
      {"d", 3, "computed"},
      {"kappa_path_exact", 1, "computed"},
      {"kappa_tree_exact", 1, "computed"},
      {"spanning_tree_kappa", 1, "computed"},
      {"vc_tree", 2, "published"},
  };
  return f;
}

Fixture cycle5() {
  Fixture f;
  f.name = "cycle-5";
  f.description = "binary [5,4,2] even-weight code on the 5-cycle";
  f.code = binary({"11000", "01100", "00110", "00011"});
  f.ordering = identity(5);
  f.decomposition = along(cycle_graph(5), f.code, f.ordering);
  f.vctree = cycle_vctree(f.decomposition.graph());
  f.expected = {
      {"vc_tree", 2, "published"},
      {"vc_path", 2, "published"},
  };
  return f;
}

// The 2-tree whose triangles are the bags of the decomposition below;
// confirmed with the exact solver to have vc-treewidth and vc-pathwidth 3.
Graph two_tree_graph() {
  return Graph({"A", "B", "C", "D", "E", "F", "G", "H"},
               std::vector<std::pair<std::string, std::string>>{
                   {"B", "C"}, {"B", "E"}, {"C", "E"}, {"A", "B"}, {"A", "C"}, {"B", "D"}, {"D", "E"},
                   {"C", "G"}, {"E", "G"}, {"B", "F"}, {"D", "F"}, {"C", "H"}, {"G", "H"}});
}

Fixture two_tree() {
  Fixture f;
  f.name = "two-tree-8-vertex";
  f.description = "8-vertex graph of treewidth 2 whose vc-treewidth and vc-pathwidth are 3, with a width-2 tree decomposition";
  f.notes = "Reconstructed stand-in: a 2-tree with vc-treewidth = vc-pathwidth = 3 (solver-confirmed) whose "
            "decomposition gives gamma 1,2 -> A; 3..7 -> z*; 8 -> F; 9,10 -> H from alpha at z*. "
            "The code is arbitrary.";
  f.code = binary({"1010000011", "0110100000", "0001101100", "0000011010", "1000000111"});
  const Graph g = two_tree_graph();
  const std::vector<std::string> where{"A", "A", "B", "B", "B", "E", "E", "F", "H", "H"};
  f.decomposition = GraphDecomposition::from_labels(g, f.code.index_set(), where);
  std::vector<std::string> nodes{"z*", "A", "D", "G", "F", "H"};
  std::vector<std::pair<std::string, std::string>> tree_edges{{"z*", "A"}, {"z*", "D"}, {"z*", "G"}, {"D", "F"}, {"G", "H"}};
  std::vector<std::vector<std::string>> bags{{"B", "C", "E"}, {"A", "B", "C"}, {"B", "D", "E"},
                                            {"C", "E", "G"}, {"B", "D", "F"}, {"C", "G", "H"}};
  const Graph t(nodes, tree_edges);
  std::vector<VertexSet> beta;
  for (const auto& b : bags) beta.push_back(g.ids(b));
  f.vctree = VertexCutTree{Tree(t), std::move(beta)};
  f.alpha_root = "z*";
  f.expected_gamma = {"A", "A", "z*", "z*", "z*", "z*", "z*", "F", "H", "H"};
  f.expected = {
      {"treewidth_decomposition", 2, "published"},
      {"vc_width_decomposition", 3, "published"},
      {"vc_tree", 3, "published"},
      {"vc_path", 3, "published"},
      {"gamma_matches", 1, "published"},
  };
  return f;
}

}  // namespace

std::vector<std::string> fixture_names() {
  return {"cycle-11-3-3", "golay-24-12-8", "even-weight-3-2", "repetition-3-1", "cycle-5", "two-tree-8-vertex"};
}

Fixture fixture(std::string_view name) {
  if (name == "cycle-11-3-3") return cycle11();
  if (name == "golay-24-12-8") return golay();
  if (name == "even-weight-3-2") return even_weight();
  if (name == "repetition-3-1") return repetition();
  if (name == "cycle-5") return cycle5();
  if (name == "two-tree-8-vertex") return two_tree();
  throw ValidationError("unknown fixture '" + std::string(name) + "'");
}

}  // namespace graphreal
