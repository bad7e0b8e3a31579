#include "oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <map>
#include <queue>

namespace graphreal::testing {

std::vector<Word> codewords(const LinearCode& code) {
  const auto q = code.field().order();
  const auto k = code.dim();
  std::vector<Word> out;
  std::vector<Element> coeff(k, 0);
  while (true) {
    Word w(code.length(), 0);
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < code.length(); ++c) {
        w[c] = (w[c] + coeff[r] * code.generators()(r, c)) % q;
      }
    }
    out.push_back(std::move(w));
    std::size_t i = 0;
    while (i < k && ++coeff[i] == q) coeff[i++] = 0;
    if (i == k) break;
  }
  return out;
}

std::size_t log_q(std::size_t count, std::uint32_t q) {
  std::size_t e = 0;
  std::size_t p = 1;
  while (p < count) {
    p *= q;
    ++e;
  }
  if (p != count) {
    std::cerr << "oracle: " << count << " is not a power of " << q << "\n";
    std::abort();
  }
  return e;
}

Word restrict(const Word& w, const std::vector<std::size_t>& positions) {
  Word out;
  out.reserve(positions.size());
  for (auto p : positions) out.push_back(w[p]);
  return out;
}

std::size_t oracle_projection_dim(const LinearCode& code, const std::vector<std::size_t>& positions) {
  std::set<Word> seen;
  for (const auto& w : codewords(code)) seen.insert(restrict(w, positions));
  return log_q(seen.size(), code.field().order());
}

std::size_t oracle_cross_section_dim(const LinearCode& code, const std::vector<std::size_t>& positions) {
  std::vector<bool> inside(code.length(), false);
  for (auto p : positions) inside[p] = true;
  std::size_t count = 0;
  for (const auto& w : codewords(code)) {
    bool ok = true;
    for (std::size_t i = 0; i < w.size() && ok; ++i) ok = inside[i] || w[i] == 0;
    count += ok ? 1 : 0;
  }
  return log_q(count, code.field().order());
}

std::size_t oracle_min_distance(const LinearCode& code) {
  std::size_t best = SIZE_MAX;
  for (const auto& w : codewords(code)) {
    const auto wt = static_cast<std::size_t>(std::count_if(w.begin(), w.end(), [](Element e) { return e != 0; }));
    if (wt > 0) best = std::min(best, wt);
  }
  return best == SIZE_MAX ? 0 : best;
}

namespace {

std::vector<Word> cross_section_words(const LinearCode& code, const std::vector<std::size_t>& positions) {
  std::vector<bool> inside(code.length(), false);
  for (auto p : positions) inside[p] = true;
  std::vector<Word> out;
  for (const auto& w : codewords(code)) {
    bool ok = true;
    for (std::size_t i = 0; i < w.size() && ok; ++i) ok = inside[i] || w[i] == 0;
    if (ok) out.push_back(restrict(w, positions));
  }
  return out;
}

Word canonical(const Word& x, const std::vector<Word>& sub, std::uint32_t q) {
  Word best;
  bool first = true;
  for (const auto& s : sub) {
    Word y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = (x[i] + s[i]) % q;
    if (first || y < best) best = std::move(y);
    first = false;
  }
  return best;
}

}  // namespace

std::size_t oracle_coset_dim(const LinearCode& code, const std::vector<std::size_t>& positions) {
  const auto sub = cross_section_words(code, positions);
  std::set<Word> reps;
  for (const auto& w : codewords(code)) reps.insert(canonical(restrict(w, positions), sub, code.field().order()));
  return log_q(reps.size(), code.field().order());
}

MinimalDims minimal_dims_by_cosets(const LinearCode& code, const CodeTreeDecomposition& td) {
  const auto& d = td.decomposition();
  const auto& t = td.tree();
  const auto q = code.field().order();
  MinimalDims out;
  for (EdgeId e = 0; e < t.graph().edge_count(); ++e) {
    out.state.push_back(oracle_coset_dim(code, d.preimage(t.sides(e).first)));
  }
  const auto words = codewords(code);
  for (VertexId v = 0; v < t.size(); ++v) {
    const auto own = d.preimage(VertexSet::single(v));
    std::vector<std::vector<std::size_t>> parts;
    std::vector<std::vector<Word>> subs;
    for (auto b : t.branches(v)) {
      parts.push_back(d.preimage(b));
      subs.push_back(cross_section_words(code, parts.back()));
    }
    std::set<std::vector<Word>> tuples;
    for (const auto& w : words) {
      std::vector<Word> tuple{restrict(w, own)};
      for (std::size_t i = 0; i < parts.size(); ++i) tuple.push_back(canonical(restrict(w, parts[i]), subs[i], q));
      tuples.insert(std::move(tuple));
    }
    out.constraint.push_back(log_q(tuples.size(), q));
  }
  return out;
}

namespace {

// Nodes of T reachable from `start` using only nodes in `allowed`.
std::vector<bool> reach(const Graph& t, VertexId start, const std::vector<bool>& allowed) {
  std::vector<bool> seen(t.vertex_count(), false);
  std::queue<VertexId> todo;
  seen[start] = true;
  todo.push(start);
  while (!todo.empty()) {
    const auto x = todo.front();
    todo.pop();
    for (auto e : t.incident(x)) {
      const auto y = t.edge(e).other(x);
      if (allowed[y] && !seen[y]) {
        seen[y] = true;
        todo.push(y);
      }
    }
  }
  return seen;
}

bool covers_and_connected(const Graph& g, const Tree& tree, const std::vector<VertexSet>& beta) {
  const auto& t = tree.graph();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::vector<bool> holds(t.vertex_count(), false);
    std::size_t count = 0;
    VertexId any = 0;
    for (VertexId z = 0; z < t.vertex_count(); ++z) {
      if (beta[z].contains(v)) {
        holds[z] = true;
        ++count;
        any = z;
      }
    }
    if (count == 0) return false;
    const auto r = reach(t, any, holds);
    if (static_cast<std::size_t>(std::count(r.begin(), r.end(), true)) != count) return false;
  }
  return true;
}

}  // namespace

bool vctree_valid(const Graph& g, const VertexCutTree& vct) {
  if (!covers_and_connected(g, vct.tree, vct.beta)) return false;
  const auto& t = vct.tree.graph();
  for (VertexId z = 0; z < t.vertex_count(); ++z) {
    std::vector<bool> not_z(t.vertex_count(), true);
    not_z[z] = false;
    // part[v]: which branch v lies in (-1: in beta(z), -2: unassigned)
    std::vector<int> part(g.vertex_count(), -2);
    for (auto v : vct.beta[z].to_vector()) part[v] = -1;
    int index = 0;
    for (auto e : t.incident(z)) {
      const auto side = reach(t, t.edge(e).other(z), not_z);
      for (VertexId y = 0; y < t.vertex_count(); ++y) {
        if (!side[y]) continue;
        for (auto v : vct.beta[y].to_vector()) {
          if (part[v] == -1) continue;
          if (part[v] >= 0 && part[v] != index) return false;
          part[v] = index;
        }
      }
      ++index;
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (part[v] == -2) return false;
    }
    for (const auto& e : g.edges()) {
      if (part[e.u] >= 0 && part[e.v] >= 0 && part[e.u] != part[e.v]) return false;
    }
  }
  return true;
}

bool tree_decomposition_valid(const Graph& g, const GraphTreeDecomposition& td) {
  if (!covers_and_connected(g, td.tree, td.beta)) return false;
  for (const auto& e : g.edges()) {
    bool found = false;
    for (const auto& b : td.beta) found = found || (b.contains(e.u) && b.contains(e.v));
    if (!found) return false;
  }
  return true;
}

std::vector<std::string> numeric_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

LinearCode random_code(Rng& rng, std::uint32_t q, std::size_t n, std::size_t max_rows) {
  const Field f(q);
  const auto rows = rng.between(0, max_rows);
  std::vector<std::vector<std::uint64_t>> raw(rows, std::vector<std::uint64_t>(n));
  for (auto& row : raw) {
    for (auto& x : row) x = rng.below(q);
  }
  return LinearCode::canonicalize(Matrix::from_rows(f, n, raw), numeric_labels(n));
}

namespace {

std::vector<std::string> prefixed(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

}  // namespace

Tree random_tree(Rng& rng, std::size_t nodes, const std::string& prefix) {
  std::vector<Edge> edges;
  if (nodes == 2) edges.push_back({0, 1});
  if (nodes > 2) {
    std::vector<std::size_t> seq(nodes - 2);
    for (auto& s : seq) s = rng.below(nodes);
    std::vector<std::size_t> degree(nodes, 1);
    for (auto s : seq) ++degree[s];
    for (auto s : seq) {
      for (std::size_t leaf = 0; leaf < nodes; ++leaf) {
        if (degree[leaf] == 1) {
          edges.push_back({leaf, s});
          --degree[leaf];
          --degree[s];
          break;
        }
      }
    }
    std::vector<std::size_t> last;
    for (std::size_t v = 0; v < nodes; ++v) {
      if (degree[v] == 1) last.push_back(v);
    }
    edges.push_back({last[0], last[1]});
  }
  return Tree(Graph(prefixed(prefix, nodes), edges));
}

Graph random_connected_graph(Rng& rng, std::size_t n, unsigned num, unsigned den) {
  const auto t = random_tree(rng, n, "g");
  auto edges = t.graph().edges();
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      if (t.graph().edge_between(a, b)) continue;
      if (rng.chance(num, den)) edges.push_back({a, b});
    }
  }
  return Graph(prefixed("g", n), edges);
}

GraphDecomposition random_decomposition(Rng& rng, const LinearCode& code, const Graph& g) {
  std::vector<VertexId> omega(code.length());
  for (auto& w : omega) w = rng.below(g.vertex_count());
  return GraphDecomposition(g, code.index_set(), omega);
}

GeneratedDecomposition random_tree_decomposition(Rng& rng, std::size_t max_vertices) {
  while (true) {
    const auto nodes = rng.between(1, 6);
    const auto n = rng.between(1, max_vertices);
    const auto tree = random_tree(rng, nodes, "z");
    const auto& t = tree.graph();
    std::vector<VertexSet> beta(nodes);
    for (VertexId v = 0; v < n; ++v) {
      std::vector<VertexId> sub{rng.below(nodes)};
      const auto grow = rng.below(nodes);
      for (std::size_t s = 0; s < grow; ++s) {
        const auto from = sub[rng.below(sub.size())];
        const auto& inc = t.incident(from);
        if (inc.empty()) break;
        const auto to = t.edge(inc[rng.below(inc.size())]).other(from);
        if (std::find(sub.begin(), sub.end(), to) == sub.end()) sub.push_back(to);
      }
      for (auto z : sub) beta[z].insert(v);
    }
    std::vector<Edge> edges;
    for (VertexId a = 0; a < n; ++a) {
      for (VertexId b = a + 1; b < n; ++b) {
        bool share = false;
        for (const auto& bag : beta) share = share || (bag.contains(a) && bag.contains(b));
        if (share && rng.chance(2, 3)) edges.push_back({a, b});
      }
    }
    Graph g(prefixed("g", n), edges);
    if (!g.connected()) continue;
    return {g, GraphTreeDecomposition{tree, beta}};
  }
}

GraphicalModel random_model(Rng& rng, const GraphDecomposition& d, Field field, std::size_t max_state) {
  const auto& g = d.graph();
  std::vector<std::size_t> dims(g.edge_count());
  for (auto& s : dims) s = rng.between(0, max_state);
  std::vector<LinearCode> constraints;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto labels = GraphicalModel::local_index(d, dims, v);
    const auto code = random_code(rng, field.order(), labels.size(), labels.size());
    constraints.push_back(code.relabeled(labels));
  }
  return GraphicalModel(d, field, dims, constraints);
}

}  // namespace graphreal::testing
