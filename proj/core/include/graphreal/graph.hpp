#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "graphreal/error.hpp"

namespace graphreal {

using VertexId = std::size_t;
using EdgeId = std::size_t;

inline constexpr std::size_t kMaxVertices = 64;

/// Subset of the vertices of a graph with at most 64 vertices.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static VertexSet single(VertexId v) { return VertexSet(std::uint64_t{1} << v); }
  static VertexSet first(std::size_t n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }
  static VertexSet of(std::initializer_list<VertexId> vs) {
    VertexSet s;
    for (auto v : vs) s.insert(v);
    return s;
  }

  std::uint64_t bits() const { return bits_; }
  bool empty() const { return bits_ == 0; }
  std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool contains(VertexId v) const { return (bits_ >> v) & 1U; }
  void insert(VertexId v) { bits_ |= std::uint64_t{1} << v; }
  void erase(VertexId v) { bits_ &= ~(std::uint64_t{1} << v); }
  VertexId front() const { return static_cast<VertexId>(std::countr_zero(bits_)); }
  bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

  std::vector<VertexId> to_vector() const {
    std::vector<VertexId> out;
    for (auto b = bits_; b; b &= b - 1) out.push_back(static_cast<VertexId>(std::countr_zero(b)));
    return out;
  }

  VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
  friend bool operator==(VertexSet, VertexSet) = default;
  friend auto operator<=>(VertexSet, VertexSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

struct Edge {
  VertexId u;
  VertexId v;
  VertexId other(VertexId w) const { return w == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected simple graph with string vertex labels. Vertex ids follow the
/// order in which labels were given; edges keep their input order with
/// endpoints stored as given.
class Graph {
 public:
  Graph() = default;
  /// Throws ValidationError on duplicate labels, unknown endpoints,
  /// self-loops, parallel edges or more than 64 vertices.
  Graph(std::vector<std::string> vertices,
        const std::vector<std::pair<std::string, std::string>>& edges);
  Graph(std::vector<std::string> vertices, const std::vector<Edge>& edges);

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  VertexSet all() const { return VertexSet::first(vertex_count()); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(VertexId v) const { return labels_[v]; }
  std::optional<VertexId> find(std::string_view label) const;
  VertexId id(std::string_view label) const;
  VertexSet ids(std::span<const std::string> labels) const;
  std::vector<std::string> labels_of(VertexSet s) const;

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::optional<EdgeId> edge_between(VertexId a, VertexId b) const;
  const std::vector<EdgeId>& incident(VertexId v) const { return incident_[v]; }
  VertexSet neighbors(VertexId v) const { return adjacency_[v]; }
  std::size_t degree(VertexId v) const { return incident_[v].size(); }
  /// N(W): every vertex adjacent to some vertex of W.
  VertexSet neighborhood(VertexSet w) const;

  /// Components of the subgraph induced by `alive`, ordered by least vertex id.
  std::vector<VertexSet> components(VertexSet alive) const;
  /// Components of the spanning subgraph without the edges in `removed`.
  std::vector<VertexSet> components_without_edges(std::span<const EdgeId> removed) const;
  bool connected() const;
  /// Least vertex by label (lexicographic), for deterministic traversals.
  VertexId least_vertex() const;

  std::string to_dot(std::string_view name = "G") const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.labels_ == b.labels_ && a.edges_ == b.edges_;
  }

 private:
  void build(const std::vector<Edge>& edges);

  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> lookup_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
  std::vector<VertexSet> adjacency_;
};

/// G - W or G \ X together with the components of what remains. Component
/// sets use the vertex ids of the original graph.
struct Split {
  Graph remainder;
  std::vector<VertexSet> components;
  bool is_cut() const { return components.size() >= 2; }
};

Split delete_vertices(const Graph& g, VertexSet removed);
Split delete_edges(const Graph& g, std::span<const EdgeId> removed);

/// Ordered collection (V0, V1, ..., Vd); parts may be empty.
struct StarPartition {
  VertexSet center;
  std::vector<VertexSet> parts;
};

/// Partition property plus N(Vi) within Vi u V0 for every part.
Check validate_star_partition(const Graph& g, const StarPartition& sp);

/// The star partition (W, components of G - W).
StarPartition star_partition_from_cut(const Graph& g, VertexSet w);

/// Articulation-point-free, connected and at least three vertices.
bool is_biconnected(const Graph& g);

class Tree;

/// Breadth-first spanning tree from the lexicographically least vertex,
/// visiting neighbours in label order.
Tree spanning_tree(const Graph& g);

}  // namespace graphreal
