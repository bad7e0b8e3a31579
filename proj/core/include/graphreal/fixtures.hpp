#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graphreal/model.hpp"
#include "graphreal/vctree.hpp"

namespace graphreal {

/// How an expected value is known: "published" (stated for this object in
/// the literature), "computed" (derived here by independent means),
/// "reconstructed" (a stand-in built to match published statements).
struct ExpectedValue {
  std::string key;
  std::int64_t value = 0;
  std::string provenance;
  /// False for values of objects we do not have (e.g. a specific
  /// realization known only pictorially); they are reported, not rerun.
  bool checkable = true;
};

struct Fixture {
  std::string name;
  std::string description;
  std::string notes;
  LinearCode code;
  GraphDecomposition decomposition;
  std::optional<VertexCutTree> vctree;
  /// Node of the vertex-cut tree used as z* in the worked alpha example.
  std::optional<std::string> alpha_root;
  /// Tree node expected for each coordinate under gamma built from alpha_root.
  std::vector<std::string> expected_gamma;
  /// A bijective path ordering of the coordinates (0-based positions).
  std::vector<std::size_t> ordering;
  std::vector<ExpectedValue> expected;

  const ExpectedValue* find(std::string_view key) const;
};

std::vector<std::string> fixture_names();
/// Throws ValidationError for unknown names.
Fixture fixture(std::string_view name);

/// Vertices prefix0..prefix{n-1}, edges i-(i+1) and (n-1)-0.
Graph cycle_graph(std::size_t n, std::string_view prefix = "v");
/// The vertex-cut path z1..z{n-1} with bags {v0, v_i} on a cycle_graph.
VertexCutTree cycle_vctree(const Graph& cycle);

}  // namespace graphreal
