#pragma once

#include <string>
#include <vector>

#include "graphreal/code.hpp"
#include "graphreal/graph.hpp"
#include "oracles.hpp"

namespace graphreal::testing {

/// Rows given as digit strings, coordinates labelled "1".."n".
inline LinearCode code_from_strings(std::uint32_t q, const std::vector<std::string>& rows) {
  const std::size_t n = rows.empty() ? 0 : rows.front().size();
  std::vector<std::vector<std::uint64_t>> raw;
  for (const auto& r : rows) {
    std::vector<std::uint64_t> row;
    for (char c : r) row.push_back(static_cast<std::uint64_t>(c - '0'));
    raw.push_back(row);
  }
  return LinearCode::canonicalize(Matrix::from_rows(Field(q), n, raw), numeric_labels(n));
}

inline LinearCode binary(const std::vector<std::string>& rows) { return code_from_strings(2, rows); }

inline std::vector<std::size_t> positions_of(const LinearCode& c, const std::vector<std::string>& labels) {
  return c.positions(labels);
}

inline std::set<Word> word_set(const LinearCode& c) {
  const auto w = codewords(c);
  return {w.begin(), w.end()};
}

/// The path a0 - a1 - ... with given labels.
inline Graph path_graph(const std::vector<std::string>& labels) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < labels.size(); ++i) edges.push_back({i - 1, i});
  return Graph(labels, edges);
}

inline Graph complete_graph(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("k" + std::to_string(i));
    for (std::size_t j = 0; j < i; ++j) edges.push_back({j, i});
  }
  return Graph(labels, edges);
}

}  // namespace graphreal::testing
