#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "graphreal/error.hpp"
#include "graphreal/matrix.hpp"

namespace graphreal {

/// A linear code over GF(q) on a labelled coordinate set. Generators are
/// always stored in RREF with zero rows removed, so two codes with the same
/// index set are equal iff they are the same subspace.
class LinearCode {
 public:
  LinearCode() = default;

  /// Row space of `raw_generators` on `index_set`. Throws ValidationError on
  /// a column-count mismatch or duplicate labels.
  static LinearCode canonicalize(Matrix raw_generators, std::vector<std::string> index_set);

  static LinearCode zero(Field field, std::vector<std::string> index_set);
  static LinearCode full(Field field, std::vector<std::string> index_set);

  Field field() const { return generators_.field(); }
  std::size_t length() const { return labels_.size(); }
  std::size_t dim() const { return generators_.rows(); }
  const std::vector<std::string>& index_set() const { return labels_; }
  const Matrix& generators() const { return generators_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  std::optional<std::size_t> find(std::string_view label) const;
  /// Position of `label`; throws ValidationError for unknown labels.
  std::size_t position(std::string_view label) const;
  std::vector<std::size_t> positions(std::span<const std::string> labels) const;

  bool contains(std::span<const Element> word) const;
  /// Generator matrix of the dual code (rows h with G h^T = 0), in RREF.
  Matrix parity_check() const;
  /// The codeword sum_r coefficients[r] * g_r.
  std::vector<Element> encode(std::span<const Element> coefficients) const;

  /// Same code with coordinates renamed position by position.
  LinearCode relabeled(std::vector<std::string> index_set) const;

  friend bool operator==(const LinearCode& a, const LinearCode& b) {
    return a.labels_ == b.labels_ && a.generators_ == b.generators_;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> lookup_;
  Matrix generators_;
  std::vector<std::size_t> pivots_;
};

/// C|_J on J (order as given).
LinearCode project(const LinearCode& code, std::span<const std::string> labels);
/// C_J: restrictions to J of codewords vanishing outside J.
LinearCode cross_section(const LinearCode& code, std::span<const std::string> labels);
/// Block-diagonal sum; index sets must be pairwise disjoint.
LinearCode direct_sum(std::span<const LinearCode> codes);

LinearCode project_positions(const LinearCode& code, std::span<const std::size_t> positions);
LinearCode cross_section_positions(const LinearCode& code, std::span<const std::size_t> positions);
std::size_t projection_dim(const LinearCode& code, std::span<const std::size_t> positions);
std::size_t cross_section_dim(const LinearCode& code, std::span<const std::size_t> positions);

/// True iff every generator of `inner` lies in `outer` (same index set).
bool is_subcode(const LinearCode& inner, const LinearCode& outer);

/// Visits all q^dim codewords; throws GuardExceeded if q^dim > limit.
void for_each_codeword(const LinearCode& code, std::uint64_t limit,
                       const std::function<void(std::span<const Element>)>& visit);

/// Least weight of a nonzero codeword, by exhaustive enumeration.
std::size_t minimum_distance(const LinearCode& code, std::uint64_t limit = Guards{}.enumeration_limit());

/// Exact q^e, throwing GuardExceeded past `limit`.
std::uint64_t checked_power(std::uint64_t q, std::size_t e, std::uint64_t limit = UINT64_MAX);

/// Coordinate subset of a code of length <= 64, as a bit mask over positions.
using CoordinateMask = std::uint64_t;

std::vector<std::size_t> mask_positions(CoordinateMask mask);

/// dim C_J lookups keyed by coordinate mask. Dense table for short codes,
/// memoised otherwise.
class CrossSectionTable {
 public:
  explicit CrossSectionTable(LinearCode code, unsigned dense_bits = 16);

  std::size_t dim() const { return dim_; }
  std::size_t length() const { return n_; }
  CoordinateMask all() const { return all_; }
  std::size_t operator()(CoordinateMask mask) const;

 private:
  LinearCode code_;
  std::size_t n_;
  std::size_t dim_;
  CoordinateMask all_;
  std::vector<std::uint8_t> dense_;
  mutable std::unordered_map<CoordinateMask, std::size_t> memo_;
};

}  // namespace graphreal
