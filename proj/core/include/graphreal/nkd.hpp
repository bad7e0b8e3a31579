#pragma once

#include <cstdint>

#include "graphreal/simplex.hpp"

namespace graphreal {

/// log2(m) in [lower, upper], both multiples of 2^-precision_bits. The
/// interval is a single point exactly when m is a power of two.
struct Log2Bracket {
  Rational lower;
  Rational upper;
  bool exact = false;
};

/// Certified from floor(log2(m^(2^bits))) = bit length of m^(2^bits) minus one.
Log2Bracket log2_bracket(std::uint64_t m, unsigned precision_bits = 20);

struct NkdBound {
  /// k(d-1) / (n (3 + 2 log2(n-1))) lies in [lower, upper].
  Rational lower;
  Rational upper;
  Log2Bracket log2_n_minus_1;
  /// ceil(lower): certified lower bound on the code's treewidth.
  std::uint64_t kappa_tree_lower = 0;
  /// k(d-1)/n and its ceiling, a lower bound on the code's pathwidth.
  Rational path_value;
  std::uint64_t kappa_path_lower = 0;
};

/// Throws ValidationError for n <= 1, k > n or d > n.
NkdBound nkd_treewidth_bound(std::uint64_t n, std::uint64_t k, std::uint64_t d, unsigned precision_bits = 20);

}  // namespace graphreal
