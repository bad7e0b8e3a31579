#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace graphreal {

/// Raised when an input violates a documented precondition (malformed
/// files, unknown labels, invalid decompositions). The CLI maps it to exit 2.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an exhaustive enumeration or linear solve would exceed its
/// configured size limit. The CLI maps it to exit 3.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Limits on brute-force work. `enumeration_bits` caps every enumeration
/// (codewords, cubic trees, path orderings) at 2^bits items; the defaults
/// reproduce q^dim <= 2^24, n <= 10 for cubic trees and n <= 10 for orderings.
struct Guards {
  unsigned enumeration_bits = 24;
  std::size_t behavior_variables = 64;
  std::size_t vc_exact_vertices = 8;

  std::uint64_t enumeration_limit() const {
    return enumeration_bits >= 63 ? UINT64_MAX : (std::uint64_t{1} << enumeration_bits);
  }

  /// Defaults, with `GRAPHREAL_GUARD_BITS` applied when set.
  static Guards from_environment();
};

/// Outcome of a structural check: `ok` plus the first violation found.
struct Check {
  bool ok = true;
  std::string violation;

  static Check pass() { return {}; }
  static Check fail(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const { return ok; }
};

}  // namespace graphreal
