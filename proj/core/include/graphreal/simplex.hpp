#pragma once

#include <gmpxx.h>

#include <vector>

namespace graphreal {

using Rational = mpq_class;

enum class LpStatus { optimal, unbounded };

struct LpSolution {
  LpStatus status = LpStatus::optimal;
  Rational value;
  std::vector<Rational> x;
  /// Optimal multipliers of the <= rows (a solution of the dual LP).
  std::vector<Rational> duals;
  std::size_t pivots = 0;
};

/// maximize c.x subject to A x <= b, x >= 0, with b >= 0 so that the slack
/// basis is feasible. Dense tableau, Bland's rule, exact rationals.
LpSolution maximize(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
                    const std::vector<Rational>& c);

}  // namespace graphreal
