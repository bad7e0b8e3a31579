#include "graphreal/simplex.hpp"

#include "graphreal/error.hpp"

namespace graphreal {

LpSolution maximize(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
                    const std::vector<Rational>& c) {
  const std::size_t m = a.size();
  const std::size_t n = c.size();
  if (b.size() != m) throw ValidationError("simplex: right-hand side size mismatch");
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i].size() != n) throw ValidationError("simplex: ragged constraint matrix");
    if (b[i] < 0) throw ValidationError("simplex: slack basis infeasible (negative right-hand side)");
  }

  // Columns 0..n-1 structural, n..n+m-1 slack, last column rhs.
  const std::size_t width = n + m + 1;
  std::vector<std::vector<Rational>> t(m + 1, std::vector<Rational>(width));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
    t[i][n + i] = 1;
    t[i][width - 1] = b[i];
  }
  for (std::size_t j = 0; j < n; ++j) t[m][j] = -c[j];
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  LpSolution sol;
  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (t[m][j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;

    std::size_t leave = m;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][width - 1] / t[i][enter];
      if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m) {
      sol.status = LpStatus::unbounded;
      return sol;
    }

    const Rational pivot = t[leave][enter];
    for (auto& v : t[leave]) v /= pivot;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational factor = t[i][enter];
      for (std::size_t j = 0; j < width; ++j) t[i][j] -= factor * t[leave][j];
    }
    basis[leave] = enter;
    ++sol.pivots;
  }

  sol.x.assign(n, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) sol.x[basis[i]] = t[i][width - 1];
  }
  sol.duals.assign(m, 0);
  for (std::size_t i = 0; i < m; ++i) sol.duals[i] = t[m][n + i];
  sol.value = t[m][width - 1];
  return sol;
}

}  // namespace graphreal
