#include "graphreal/nkd.hpp"

#include "graphreal/cut_bounds.hpp"
#include "graphreal/error.hpp"

namespace graphreal {

Log2Bracket log2_bracket(std::uint64_t m, unsigned precision_bits) {
  if (m == 0) throw ValidationError("log2 of zero");
  if (precision_bits > 26) throw GuardExceeded("log2 precision is limited to 26 bits");
  mpz_class power;
  mpz_class base(static_cast<unsigned long>(m));
  mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), 1UL << precision_bits);
  // 2^a <= m^(2^p) < 2^(a+1), so a / 2^p <= log2 m < (a+1) / 2^p.
  const std::size_t bits = mpz_sizeinbase(power.get_mpz_t(), 2);
  const mpz_class a(static_cast<unsigned long>(bits - 1));
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, precision_bits);
  Log2Bracket r;
  r.exact = mpz_scan1(power.get_mpz_t(), 0) == bits - 1;
  r.lower = Rational(a, scale);
  r.upper = r.exact ? r.lower : Rational(a + 1, scale);
  r.lower.canonicalize();
  r.upper.canonicalize();
  return r;
}

NkdBound nkd_treewidth_bound(std::uint64_t n, std::uint64_t k, std::uint64_t d, unsigned precision_bits) {
  if (n <= 1) throw ValidationError("the [n,k,d] bound needs n > 1");
  if (k > n || d > n || d == 0) throw ValidationError("need 1 <= d <= n and k <= n");
  NkdBound b;
  b.log2_n_minus_1 = log2_bracket(n - 1, precision_bits);
  const Rational num(mpz_class(static_cast<unsigned long>(k)) * mpz_class(static_cast<unsigned long>(d - 1)));
  const Rational nn(mpz_class(static_cast<unsigned long>(n)));
  b.lower = num / (nn * (3 + 2 * b.log2_n_minus_1.upper));
  b.upper = num / (nn * (3 + 2 * b.log2_n_minus_1.lower));
  b.lower.canonicalize();
  b.upper.canonicalize();
  b.kappa_tree_lower = ceil_nonnegative(b.lower);
  b.path_value = num / nn;
  b.path_value.canonicalize();
  b.kappa_path_lower = ceil_nonnegative(b.path_value);
  return b;
}

}  // namespace graphreal
