#include "graphreal/field.hpp"

#include <cstdlib>
#include <string>

#include "graphreal/error.hpp"

namespace graphreal {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field::Field(std::uint32_t q) : q_(q) {
  if (q >= (std::uint32_t{1} << 31) || !is_prime(q)) {
    throw ValidationError("field order " + std::to_string(q) + " is not a supported prime");
  }
}

Element Field::inv(Element a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  // Fermat: a^(q-2)
  std::uint64_t result = 1;
  std::uint64_t base = a;
  std::uint32_t e = q_ - 2;
  while (e) {
    if (e & 1) result = result * base % q_;
    base = base * base % q_;
    e >>= 1;
  }
  return static_cast<Element>(result);
}

Guards Guards::from_environment() {
  Guards g;
  if (const char* bits = std::getenv("GRAPHREAL_GUARD_BITS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(bits, &end, 10);
    if (end == bits || *end != '\0' || v == 0 || v > 62) {
      throw ValidationError(std::string("GRAPHREAL_GUARD_BITS must be an integer in [1, 62], got '") +
                            bits + "'");
    }
    g.enumeration_bits = static_cast<unsigned>(v);
  }
  return g;
}

}  // namespace graphreal
