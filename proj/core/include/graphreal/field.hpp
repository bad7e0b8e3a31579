#pragma once

#include <cstdint>

namespace graphreal {

using Element = std::uint32_t;

/// Arithmetic in the prime field GF(q).
class Field {
 public:
  Field() = default;
  explicit Field(std::uint32_t q);

  std::uint32_t order() const { return q_; }

  Element add(Element a, Element b) const {
    const std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Element>(s >= q_ ? s - q_ : s);
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + (q_ - b); }
  Element neg(Element a) const { return a == 0 ? 0 : q_ - a; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>((std::uint64_t{a} * b) % q_);
  }
  Element inv(Element a) const;
  bool contains(std::uint64_t value) const { return value < q_; }

  friend bool operator==(const Field&, const Field&) = default;

 private:
  std::uint32_t q_ = 2;
};

bool is_prime(std::uint64_t n);

}  // namespace graphreal
