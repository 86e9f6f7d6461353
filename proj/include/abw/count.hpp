#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace abw {

// Arbitrary-precision nonnegative integer. Every census value and closed-form
// count in this project is exact; there is no floating point anywhere.
//
// Representation: little-endian 64-bit limbs, normalized so the top limb is
// nonzero (zero is the empty limb vector).
class Count {
 public:
  Count() = default;
  Count(std::uint64_t value);  // implicit: counts mix freely with small literals

  static Count pow2(unsigned exponent);

  bool is_zero() const { return limbs_.empty(); }

  // Decimal representation, no sign, no separators.
  std::string str() const;

  // Value as uint64_t; throws std::overflow_error if it does not fit.
  std::uint64_t to_u64() const;

  Count& operator+=(const Count& rhs);
  // Throws std::underflow_error if rhs > *this.
  Count& operator-=(const Count& rhs);
  Count& operator*=(const Count& rhs);

  // Exact division by a nonzero machine word. Throws std::logic_error when the
  // remainder is nonzero; callers rely on this to assert divisibility instead
  // of rounding.
  Count div_exact(std::uint64_t divisor) const;

  friend Count operator+(Count lhs, const Count& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend Count operator-(Count lhs, const Count& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend Count operator*(const Count& lhs, const Count& rhs);

  bool operator==(const Count&) const = default;
  std::strong_ordering operator<=>(const Count& rhs) const;

 private:
  void trim();

  std::vector<std::uint64_t> limbs_;
};

std::ostream& operator<<(std::ostream& os, const Count& value);

}  // namespace abw
