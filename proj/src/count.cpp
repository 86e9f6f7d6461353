#include "abw/count.hpp"

#include <ostream>
#include <stdexcept>

namespace abw {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

Count::Count(u64 value) {
  if (value != 0) limbs_.push_back(value);
}

Count Count::pow2(unsigned exponent) {
  Count result;
  result.limbs_.assign(exponent / 64 + 1, 0);
  result.limbs_.back() = u64{1} << (exponent % 64);
  return result;
}

void Count::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

Count& Count::operator+=(const Count& rhs) {
  if (limbs_.size() < rhs.limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
  u64 carry = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    u128 sum = u128(limbs_[i]) + carry;
    if (i < rhs.limbs_.size()) sum += rhs.limbs_[i];
    limbs_[i] = u64(sum);
    carry = u64(sum >> 64);
  }
  if (carry != 0) limbs_.push_back(carry);
  return *this;
}

Count& Count::operator-=(const Count& rhs) {
  if (*this < rhs) throw std::underflow_error("Count: negative result");
  u64 borrow = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    u128 sub = u128(borrow);
    if (i < rhs.limbs_.size()) sub += rhs.limbs_[i];
    if (u128(limbs_[i]) >= sub) {
      limbs_[i] = u64(u128(limbs_[i]) - sub);
      borrow = 0;
    } else {
      limbs_[i] = u64((u128(1) << 64) + limbs_[i] - sub);
      borrow = 1;
    }
  }
  trim();
  return *this;
}

Count operator*(const Count& lhs, const Count& rhs) {
  Count result;
  if (lhs.is_zero() || rhs.is_zero()) return result;
  result.limbs_.assign(lhs.limbs_.size() + rhs.limbs_.size(), 0);
  for (std::size_t i = 0; i < lhs.limbs_.size(); ++i) {
    u64 carry = 0;
    for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
      u128 cur = u128(lhs.limbs_[i]) * rhs.limbs_[j] + result.limbs_[i + j] + carry;
      result.limbs_[i + j] = u64(cur);
      carry = u64(cur >> 64);
    }
    result.limbs_[i + rhs.limbs_.size()] += carry;
  }
  result.trim();
  return result;
}

Count& Count::operator*=(const Count& rhs) {
  *this = *this * rhs;
  return *this;
}

Count Count::div_exact(u64 divisor) const {
  if (divisor == 0) throw std::invalid_argument("Count: division by zero");
  Count quotient;
  quotient.limbs_.assign(limbs_.size(), 0);
  u128 rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    u128 cur = (rem << 64) | limbs_[i];
    quotient.limbs_[i] = u64(cur / divisor);
    rem = cur % divisor;
  }
  if (rem != 0) throw std::logic_error("Count: inexact division");
  quotient.trim();
  return quotient;
}

std::strong_ordering Count::operator<=>(const Count& rhs) const {
  if (limbs_.size() != rhs.limbs_.size())
    return limbs_.size() <=> rhs.limbs_.size();
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    if (limbs_[i] != rhs.limbs_[i]) return limbs_[i] <=> rhs.limbs_[i];
  }
  return std::strong_ordering::equal;
}

std::uint64_t Count::to_u64() const {
  if (limbs_.size() > 1) throw std::overflow_error("Count: does not fit in 64 bits");
  return limbs_.empty() ? 0 : limbs_[0];
}

std::string Count::str() const {
  if (limbs_.empty()) return "0";
  // Peel off 19 decimal digits at a time (10^19 is the largest power of ten
  // below 2^64).
  constexpr u64 kChunk = 10'000'000'000'000'000'000ull;
  std::vector<u64> work = limbs_;
  std::vector<u64> chunks;
  while (!work.empty()) {
    u128 rem = 0;
    for (std::size_t i = work.size(); i-- > 0;) {
      u128 cur = (rem << 64) | work[i];
      work[i] = u64(cur / kChunk);
      rem = cur % kChunk;
    }
    while (!work.empty() && work.back() == 0) work.pop_back();
    chunks.push_back(u64(rem));
  }
  std::string out = std::to_string(chunks.back());
  for (std::size_t i = chunks.size() - 1; i-- > 0;) {
    std::string part = std::to_string(chunks[i]);
    out.append(19 - part.size(), '0');
    out += part;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Count& value) {
  return os << value.str();
}

}  // namespace abw
