#include "abw/word.hpp"

#include <bit>
#include <stdexcept>

namespace abw {

namespace {

std::uint64_t low_mask(int n) { return (std::uint64_t{1} << n) - 1; }

}  // namespace

BinaryWord::BinaryWord(std::uint64_t bits, int length) : length_(length) {
  if (length < 0 || length > kMaxLength)
    throw std::invalid_argument("BinaryWord: length out of range");
  bits_ = bits & low_mask(length);
}

BinaryWord BinaryWord::parse(std::string_view text) {
  if (text.size() > kMaxLength)
    throw std::invalid_argument("BinaryWord: word longer than 63 letters");
  std::uint64_t bits = 0;
  for (std::size_t p = 0; p < text.size(); ++p) {
    if (text[p] == 'b')
      bits |= std::uint64_t{1} << p;
    else if (text[p] != 'a')
      throw std::invalid_argument("BinaryWord: letters must be 'a' or 'b'");
  }
  return BinaryWord(bits, int(text.size()));
}

std::string BinaryWord::str() const {
  std::string out(length_, 'a');
  for (int p = 0; p < length_; ++p)
    if (is_b(p)) out[p] = 'b';
  return out;
}

const char* to_string(PairClass c) {
  switch (c) {
    case PairClass::MAB: return "MAB";
    case PairClass::MAU: return "MAU";
    case PairClass::InternalOnly: return "InternalOnly";
    case PairClass::ExternalOnly: return "ExternalOnly";
  }
  return "?";
}

ParikhPair parikh(BinaryWord w) {
  int b = std::popcount(w.bits());
  return {w.length() - b, b};
}

bool abelian_equiv(BinaryWord x, BinaryWord y) {
  return x.length() == y.length() &&
         std::popcount(x.bits()) == std::popcount(y.bits());
}

BinaryWord reverse(BinaryWord w) {
  std::uint64_t bits = 0;
  const int n = w.length();
  for (int p = 0; p < n; ++p)
    if (w.is_b(p)) bits |= std::uint64_t{1} << (n - 1 - p);
  return BinaryWord(bits, n);
}

BinaryWord complement(BinaryWord w) {
  return BinaryWord(~w.bits(), w.length());
}

std::optional<int> shortest_abelian_border(BinaryWord w) {
  const int n = w.length();
  for (int k = 1; k < n; ++k) {
    if (std::popcount(w.bits() & low_mask(k)) ==
        std::popcount(w.bits() >> (n - k)))
      return k;
  }
  return std::nullopt;
}

std::optional<int> lsb_pair(BinaryWord u, BinaryWord v) {
  if (u.length() != v.length())
    throw std::invalid_argument("lsb_pair: words must have equal length");
  const int n = u.length();
  for (int len = 1; len < n; ++len) {
    if (std::popcount(u.bits() >> (n - len)) ==
        std::popcount(v.bits() & low_mask(len)))
      return len;
  }
  return std::nullopt;
}

PairClass classify(BinaryWord u, BinaryWord v) {
  const bool internal = lsb_pair(u, v).has_value();
  const bool external = lsb_pair(v, u).has_value();
  if (internal && external) return PairClass::MAB;
  if (internal) return PairClass::InternalOnly;
  if (external) return PairClass::ExternalOnly;
  return PairClass::MAU;
}

std::optional<BorderProfile> mab_profile(BinaryWord u, BinaryWord v) {
  const auto i = lsb_pair(u, v);
  const auto j = lsb_pair(v, u);
  if (!i || !j) return std::nullopt;
  return BorderProfile{*i, *j, *i + *j - u.length()};
}

}  // namespace abw
