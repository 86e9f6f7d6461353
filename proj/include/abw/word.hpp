#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace abw {

// Fixed-length word over the alphabet {a, b}, bit-packed into a single 64-bit
// unit: bit p holds letter p (p = 0 is the leftmost letter), 'a' = 0, 'b' = 1.
// Bits at positions >= length are always zero. The packing caps word length at
// 63 and turns every Parikh comparison into a popcount of a masked range.
class BinaryWord {
 public:
  static constexpr int kMaxLength = 63;

  BinaryWord() = default;
  BinaryWord(std::uint64_t bits, int length);

  // Parses a string over {a, b}; throws std::invalid_argument on any other
  // character or on length > 63.
  static BinaryWord parse(std::string_view text);

  int length() const { return length_; }
  std::uint64_t bits() const { return bits_; }
  bool is_b(int pos) const { return (bits_ >> pos) & 1u; }
  std::string str() const;

  bool operator==(const BinaryWord&) const = default;

 private:
  std::uint64_t bits_ = 0;
  int length_ = 0;
};

struct ParikhPair {
  int count_a = 0;
  int count_b = 0;
  bool operator==(const ParikhPair&) const = default;
};

// Four-way status of an ordered pair of equal-length words, determined solely
// by the presence of internal and external abelian borders.
enum class PairClass { MAB, MAU, InternalOnly, ExternalOnly };

const char* to_string(PairClass c);

// Shortest internal (i) and external (j) abelian-border lengths of an MAB
// pair; gamma_len = i + j - n is the overlap of the two borders (meaningful
// only when positive).
struct BorderProfile {
  int i = 0;
  int j = 0;
  int gamma_len = 0;
  bool operator==(const BorderProfile&) const = default;
};

ParikhPair parikh(BinaryWord w);

// True iff x and y have equal length and equal letter counts.
bool abelian_equiv(BinaryWord x, BinaryWord y);

BinaryWord reverse(BinaryWord w);
BinaryWord complement(BinaryWord w);

// Smallest k in [1, |w|-1] whose length-k prefix is abelian-equivalent to the
// length-k suffix; nullopt when no such k exists (always for |w| <= 1).
std::optional<int> shortest_abelian_border(BinaryWord w);

// Shortest internal abelian-border length of the ordered pair (u, v): the
// smallest L in [1, n-1] with suffix_L(u) abelian-equivalent to prefix_L(v).
// The external side is lsb_pair(v, u). Borders are nonempty by definition on
// the suffix side; nonemptiness of the prefix side follows from the equal
// lengths. Throws std::invalid_argument if |u| != |v|.
std::optional<int> lsb_pair(BinaryWord u, BinaryWord v);

// Throws std::invalid_argument if |u| != |v|. Length-0 and length-1 pairs
// have no proper nonempty borders and classify as MAU.
PairClass classify(BinaryWord u, BinaryWord v);

// Border lengths when (u, v) is MAB; nullopt for the other three classes.
std::optional<BorderProfile> mab_profile(BinaryWord u, BinaryWord v);

}  // namespace abw
