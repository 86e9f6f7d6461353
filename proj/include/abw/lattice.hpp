#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "abw/count.hpp"
#include "abw/word.hpp"

namespace abw {

struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;
  bool operator==(const LatticePoint&) const = default;
};

// Debug form: "[x, y]".
std::ostream& operator<<(std::ostream& os, const LatticePoint& p);

// Monotone right/up path: letter 'a' is a right step, 'b' is an up step.
struct LatticePath {
  LatticePoint start;
  BinaryWord word;

  LatticePoint end() const;
  // All |word| + 1 lattice points visited, start first.
  std::vector<LatticePoint> points() const;
};

// Exact binomial coefficient; 0 whenever k < 0, k > n, or n < 0.
Count binomial(std::int64_t n, std::int64_t k);

// Number of monotone lattice paths from a to b (0 when b is not weakly
// up-right of a).
Count path_count(LatticePoint a, LatticePoint b);

// Gessel's count of ordered pairs of lattice paths that share exactly one
// common endpoint: (d / steps) * C(steps, off_hi) * C(steps, off_lo). The two
// call shapes used here are the fan out of the origin to two points of a
// diagonal line, and its mirror converging onto one point. The division is
// exact for every valid configuration; std::logic_error signals misuse.
Count fan_pair_count(std::int64_t d, std::int64_t steps, std::int64_t off_hi,
                     std::int64_t off_lo);

// Composition of an integer into an odd number 2r-1 of positive parts. Encodes
// an alternating a/b block word a^{p1} b^{p2} ... a^{p_{2r-1}}.
struct OddComposition {
  std::vector<int> parts;

  int block_count() const { return int(parts.size()); }
  int r() const { return (int(parts.size()) + 1) / 2; }
  bool operator==(const OddComposition&) const = default;
};

// Streams every (2r-1)-part composition of `total` with positive parts whose
// odd-position parts sum to odd_sum (so the even positions sum to the rest).
// Empty when infeasible. Throws std::invalid_argument when r < 2.
void for_each_odd_composition(int total, int odd_sum, int r,
                              const std::function<void(const OddComposition&)>& fn);

std::vector<OddComposition> odd_compositions(int total, int odd_sum, int r);

// Overlapping-border configuration for words of length n with shortest border
// lengths i (internal) and j (external), i + j > n. The guide paths cross the
// lines L1: X+Y = n-i and L2: X+Y = j at
//   A_l1 = (l1, n-i-l1),  A_l2 = (l2, n-i-l2),  A_k = (k, j-k),
// with the shifted crossing A_k' = A_k + (l1-l2, l2-l1) and the off-path
// corners E1 just above A_l1 and E2 just below A_k.
//
// The constructor checks n, i, j ranges, gamma >= 1 and 0 <= l2 < l1 <= n-i.
// It deliberately does not pin k to the reachable window [l1, l2+gamma]:
// counting operations treat an out-of-window k as an impossible configuration
// (count 0) or reject it, per their own contracts.
struct OverlapGeometry {
  int n = 0;
  int i = 0;
  int j = 0;
  int l1 = 0;
  int l2 = 0;
  int k = 0;

  OverlapGeometry(int n, int i, int j, int l1, int l2, int k);

  int gamma_len() const { return i + j - n; }
  int k_prime() const { return k + (l1 - l2); }

  LatticePoint a_l1() const { return {l1, std::int64_t(n) - i - l1}; }
  LatticePoint a_l2() const { return {l2, std::int64_t(n) - i - l2}; }
  LatticePoint a_k() const { return {k, std::int64_t(j) - k}; }
  LatticePoint a_k_prime() const {
    return {k_prime(), std::int64_t(j) - k_prime()};
  }
  LatticePoint e1() const { return {l1, std::int64_t(n) - i - l1 + 1}; }
  LatticePoint e2() const { return {k, std::int64_t(j) - k - 1}; }
};

// Triplet count for gamma_len in {1, 2}: exactly one guide configuration
// exists (1 when gamma = l1 - l2 and k = l1), otherwise none.
Count small_gamma_triple_count(const OverlapGeometry& g);

// Closed-form triplet count for gamma_len >= 3 and l1 - l2 >= 2. The flat case
// k = l2 + gamma (guide path is a single a-run) is C(gamma-2, k-l1); otherwise
// the count sums, over all odd compositions of gamma with odd-position sum
// k - l2, the number of middle paths threaded through the internal points of
// each composition's guide-path pair. Throws std::invalid_argument on
// precondition violations.
Count triple_count_closed(const OverlapGeometry& g);

// Contribution of a single composition to the non-flat closed form above.
Count triple_count_for_composition(const OverlapGeometry& g,
                                   const OddComposition& comp);

// Exhaustive triplet count |{(p, q, p')}| with p: a -> c, q: b -> c, p'
// starting at b carrying the word of p, p and q sharing only c, and q and p'
// sharing only b. Enumerates the words of p and counts admissible q by a grid
// DP that avoids p except at c and p' except at b. Requires X(a) < X(b) and
// distinct points.
Count triple_count_brute(LatticePoint a, LatticePoint b, LatticePoint c);

// Geometric form of the border test: do p_O(w) and p_O(reverse(w)) meet after
// k steps? Equivalent to prefix_k(w) being abelian-equivalent to suffix_k(w).
bool word_has_abelian_border_k(BinaryWord w, int k);

}  // namespace abw
