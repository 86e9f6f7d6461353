#pragma once

#include "abw/count.hpp"

namespace abw {

// Number of length-m binary words whose shortest abelian border has length
// exactly k: (1/k) * C(2k-2, k-1) * 2^(m-2k+1). Requires m >= 2 (throws
// std::invalid_argument below that); returns 0 for k outside [1, floor(m/2)],
// since a border longer than half the word always forces a shorter one.
Count D(int m, int k);

// MAB pairs whose shortest borders are disjoint (i + j <= n):
// sum over i of D(2n-2i, j) * D(2i, i). Zero for n = 1.
Count m_disjoint(int n);

// MAB pairs whose shortest borders overlap in exactly g positions
// (g = i + j - n). Zero outside 1 <= g <= n - 2.
Count m_overlap_gamma(int n, int g);

// All MAB pairs: disjoint plus every overlap width.
Count m_total(int n);

// MAU pairs with equal Parikh vectors; defined for n >= 2 (throws below).
Count mbar_eq(int n);

// MAU pairs with unequal Parikh vectors; a letter-count gap of 1 is
// impossible, and gaps >= 2 are counted by the triplet-path evaluator.
// Defined for n >= 2 (throws below).
Count mbar_neq(int n);

// All MAU pairs; 4 when n = 1.
Count mbar_total(int n);

// Pairs with exactly one border side (internal-only == external-only):
// (4^n - m_total - mbar_total) / 2, exact by construction.
Count mixed_count(int n);

}  // namespace abw
