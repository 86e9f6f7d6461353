#include "abw/counters.hpp"

#include <stdexcept>

#include "abw/lattice.hpp"

namespace abw {

Count D(int m, int k) {
  if (m < 2) throw std::invalid_argument("D: m must be at least 2");
  if (k < 1 || 2 * k > m) return Count(0);
  const Count value =
      binomial(2 * k - 2, k - 1) * Count::pow2(unsigned(m - 2 * k + 1));
  return value.div_exact(std::uint64_t(k));
}

Count m_disjoint(int n) {
  if (n < 1) throw std::invalid_argument("m_disjoint: n must be at least 1");
  if (n < 2) return Count(0);
  Count total;
  for (int i = 1; i <= n - 1; ++i) {
    Count inner;
    for (int j = 1; j <= n - i; ++j) inner += D(2 * n - 2 * i, j);
    total += inner * D(2 * i, i);
  }
  return total;
}

namespace {

// gamma = 1: the guide configuration is unique (l1 - l2 = 1, k = l1), so the
// count is a product of two Gessel fans; the L3 crossing m ranges over
// [l1+1, l1+i-1], which depends on i only.
Count overlap_gamma_one(int n) {
  Count total;
  for (int i = 2; i <= n - 1; ++i) {
    const int alpha_steps = n - i;  // along L1
    const int beta_steps = i - 1;   // from L2 to L3 (= n - j)
    Count m_sum;
    for (int t = 1; t <= beta_steps; ++t)
      m_sum += fan_pair_count(1, beta_steps, t, t - 1);
    Count l_sum;
    for (int l1 = 1; l1 <= alpha_steps; ++l1)
      l_sum += fan_pair_count(1, alpha_steps, l1, l1 - 1);
    total += l_sum * m_sum;
  }
  return total * Count(2);
}

// gamma = 2: again a single guide configuration (l1 - l2 = 2, k = l1). The
// statement's i-range starts at 3, the proof's at 4; they agree because the
// m-range [l1+2, l1+i-2] is empty at i = 3.
Count overlap_gamma_two(int n) {
  Count total;
  for (int i = 3; i <= n - 2; ++i) {
    const int alpha_steps = n - i;
    const int beta_steps = i - 2;
    Count m_sum;
    for (int t = 2; t <= beta_steps; ++t)
      m_sum += fan_pair_count(2, beta_steps, t, t - 2);
    if (m_sum.is_zero()) continue;
    Count l_sum;
    for (int l1 = 2; l1 <= alpha_steps; ++l1)
      l_sum += fan_pair_count(2, alpha_steps, l1, l1 - 2);
    total += l_sum * m_sum;
  }
  return total * Count(2);
}

// gamma >= 3: full sum over crossing positions; the triplet count in the
// middle comes from the composition machinery (or the flat-case binomial).
Count overlap_gamma_large(int n, int g) {
  Count total;
  for (int i = g + 2; i <= n - 2; ++i) {
    const int j = n + g - i;
    const int alpha_steps = n - i;
    const int beta_steps = n - j;
    for (int l2 = 0; l2 + 2 <= alpha_steps; ++l2) {
      for (int l1 = l2 + 2; l1 <= alpha_steps; ++l1) {
        const int d = l1 - l2;
        if (d > g) break;           // k-window [l1, l2+g] is empty
        if (d > beta_steps) continue;  // m-window [k+d, k+beta] is empty
        const Count fan_left = fan_pair_count(d, alpha_steps, l1, l2);
        if (fan_left.is_zero()) continue;
        Count m_sum;
        for (int t = d; t <= beta_steps; ++t)
          m_sum += fan_pair_count(d, beta_steps, t, t - d);
        if (m_sum.is_zero()) continue;
        Count k_sum;
        for (int k = l1; k <= l2 + g; ++k)
          k_sum += triple_count_closed(OverlapGeometry(n, i, j, l1, l2, k));
        total += fan_left * m_sum * k_sum;
      }
    }
  }
  return total * Count(2);
}

}  // namespace

Count m_overlap_gamma(int n, int g) {
  if (n < 1) throw std::invalid_argument("m_overlap_gamma: n must be at least 1");
  if (g < 1 || g > n - 2) return Count(0);
  if (g == 1) return overlap_gamma_one(n);
  if (g == 2) return overlap_gamma_two(n);
  return overlap_gamma_large(n, g);
}

Count m_total(int n) {
  Count total = m_disjoint(n);
  for (int g = 1; g <= n - 2; ++g) total += m_overlap_gamma(n, g);
  return total;
}

Count mbar_eq(int n) {
  if (n < 2) throw std::invalid_argument("mbar_eq: n must be at least 2");
  Count total;
  for (int i = 1; i <= n - 1; ++i) total += fan_pair_count(1, n - 1, i, i - 1);
  return total * Count(2);
}

Count mbar_neq(int n) {
  if (n < 2) throw std::invalid_argument("mbar_neq: n must be at least 2");
  // Letter-count gaps of 1 contribute nothing; for gaps r1 - r2 >= 2 the pairs
  // biject with path triplets counted by the exhaustive evaluator.
  Count total;
  for (int r2 = 0; r2 <= n - 2; ++r2) {
    for (int r1 = r2 + 2; r1 <= n; ++r1) {
      const LatticePoint a{std::int64_t(r2) - r1, std::int64_t(r1) - r2};
      const LatticePoint origin{0, 0};
      const LatticePoint b{r2, std::int64_t(n) - r2};
      total += triple_count_brute(a, origin, b);
    }
  }
  return total * Count(2);
}

Count mbar_total(int n) {
  if (n < 1) throw std::invalid_argument("mbar_total: n must be at least 1");
  if (n == 1) return Count(4);
  return mbar_eq(n) + mbar_neq(n);
}

Count mixed_count(int n) {
  if (n < 1) throw std::invalid_argument("mixed_count: n must be at least 1");
  Count rest = Count::pow2(unsigned(2 * n));
  rest -= m_total(n);
  rest -= mbar_total(n);
  return rest.div_exact(2);
}

}  // namespace abw
