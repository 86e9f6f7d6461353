#include "abw/lattice.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <stdexcept>

namespace abw {

std::ostream& operator<<(std::ostream& os, const LatticePoint& p) {
  return os << '[' << p.x << ", " << p.y << ']';
}

LatticePoint LatticePath::end() const {
  const auto p = parikh(word);
  return {start.x + p.count_a, start.y + p.count_b};
}

std::vector<LatticePoint> LatticePath::points() const {
  std::vector<LatticePoint> pts;
  pts.reserve(std::size_t(word.length()) + 1);
  LatticePoint cur = start;
  pts.push_back(cur);
  for (int t = 0; t < word.length(); ++t) {
    if (word.is_b(t))
      ++cur.y;
    else
      ++cur.x;
    pts.push_back(cur);
  }
  return pts;
}

Count binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return Count(0);
  if (k == 0 || k == n) return Count(1);
  // Pascal rows cached per thread for the small arguments the counting sums
  // hammer on; multiplicative evaluation beyond the cache range.
  constexpr std::int64_t kCachedRows = 512;
  if (n <= kCachedRows) {
    static thread_local std::vector<std::vector<Count>> rows{{Count(1)}};
    while (std::int64_t(rows.size()) <= n) {
      const auto& prev = rows.back();
      std::vector<Count> row(prev.size() + 1, Count(1));
      for (std::size_t t = 1; t + 1 < row.size(); ++t)
        row[t] = prev[t - 1] + prev[t];
      rows.push_back(std::move(row));
    }
    return rows[std::size_t(n)][std::size_t(k)];
  }
  k = std::min(k, n - k);
  Count result(1);
  for (std::int64_t t = 1; t <= k; ++t)
    result = (result * Count(std::uint64_t(n - k + t))).div_exact(std::uint64_t(t));
  return result;
}

Count path_count(LatticePoint a, LatticePoint b) {
  const std::int64_t dx = b.x - a.x;
  const std::int64_t dy = b.y - a.y;
  if (dx < 0 || dy < 0) return Count(0);
  return binomial(dx + dy, dx);
}

Count fan_pair_count(std::int64_t d, std::int64_t steps, std::int64_t off_hi,
                     std::int64_t off_lo) {
  if (d < 1) throw std::invalid_argument("fan_pair_count: d must be positive");
  if (steps < 1)
    throw std::invalid_argument("fan_pair_count: steps must be positive");
  Count prod = binomial(steps, off_hi) * binomial(steps, off_lo) *
               Count(std::uint64_t(d));
  return prod.div_exact(std::uint64_t(steps));
}

namespace {

// Positive compositions of `total` into `parts` parts, lexicographic order.
void for_each_positive_composition(int total, int parts, std::vector<int>& buf,
                                   int index,
                                   const std::function<void(const std::vector<int>&)>& fn) {
  if (index == parts - 1) {
    buf[std::size_t(index)] = total;
    fn(buf);
    return;
  }
  const int remaining_parts = parts - index - 1;
  for (int value = 1; value <= total - remaining_parts; ++value) {
    buf[std::size_t(index)] = value;
    for_each_positive_composition(total - value, parts, buf, index + 1, fn);
  }
}

}  // namespace

void for_each_odd_composition(int total, int odd_sum, int r,
                              const std::function<void(const OddComposition&)>& fn) {
  if (r < 2)
    throw std::invalid_argument("for_each_odd_composition: r must be at least 2");
  const int even_sum = total - odd_sum;
  if (odd_sum < r || even_sum < r - 1) return;  // infeasible: empty stream

  std::vector<int> odd(std::size_t(r), 0);
  std::vector<int> even(std::size_t(r - 1), 0);
  OddComposition comp;
  comp.parts.assign(std::size_t(2 * r - 1), 0);

  for_each_positive_composition(odd_sum, r, odd, 0, [&](const std::vector<int>& o) {
    for_each_positive_composition(
        even_sum, r - 1, even, 0, [&](const std::vector<int>& e) {
          for (int t = 0; t < r; ++t) comp.parts[std::size_t(2 * t)] = o[std::size_t(t)];
          for (int t = 0; t < r - 1; ++t)
            comp.parts[std::size_t(2 * t + 1)] = e[std::size_t(t)];
          fn(comp);
        });
  });
}

std::vector<OddComposition> odd_compositions(int total, int odd_sum, int r) {
  std::vector<OddComposition> out;
  for_each_odd_composition(total, odd_sum, r,
                           [&](const OddComposition& c) { out.push_back(c); });
  return out;
}

OverlapGeometry::OverlapGeometry(int n, int i, int j, int l1, int l2, int k)
    : n(n), i(i), j(j), l1(l1), l2(l2), k(k) {
  if (n < 3 || i < 1 || i > n - 1 || j < 1 || j > n - 1)
    throw std::invalid_argument("OverlapGeometry: bad word/border lengths");
  if (i + j <= n)
    throw std::invalid_argument("OverlapGeometry: borders do not overlap");
  if (l2 < 0 || l1 <= l2 || l1 > n - i)
    throw std::invalid_argument("OverlapGeometry: need 0 <= l2 < l1 <= n-i");
}

Count small_gamma_triple_count(const OverlapGeometry& g) {
  const int gamma = g.gamma_len();
  if (gamma != 1 && gamma != 2)
    throw std::invalid_argument("small_gamma_triple_count: gamma must be 1 or 2");
  if (g.l1 - g.l2 == gamma && g.k == g.l1) return Count(1);
  return Count(0);
}

Count triple_count_for_composition(const OverlapGeometry& g,
                                   const OddComposition& comp) {
  const auto& parts = comp.parts;
  const int r = comp.r();
  if (parts.size() % 2 == 0 || r < 2)
    throw std::invalid_argument(
        "triple_count_for_composition: need an odd number of parts, r >= 2");
  for (int part : parts)
    if (part < 1)
      throw std::invalid_argument(
          "triple_count_for_composition: parts must be positive");
  const int d = g.l1 - g.l2;
  const int pivot = g.k - g.l1;

  // Locate the odd block the pivot falls in: the guide path from A_l1 reaches
  // column k inside its (ell+1)-th a-run, split as n' + n'' with n'' > 0.
  int ell = -1;
  int prefix = 0;
  for (int t = 0; t < r; ++t) {
    const int part = parts[std::size_t(2 * t)];
    if (pivot < prefix + part) {
      ell = t;
      break;
    }
    prefix += part;
  }
  if (ell < 0) return Count(0);
  const int n_dprime = parts[std::size_t(2 * ell)] - (pivot - prefix);

  // The split must reproduce l1 - l2; compositions that fail contribute 0.
  int tail = n_dprime;
  for (int t = ell + 1; t < r; ++t) tail += parts[std::size_t(2 * t)];
  if (tail != d) return Count(0);

  // Upper bounds on the internal-point indices s_1, t_2, ..., t_{2r-2}. Up to
  // position 2*ell the two guide paths are a full diagonal apart; past the
  // pivot block the gap shrinks by each remaining a-run.
  const int q_count = 2 * r - 2;
  std::vector<int> hi(std::size_t(q_count) + 1, 0);
  for (int q = 1; q <= std::min(q_count, 2 * ell); ++q) hi[std::size_t(q)] = d - 1;
  int bound = d - n_dprime;
  int sigma = 1;
  for (int q = 2 * ell + 1; q <= q_count; ++q) {
    const int rel = q - 2 * ell;
    const int s = (rel % 2 == 1) ? rel : rel - 1;
    if (s > sigma) {
      bound -= parts[std::size_t(2 * ell + s - 1)];
      sigma = s;
    }
    hi[std::size_t(q)] = bound;
  }
  for (int q = 1; q <= q_count; ++q) {
    if (hi[std::size_t(q)] < 1)
      throw std::logic_error("triple_count_for_composition: empty internal-point set");
  }

  // Chain DP over the index variables: each factor couples adjacent variables
  // only, so the sum over the whole box is a product of transfer sums.
  std::vector<Count> dp(std::size_t(hi[1]) + 1);
  for (int v = 1; v <= hi[1]; ++v)
    dp[std::size_t(v)] = binomial(parts[0] - 1, parts[0] - d + v);
  for (int q = 2; q <= q_count; ++q) {
    std::vector<Count> next(std::size_t(hi[std::size_t(q)]) + 1);
    const int part = parts[std::size_t(q - 1)];
    const bool even_pos = (q % 2 == 0);
    for (int v = 1; v <= hi[std::size_t(q)]; ++v) {
      Count acc;
      for (int u = 1; u <= hi[std::size_t(q - 1)]; ++u) {
        if (dp[std::size_t(u)].is_zero()) continue;
        const Count step = even_pos ? binomial(part, v - u)
                                    : binomial(part, part + v - u);
        acc += dp[std::size_t(u)] * step;
      }
      next[std::size_t(v)] = acc;
    }
    dp = std::move(next);
  }
  const int last = parts[std::size_t(2 * r - 2)];
  Count total;
  for (int v = 1; v <= hi[std::size_t(q_count)]; ++v)
    total += dp[std::size_t(v)] * binomial(last - 1, last - v);
  return total;
}

Count triple_count_closed(const OverlapGeometry& g) {
  const int gamma = g.gamma_len();
  if (gamma < 3)
    throw std::invalid_argument("triple_count_closed: gamma must be at least 3");
  if (g.l1 - g.l2 < 2)
    throw std::invalid_argument("triple_count_closed: need l1 - l2 >= 2");
  if (g.k < g.l1 || g.k > g.l2 + gamma)
    throw std::invalid_argument("triple_count_closed: k outside [l1, l2+gamma]");

  if (g.k == g.l2 + gamma)  // flat: Y(A_k) = Y(A_l2), guide path is a^gamma
    return binomial(gamma - 2, g.k - g.l1);

  const int odd_sum = g.k - g.l2;
  Count total;
  for (int r = 2; r <= (gamma + 1) / 2; ++r) {
    for_each_odd_composition(gamma, odd_sum, r, [&](const OddComposition& comp) {
      total += triple_count_for_composition(g, comp);
    });
  }
  return total;
}

Count triple_count_brute(LatticePoint a, LatticePoint b, LatticePoint c) {
  if (a.x >= b.x)
    throw std::invalid_argument("triple_count_brute: requires X(a) < X(b)");
  if (a == b || b == c || a == c)
    throw std::invalid_argument("triple_count_brute: points must be distinct");
  const std::int64_t dxa = c.x - a.x, dya = c.y - a.y;
  if (dxa < 0 || dya < 0) return Count(0);
  const std::int64_t dxb = c.x - b.x, dyb = c.y - b.y;
  if (dxb < 0 || dyb < 0) return Count(0);
  const int steps = int(dxa + dya);
  if (steps > 60)
    throw std::invalid_argument("triple_count_brute: word length over 60");

  const int cols = int(dxb) + 1;
  const int rows = int(dyb) + 1;
  std::vector<std::uint8_t> blocked(std::size_t(cols) * rows);
  std::vector<std::uint64_t> dp(std::size_t(cols) * rows);
  const auto cell = [&](std::int64_t x, std::int64_t y) {
    return std::size_t(y - b.y) * std::size_t(cols) + std::size_t(x - b.x);
  };
  const auto in_grid = [&](std::int64_t x, std::int64_t y) {
    return x >= b.x && x <= c.x && y >= b.y && y <= c.y;
  };

  Count total;
  const auto visit = [&](std::uint64_t word) {
    std::fill(blocked.begin(), blocked.end(), std::uint8_t{0});
    // Obstacles: every point of p except its endpoint c, and every point of
    // the translated copy p' except its start b.
    std::int64_t px = a.x, py = a.y;
    std::int64_t qx = b.x, qy = b.y;
    for (int t = 0; t < steps; ++t) {
      if (in_grid(px, py)) blocked[cell(px, py)] = 1;
      if (t > 0 && in_grid(qx, qy)) blocked[cell(qx, qy)] = 1;
      if ((word >> t) & 1u) {
        ++py;
        ++qy;
      } else {
        ++px;
        ++qx;
      }
    }
    if (in_grid(qx, qy)) blocked[cell(qx, qy)] = 1;  // p' endpoint (p's is c)

    for (int y = 0; y < rows; ++y) {
      for (int x = 0; x < cols; ++x) {
        const std::size_t at = std::size_t(y) * std::size_t(cols) + std::size_t(x);
        if (blocked[at]) {
          dp[at] = 0;
        } else if (x == 0 && y == 0) {
          dp[at] = 1;
        } else {
          std::uint64_t ways = 0;
          if (x > 0) ways += dp[at - 1];
          if (y > 0) ways += dp[at - std::size_t(cols)];
          dp[at] = ways;
        }
      }
    }
    total += Count(dp[std::size_t(cols) * rows - 1]);
  };

  if (dya == 0) {
    visit(0);
  } else {
    std::uint64_t word = (std::uint64_t{1} << dya) - 1;
    const std::uint64_t limit = std::uint64_t{1} << steps;
    while (true) {
      visit(word);
      const std::uint64_t t = word | (word - 1);  // Gosper: next same-popcount word
      const std::uint64_t next =
          (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(word) + 1));
      if (next >= limit) break;
      word = next;
    }
  }
  return total;
}

bool word_has_abelian_border_k(BinaryWord w, int k) {
  if (k < 1 || k >= w.length()) return false;
  const LatticePath forward{{0, 0}, w};
  const LatticePath backward{{0, 0}, reverse(w)};
  return forward.points()[std::size_t(k)] == backward.points()[std::size_t(k)];
}

}  // namespace abw
