#include "abw/census.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include <json.hpp>

namespace abw {

namespace {

using u64 = std::uint64_t;

// Hard structural limit: the prefix/suffix profile tables take 2 * (n+1) * 2^n
// bytes, and 4^n pairs beyond this are out of reach anyway.
constexpr int kStructuralCap = 30;

// Per-block tally in machine words; converted to Count once at the end.
struct Tally {
  u64 disjoint = 0;
  std::vector<u64> overlap;  // indexed by gamma = i + j - n
  u64 mau_eq = 0;
  u64 mau_neq = 0;
  u64 internal_only = 0;
  u64 external_only = 0;

  explicit Tally(int n) : overlap(std::size_t(n) + 1, 0) {}

  void merge(const Tally& other) {
    disjoint += other.disjoint;
    for (std::size_t g = 0; g < overlap.size(); ++g) overlap[g] += other.overlap[g];
    mau_eq += other.mau_eq;
    mau_neq += other.mau_neq;
    internal_only += other.internal_only;
    external_only += other.external_only;
  }
};

// pre[w][L] = #b in the length-L prefix of w; suf[w][L] = #b in the length-L
// suffix. Equal-length factors are abelian-equivalent iff their b-counts match.
std::vector<std::uint8_t> prefix_profiles(int n) {
  const std::size_t words = std::size_t(1) << n;
  const int stride = n + 1;
  std::vector<std::uint8_t> table(words * stride);
  for (std::size_t w = 0; w < words; ++w) {
    std::uint8_t* row = &table[w * stride];
    row[0] = 0;
    for (int len = 1; len <= n; ++len)
      row[len] = std::uint8_t(row[len - 1] + ((w >> (len - 1)) & 1u));
  }
  return table;
}

std::vector<std::uint8_t> suffix_profiles(int n) {
  const std::size_t words = std::size_t(1) << n;
  const int stride = n + 1;
  std::vector<std::uint8_t> table(words * stride);
  for (std::size_t w = 0; w < words; ++w) {
    std::uint8_t* row = &table[w * stride];
    row[0] = 0;
    for (int len = 1; len <= n; ++len)
      row[len] = std::uint8_t(row[len - 1] + ((w >> (n - len)) & 1u));
  }
  return table;
}

void census_block(int n, u64 u_begin, u64 u_end,
                  const std::vector<std::uint8_t>& pre,
                  const std::vector<std::uint8_t>& suf, Tally& tally) {
  const int stride = n + 1;
  const u64 words = u64(1) << n;
  for (u64 u = u_begin; u < u_end; ++u) {
    const std::uint8_t* pu = &pre[u * stride];
    const std::uint8_t* su = &suf[u * stride];
    for (u64 v = 0; v < words; ++v) {
      const std::uint8_t* pv = &pre[v * stride];
      const std::uint8_t* sv = &suf[v * stride];
      // i = lsb(u, v): shortest L with suffix_L(u) ~ prefix_L(v).
      // j = lsb(v, u): the external side.
      int i = 0, j = 0;
      for (int len = 1; len < n; ++len) {
        if (i == 0 && su[len] == pv[len]) i = len;
        if (j == 0 && sv[len] == pu[len]) j = len;
        if (i != 0 && j != 0) break;
      }
      if (i != 0 && j != 0) {
        if (i + j <= n)
          ++tally.disjoint;
        else
          ++tally.overlap[std::size_t(i + j - n)];
      } else if (i == 0 && j == 0) {
        if (pu[n] == pv[n])
          ++tally.mau_eq;
        else
          ++tally.mau_neq;
      } else if (i != 0) {
        ++tally.internal_only;
      } else {
        ++tally.external_only;
      }
    }
  }
}

}  // namespace

CensusRecord brute_census(int n, int threads, int cap) {
  if (n < 1) throw std::invalid_argument("brute_census: n must be at least 1");
  if (n > cap) throw std::invalid_argument("brute_census: n exceeds the cap");
  if (n > kStructuralCap)
    throw std::invalid_argument("brute_census: n exceeds the structural limit");

  const auto pre = prefix_profiles(n);
  const auto suf = suffix_profiles(n);
  const u64 words = u64(1) << n;

  Tally total(n);
  int workers = threads < 1 ? 1 : threads;
  if (u64(workers) > words) workers = int(words);
  if (workers == 1) {
    census_block(n, 0, words, pre, suf, total);
  } else {
    std::vector<Tally> parts;
    parts.reserve(std::size_t(workers));
    for (int t = 0; t < workers; ++t) parts.emplace_back(n);
    std::vector<std::thread> pool;
    pool.reserve(std::size_t(workers));
    for (int t = 0; t < workers; ++t) {
      const u64 begin = words * u64(t) / u64(workers);
      const u64 end = words * u64(t + 1) / u64(workers);
      pool.emplace_back(census_block, n, begin, end, std::cref(pre),
                        std::cref(suf), std::ref(parts[std::size_t(t)]));
    }
    for (auto& th : pool) th.join();
    for (const auto& part : parts) total.merge(part);
  }

  CensusRecord record;
  record.n = n;
  record.m_disjoint = Count(total.disjoint);
  Count overlap_sum;
  for (int g = 1; g <= n - 2; ++g) {
    record.m_overlap_by_gamma[g] = Count(total.overlap[std::size_t(g)]);
    overlap_sum += Count(total.overlap[std::size_t(g)]);
  }
  record.m_total = record.m_disjoint + overlap_sum;
  record.mbar_eq = Count(total.mau_eq);
  record.mbar_neq = Count(total.mau_neq);
  record.mbar_total = record.mbar_eq + record.mbar_neq;
  record.internal_only = Count(total.internal_only);
  record.external_only = Count(total.external_only);

  if (record.internal_only != record.external_only)
    throw std::logic_error("brute_census: internal/external counts differ");
  const Count all = record.m_total + record.mbar_total + record.internal_only +
                    record.external_only;
  if (all != Count::pow2(unsigned(2 * n)))
    throw std::logic_error("brute_census: class counts do not partition 4^n");
  return record;
}

Count brute_D(int m, int k) {
  if (m < 0 || m > kStructuralCap)
    throw std::invalid_argument("brute_D: m out of range");
  if (m < 2 || k < 1 || k >= m) return Count(0);
  u64 hits = 0;
  const u64 words = u64(1) << m;
  for (u64 w = 0; w < words; ++w) {
    const auto sb = shortest_abelian_border(BinaryWord(w, m));
    if (sb && *sb == k) ++hits;
  }
  return Count(hits);
}

std::string census_to_json(const CensusRecord& record) {
  nlohmann::ordered_json out;
  out["n"] = record.n;
  out["m_total"] = record.m_total.str();
  out["m_disjoint"] = record.m_disjoint.str();
  for (const auto& [gamma, count] : record.m_overlap_by_gamma)
    out["m_overlap_g" + std::to_string(gamma)] = count.str();
  out["mbar_total"] = record.mbar_total.str();
  out["mbar_eq"] = record.mbar_eq.str();
  out["mbar_neq"] = record.mbar_neq.str();
  out["internal_only"] = record.internal_only.str();
  out["external_only"] = record.external_only.str();
  return out.dump(2);
}

}  // namespace abw
