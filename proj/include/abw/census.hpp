#pragma once

#include <map>
#include <string>

#include "abw/count.hpp"
#include "abw/word.hpp"

namespace abw {

// Default cap on the exhaustive pair census: 4^14 pairs is the point where a
// full run still finishes in desk time. brute_census refuses larger n unless
// the caller raises the cap explicitly.
inline constexpr int kDefaultBruteCap = 14;

// Exhaustive classification of all 4^n ordered pairs of length-n binary words.
// Invariants (checked before the record is returned):
//   m_total == m_disjoint + sum of m_overlap_by_gamma,
//   internal_only == external_only,
//   m_total + mbar_total + internal_only + external_only == 4^n.
struct CensusRecord {
  int n = 0;
  Count m_total;
  Count m_disjoint;
  std::map<int, Count> m_overlap_by_gamma;  // every gamma in [1, n-2] is a key
  Count mbar_total;
  Count mbar_eq;
  Count mbar_neq;
  Count internal_only;
  Count external_only;

  bool operator==(const CensusRecord&) const = default;
};

// Runs the census. `threads` is a partitioning hint only: the u-range is split
// into disjoint blocks whose partial tallies are summed, so the result is
// independent of the split. Throws std::invalid_argument when n < 1 or n is
// over the cap.
CensusRecord brute_census(int n, int threads = 1, int cap = kDefaultBruteCap);

// Number of length-m binary words whose shortest abelian border has length
// exactly k, by exhaustive scan. Total in m and k; 0 whenever impossible.
Count brute_D(int m, int k);

// Flat JSON object with decimal-string counts (safe at any precision).
std::string census_to_json(const CensusRecord& record);

}  // namespace abw
