#pragma once

#include <string>
#include <utility>
#include <vector>

#include "abw/census.hpp"
#include "abw/count.hpp"

namespace abw {

// CSV replica of one of the four reference value tables (which in 1..4).
// Output is a pure function of the closed forms: byte-identical across runs.
std::string render_table(int which);

struct VerifyOutcome {
  bool ok = false;
  std::string report;  // one line per n, PASS/FAIL per quantity
};

// Re-derives every closed-form quantity for 2 <= n <= n_max and compares it
// against the exhaustive census bins.
VerifyOutcome verify_against_oracle(int n_max, int threads = 1,
                                    int cap = kDefaultBruteCap);

// Named sequences for the CLI: "m", "md", "mo" (optionally a single gamma
// slice), "mbar", "mbar_eq", "mbar_neq", "mixed".
struct SequenceSpec {
  std::string name;
  int gamma = 0;  // for "mo": 0 means the sum over all gamma
};

std::vector<std::pair<int, Count>> sequence_values(const SequenceSpec& spec,
                                                   int n_max);

std::string render_sequence_csv(const SequenceSpec& spec, int n_max);
std::string render_sequence_json(const SequenceSpec& spec, int n_max);

}  // namespace abw
