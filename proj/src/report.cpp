#include "abw/report.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "abw/counters.hpp"

namespace abw {

std::string render_table(int which) {
  std::ostringstream out;
  switch (which) {
    case 1:
      out << "n,Md(n)\n";
      for (int n = 1; n <= 12; ++n) out << n << ',' << m_disjoint(n).str() << '\n';
      break;
    case 2:
      out << "n,Mo_g1(n),Mo_g2(n)\n";
      for (int n = 1; n <= 12; ++n)
        out << n << ',' << m_overlap_gamma(n, 1).str() << ','
            << m_overlap_gamma(n, 2).str() << '\n';
      break;
    case 3:
      out << "n,Mo_g3(n),Mo_g4(n)\n";
      for (int n = 1; n <= 12; ++n)
        out << n << ',' << m_overlap_gamma(n, 3).str() << ','
            << m_overlap_gamma(n, 4).str() << '\n';
      break;
    case 4:
      out << "n,Mbar_eq(n)\n";
      for (int n = 2; n <= 12; ++n) out << n << ',' << mbar_eq(n).str() << '\n';
      break;
    default:
      throw std::invalid_argument("render_table: table number must be 1..4");
  }
  return out.str();
}

VerifyOutcome verify_against_oracle(int n_max, int threads, int cap) {
  VerifyOutcome outcome;
  outcome.ok = true;
  std::ostringstream out;
  const auto check = [&](std::ostringstream& line, const std::string& name,
                         const Count& formula, const Count& oracle) {
    const bool good = formula == oracle;
    outcome.ok = outcome.ok && good;
    line << ' ' << name << '=';
    if (good)
      line << "PASS";
    else
      line << "FAIL(" << formula.str() << "!=" << oracle.str() << ')';
  };

  for (int n = 2; n <= n_max; ++n) {
    const CensusRecord census = brute_census(n, threads, cap);
    std::ostringstream line;
    line << "n=" << n << ':';
    int bad_k = -1;
    for (int k = 0; k <= n + 1 && bad_k < 0; ++k)
      if (D(n, k) != brute_D(n, k)) bad_k = k;
    if (bad_k < 0) {
      line << " D=PASS";
    } else {
      outcome.ok = false;
      line << " D=FAIL(k=" << bad_k << ')';
    }
    check(line, "Md", m_disjoint(n), census.m_disjoint);
    for (int g = 1; g <= n - 2; ++g)
      check(line, "Mo[" + std::to_string(g) + ']', m_overlap_gamma(n, g),
            census.m_overlap_by_gamma.at(g));
    check(line, "M", m_total(n), census.m_total);
    check(line, "Mbar_eq", mbar_eq(n), census.mbar_eq);
    check(line, "Mbar_neq", mbar_neq(n), census.mbar_neq);
    check(line, "Mbar", mbar_total(n), census.mbar_total);
    check(line, "Mixed", mixed_count(n), census.internal_only);
    out << line.str() << '\n';
  }
  outcome.report = out.str();
  return outcome;
}

namespace {

int sequence_start(const std::string& name) {
  if (name == "mbar_eq" || name == "mbar_neq") return 2;
  return 1;
}

Count sequence_value(const SequenceSpec& spec, int n) {
  if (spec.name == "m") return m_total(n);
  if (spec.name == "md") return m_disjoint(n);
  if (spec.name == "mo") {
    if (spec.gamma > 0) return m_overlap_gamma(n, spec.gamma);
    Count total;
    for (int g = 1; g <= n - 2; ++g) total += m_overlap_gamma(n, g);
    return total;
  }
  if (spec.name == "mbar") return mbar_total(n);
  if (spec.name == "mbar_eq") return mbar_eq(n);
  if (spec.name == "mbar_neq") return mbar_neq(n);
  if (spec.name == "mixed") return mixed_count(n);
  throw std::invalid_argument("unknown sequence: " + spec.name);
}

std::string sequence_label(const SequenceSpec& spec) {
  if (spec.name == "mo" && spec.gamma > 0)
    return "mo_g" + std::to_string(spec.gamma);
  return spec.name;
}

}  // namespace

std::vector<std::pair<int, Count>> sequence_values(const SequenceSpec& spec,
                                                   int n_max) {
  std::vector<std::pair<int, Count>> values;
  for (int n = sequence_start(spec.name); n <= n_max; ++n)
    values.emplace_back(n, sequence_value(spec, n));
  return values;
}

std::string render_sequence_csv(const SequenceSpec& spec, int n_max) {
  std::ostringstream out;
  out << "n," << sequence_label(spec) << "(n)\n";
  for (const auto& [n, value] : sequence_values(spec, n_max))
    out << n << ',' << value.str() << '\n';
  return out.str();
}

std::string render_sequence_json(const SequenceSpec& spec, int n_max) {
  nlohmann::ordered_json out;
  out["sequence"] = sequence_label(spec);
  out["start_n"] = sequence_start(spec.name);
  auto& arr = out["values"] = nlohmann::ordered_json::array();
  for (const auto& [n, value] : sequence_values(spec, n_max))
    arr.push_back(value.str());
  return out.dump(2);
}

}  // namespace abw
