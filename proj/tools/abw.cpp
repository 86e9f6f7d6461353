// abw — classify ordered pairs of binary words by mutual abelian-border
// status, compute the census counts in closed form, and cross-check the
// formulas against the exhaustive oracle.

#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "abw/census.hpp"
#include "abw/counters.hpp"
#include "abw/report.hpp"
#include "abw/word.hpp"

namespace {

int run_classify(const std::string& u_text, const std::string& v_text) {
  const abw::BinaryWord u = abw::BinaryWord::parse(u_text);
  const abw::BinaryWord v = abw::BinaryWord::parse(v_text);
  if (u.length() != v.length()) {
    std::cerr << "error: words must have equal length\n";
    return 2;
  }
  const auto i = abw::lsb_pair(u, v);
  const auto j = abw::lsb_pair(v, u);
  std::ostringstream out;
  out << abw::to_string(abw::classify(u, v));
  out << " i=" << (i ? std::to_string(*i) : "-");
  out << " j=" << (j ? std::to_string(*j) : "-");
  std::cout << out.str() << '\n';
  return 0;
}

int run_count(const std::string& which, int n, int gamma) {
  abw::Count value;
  if (which == "m")
    value = abw::m_total(n);
  else if (which == "md")
    value = abw::m_disjoint(n);
  else if (which == "mo")
    value = gamma > 0 ? abw::m_overlap_gamma(n, gamma)
                      : abw::m_total(n) - abw::m_disjoint(n);
  else if (which == "mbar")
    value = abw::mbar_total(n);
  else if (which == "mbar_eq")
    value = abw::mbar_eq(n);
  else if (which == "mbar_neq")
    value = abw::mbar_neq(n);
  else if (which == "mixed")
    value = abw::mixed_count(n);
  else {
    std::cerr << "error: unknown quantity '" << which << "'\n";
    return 2;
  }
  std::cout << value.str() << '\n';
  return 0;
}

void warn_if_expensive(int n, int cap) {
  if (n > abw::kDefaultBruteCap && n <= cap)
    std::cerr << "warning: census at n=" << n << " enumerates 4^" << n
              << " ordered pairs; expect a long run\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mutually abelian-bordered pair classification and counting"};
  app.require_subcommand(1);

  std::string word_u, word_v;
  auto* classify_cmd =
      app.add_subcommand("classify", "classify an ordered pair of {a,b}-words");
  classify_cmd->add_option("u", word_u, "first word")->required();
  classify_cmd->add_option("v", word_v, "second word")->required();

  std::string quantity;
  int count_n = 0;
  int count_gamma = 0;
  auto* count_cmd =
      app.add_subcommand("count", "evaluate one closed-form count");
  count_cmd
      ->add_option("which", quantity,
                   "one of m, md, mo, mbar, mbar_eq, mbar_neq, mixed")
      ->required();
  count_cmd->add_option("n", count_n, "word length")
      ->required()
      ->check(CLI::PositiveNumber);
  count_cmd->add_option("--gamma", count_gamma,
                        "restrict mo to one overlap width");

  int brute_n = 0;
  int max_n = abw::kDefaultBruteCap;
  int threads = 1;
  auto* brute_cmd =
      app.add_subcommand("brute", "run the exhaustive census over all 4^n pairs");
  brute_cmd->add_option("n", brute_n, "word length")
      ->required()
      ->check(CLI::PositiveNumber);
  brute_cmd->add_option("--max-n", max_n, "raise the census cap (costly)");
  brute_cmd->add_option("--threads", threads,
                        "worker hint; never affects results");

  int verify_n = 0;
  auto* verify_cmd = app.add_subcommand(
      "verify", "check every closed form against the oracle for 2..n_max");
  verify_cmd->add_option("n_max", verify_n, "largest word length")
      ->required()
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-n", max_n, "raise the census cap (costly)");
  verify_cmd->add_option("--threads", threads,
                         "worker hint; never affects results");

  int table_id = 0;
  auto* tables_cmd =
      app.add_subcommand("tables", "emit a reference value table as CSV");
  tables_cmd->add_option("which", table_id, "table number 1..4")
      ->required()
      ->check(CLI::Range(1, 4));

  std::string seq_name;
  int seq_max_n = 0;
  int seq_gamma = 0;
  std::string seq_format = "csv";
  auto* seq_cmd = app.add_subcommand("sequence", "emit a named count sequence");
  seq_cmd
      ->add_option("which", seq_name,
                   "one of m, md, mo, mbar, mbar_eq, mbar_neq, mixed")
      ->required();
  seq_cmd->add_option("--max-n", seq_max_n, "largest word length")
      ->required()
      ->check(CLI::PositiveNumber);
  seq_cmd->add_option("--gamma", seq_gamma, "restrict mo to one overlap width");
  seq_cmd->add_option("--format", seq_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*classify_cmd) return run_classify(word_u, word_v);
    if (*count_cmd) return run_count(quantity, count_n, count_gamma);
    if (*brute_cmd) {
      warn_if_expensive(brute_n, max_n);
      const auto record = abw::brute_census(brute_n, threads, max_n);
      std::cout << abw::census_to_json(record) << '\n';
      return 0;
    }
    if (*verify_cmd) {
      warn_if_expensive(verify_n, max_n);
      const auto outcome = abw::verify_against_oracle(verify_n, threads, max_n);
      std::cout << outcome.report;
      std::cout << (outcome.ok ? "verify: all PASS\n" : "verify: FAIL\n");
      return outcome.ok ? 0 : 1;
    }
    if (*tables_cmd) {
      std::cout << abw::render_table(table_id);
      return 0;
    }
    if (*seq_cmd) {
      const abw::SequenceSpec spec{seq_name, seq_gamma};
      if (seq_format == "json")
        std::cout << abw::render_sequence_json(spec, seq_max_n) << '\n';
      else
        std::cout << abw::render_sequence_csv(spec, seq_max_n);
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
