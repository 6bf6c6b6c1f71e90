// decayideal: construct decay ideals, compute associated primes of powers and
// verify the predicted prime sets.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "decayideal/decay_construction.hpp"
#include "decayideal/errors.hpp"
#include "decayideal/harness.hpp"
#include "decayideal/ideal_json.hpp"

namespace {

using namespace decayideal;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitFailedCheck = 1;
constexpr int kExitInputError = 2;

struct Options {
  std::string q;
  std::optional<std::uint64_t> m;
  std::optional<std::size_t> n;
  std::uint64_t e = 1;
  std::uint64_t max_e = 0;
  std::string algorithm = "split";
  bool cross_check = false;
  bool json = false;
  bool stable = false;
  std::uint64_t seed = 0;
  std::size_t cases = 0;
  std::uint64_t max_q1 = 5;
  std::size_t max_n = 4;
  std::uint64_t max_m_slack = 1;
  std::optional<std::uint64_t> witness_budget;
  std::string input;
  std::string ideal;
  std::string vars;
};

std::uint64_t budget_of(const Options& opt) {
  return opt.witness_budget.value_or(default_witness_budget());
}

DecaySequence sequence_of(const Options& opt) {
  if (opt.q.empty()) throw InvalidArgument("--q is required");
  return DecaySequence::parse(opt.q, opt.n);
}

std::uint64_t m_of(const Options& opt, const DecaySequence& q) { return opt.m.value_or(q.n()); }

std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    out.push_back(item);
  }
  return out;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int run_construct(const Options& opt) {
  const auto q = sequence_of(opt);
  const auto data = build(q, m_of(opt, q));
  if (opt.json) {
    std::cout << construction_to_json(data) << '\n';
    return 0;
  }
  std::cout << "q = " << q.to_string() << "  n = " << q.n() << "  m = " << data.m << '\n';
  std::cout << "ring:";
  for (const auto& name : data.ring.names()) std::cout << ' ' << name;
  std::cout << "\ngenerators:\n";
  for (const auto& g : data.ideal.generators()) std::cout << "  " << g.to_string() << '\n';
  return 0;
}

int run_ass(const Options& opt) {
  const int sources = !opt.input.empty() + !opt.ideal.empty() + !opt.q.empty();
  if (sources != 1) throw InvalidArgument("give exactly one of --input, --ideal or --q");
  std::optional<MonomialIdeal> ideal;
  if (!opt.input.empty()) {
    ideal = ideal_from_json(read_input(opt.input));
  } else if (!opt.ideal.empty()) {
    if (opt.vars.empty()) throw InvalidArgument("--ideal needs --vars");
    ideal = MonomialIdeal::parse(Ring(split_names(opt.vars)), opt.ideal);
  } else {
    const auto q = sequence_of(opt);
    ideal = build(q, m_of(opt, q)).ideal;
  }
  if (opt.e == 0) throw InvalidArgument("--e must be positive");
  const auto algorithm = harness::parse_algorithm(opt.algorithm);
  const auto result = harness::compute_ass(*ideal, opt.e, algorithm, budget_of(opt));
  const bool ok = result.agree.value_or(true);

  std::vector<MonomialPrime> witness_primes;
  for (const auto& wp : result.witness) witness_primes.push_back(wp.prime);

  if (opt.json) {
    ordered_json out;
    out["variables"] = ideal->ring().names();
    out["e"] = opt.e;
    out["algorithm"] = harness::to_string(algorithm);
    ordered_json primes = ordered_json::array();
    for (const auto& p : result.primes) primes.push_back(p.names());
    out["primes"] = primes;
    out["count"] = result.primes.size();
    if (!result.witness.empty()) {
      ordered_json witnesses = ordered_json::array();
      for (const auto& wp : result.witness) {
        witnesses.push_back({{"prime", wp.prime.names()}, {"witness", wp.witness.to_string()}});
      }
      out["witnesses"] = witnesses;
    }
    if (result.agree) {
      out["agree"] = *result.agree;
      ordered_json only_split = ordered_json::array();
      for (const auto& p : harness::prime_difference(result.split, witness_primes)) {
        only_split.push_back(p.names());
      }
      ordered_json only_witness = ordered_json::array();
      for (const auto& p : harness::prime_difference(witness_primes, result.split)) {
        only_witness.push_back(p.names());
      }
      out["split_only"] = only_split;
      out["witness_only"] = only_witness;
    }
    std::cout << out.dump() << '\n';
  } else {
    for (const auto& p : result.primes) std::cout << p.to_string() << '\n';
    std::cout << result.primes.size() << " associated primes\n";
    if (result.agree) {
      if (*result.agree) {
        std::cout << "split and witness algorithms agree\n";
      } else {
        std::cout << "split and witness algorithms DIFFER\n";
        for (const auto& p : harness::prime_difference(result.split, witness_primes)) {
          std::cout << "  split only: " << p.to_string() << '\n';
        }
        for (const auto& p : harness::prime_difference(witness_primes, result.split)) {
          std::cout << "  witness only: " << p.to_string() << '\n';
        }
      }
    }
  }
  return ok ? 0 : kExitFailedCheck;
}

int run_verify(const Options& opt) {
  const auto q = sequence_of(opt);
  harness::VerifyOptions verify;
  verify.max_e = opt.max_e;
  verify.cross_check = opt.cross_check;
  verify.witness_budget = budget_of(opt);
  const auto report = harness::verify_construction(q, m_of(opt, q), verify);
  std::cout << (opt.json ? harness::report_to_json(report, opt.stable) + '\n'
                         : harness::report_to_text(report, opt.stable));
  return report.passed() ? 0 : kExitFailedCheck;
}

int run_fuzz(const Options& opt) {
  harness::FuzzOptions fuzz;
  fuzz.seed = opt.seed;
  fuzz.cases = opt.cases;
  fuzz.max_q1 = opt.max_q1;
  fuzz.max_n = opt.max_n;
  fuzz.max_m_slack = opt.max_m_slack;
  fuzz.witness_budget = budget_of(opt);
  const auto summary = harness::run_fuzz(fuzz);
  std::cout << (opt.json ? harness::fuzz_to_json(summary, opt.stable) + '\n'
                         : harness::fuzz_to_text(summary, opt.stable));
  return summary.all_passed() ? 0 : kExitFailedCheck;
}

void add_sequence_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--q", opt.q, "non-increasing sequence, e.g. 6,5,5,4,2,1");
  cmd->add_option("--m", opt.m, "construction parameter m >= n (default n)");
  cmd->add_option("--n", opt.n, "stabilization index (default: smallest valid)");
}

void add_common_flags(CLI::App* cmd, Options& opt) {
  cmd->add_flag("--json", opt.json, "machine-readable output");
  cmd->add_flag("--stable", opt.stable, "omit timing fields");
  cmd->add_option("--witness-budget", opt.witness_budget,
                  "maximum monomials visited by the witness search");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Associated primes of powers of monomial decay ideals"};
  app.require_subcommand(1);
  Options opt;

  auto* construct = app.add_subcommand("construct", "build the ideal for a sequence");
  add_sequence_flags(construct, opt);
  add_common_flags(construct, opt);

  auto* ass = app.add_subcommand("ass", "associated primes of a power of an ideal");
  add_sequence_flags(ass, opt);
  add_common_flags(ass, opt);
  ass->add_option("--e", opt.e, "power (default 1)");
  ass->add_option("--algorithm", opt.algorithm, "split, witness or both")
      ->check(CLI::IsMember({"split", "witness", "both"}));
  ass->add_option("--input", opt.input, "ideal JSON file ('-' for stdin)");
  ass->add_option("--ideal", opt.ideal, "generators, e.g. \"x*y,x*z,y*z\"");
  ass->add_option("--vars", opt.vars, "variables for --ideal, e.g. x,y,z");

  auto* verify = app.add_subcommand("verify", "compare computed and predicted primes");
  add_sequence_flags(verify, opt);
  add_common_flags(verify, opt);
  verify->add_option("--max-e", opt.max_e, "largest power to check (default n+2)");
  verify->add_flag("--cross-check", opt.cross_check, "also run the witness search");

  auto* fuzz = app.add_subcommand("fuzz", "verify randomly sampled sequences");
  add_common_flags(fuzz, opt);
  fuzz->add_option("--seed", opt.seed, "random seed");
  fuzz->add_option("--cases", opt.cases, "number of sequences");
  fuzz->add_option("--max-q1", opt.max_q1, "largest first entry (default 5)")
      ->check(CLI::PositiveNumber);
  fuzz->add_option("--max-n", opt.max_n, "largest stabilization index (default 4)")
      ->check(CLI::PositiveNumber);
  fuzz->add_option("--max-m-slack", opt.max_m_slack, "m is drawn from [n, n + slack]");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    if (*construct) return run_construct(opt);
    if (*ass) return run_ass(opt);
    if (*verify) return run_verify(opt);
    return run_fuzz(opt);
  } catch (const Error& e) {
    std::cout << ordered_json{{"ok", false}, {"error", e.what()}}.dump() << '\n';
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}
