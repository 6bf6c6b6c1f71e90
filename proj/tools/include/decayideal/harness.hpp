#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "decayideal/decay_construction.hpp"
#include "decayideal/decomposition.hpp"
#include "decayideal/monomial_ideal.hpp"

namespace decayideal::harness {

enum class Algorithm { split, witness, both };

Algorithm parse_algorithm(const std::string& name);
std::string to_string(Algorithm algorithm);

struct AssResult {
  Algorithm algorithm = Algorithm::split;
  std::vector<MonomialPrime> split;
  std::vector<WitnessedPrime> witness;
  /// The split primes, or the witness primes when only the witness search ran.
  std::vector<MonomialPrime> primes;
  /// Set only for Algorithm::both.
  std::optional<bool> agree;
};

/// Associated primes of ideal^e by the requested engine(s).
AssResult compute_ass(const MonomialIdeal& ideal, std::uint64_t e, Algorithm algorithm,
                      std::uint64_t witness_budget);

struct PowerRecord {
  std::uint64_t e = 0;
  std::uint64_t predicted_count = 0;
  std::uint64_t computed_count = 0;
  bool match = false;
  std::vector<MonomialPrime> predicted_primes;
  std::vector<MonomialPrime> computed_primes;
  std::vector<MonomialPrime> missing;
  std::vector<MonomialPrime> extra;
  /// Present when the witness search was run as a cross-check.
  std::optional<bool> algorithms_agree;
  double wall_time_ms = 0.0;
};

struct VerificationReport {
  DecaySequence q = DecaySequence::empty();
  std::uint64_t m = 0;
  std::vector<PowerRecord> records;
  /// Every record matched its prediction.
  bool overall = true;
  /// Every computed count equals the predicted count.
  bool counts_ok = true;
  /// Every cross-check (if any) agreed.
  bool cross_check_ok = true;

  bool passed() const { return overall && counts_ok && cross_check_ok; }
};

struct VerifyOptions {
  /// 0 selects n + 2.
  std::uint64_t max_e = 0;
  bool cross_check = false;
  std::uint64_t witness_budget = default_witness_budget();
};

VerificationReport verify_construction(const DecaySequence& q, std::uint64_t m,
                                       const VerifyOptions& options = {});

/// One JSON object; `stable` drops the wall-clock fields.
std::string report_to_json(const VerificationReport& report, bool stable);
std::string report_to_text(const VerificationReport& report, bool stable);

struct FuzzOptions {
  std::uint64_t seed = 0;
  std::size_t cases = 0;
  std::uint64_t max_q1 = 5;
  std::size_t max_n = 4;
  std::uint64_t max_m_slack = 1;
  std::uint64_t witness_budget = default_witness_budget();
};

struct FuzzCase {
  std::size_t index = 0;
  VerificationReport report;
};

struct FuzzSummary {
  FuzzOptions options;
  std::vector<FuzzCase> cases;
  std::size_t passed = 0;

  bool all_passed() const { return passed == cases.size(); }
  const FuzzCase* first_failure() const;
};

/// Deterministic generator for fuzz parameters. Uses only the standardized
/// mt19937_64 output so draws do not depend on the standard library.
class FuzzSampler {
 public:
  explicit FuzzSampler(std::uint64_t seed);
  /// Uniform in [lo, hi].
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);
  /// n uniform in [1, max_n], q_n uniform in [1, max_q1], then earlier
  /// entries grow by nonnegative steps while staying <= max_q1. The drawn n
  /// is kept as the stabilization index.
  DecaySequence sequence(std::uint64_t max_q1, std::size_t max_n);

 private:
  std::mt19937_64 engine_;
};

FuzzSummary run_fuzz(const FuzzOptions& options);

std::string fuzz_to_json(const FuzzSummary& summary, bool stable);
std::string fuzz_to_text(const FuzzSummary& summary, bool stable);

/// Set difference lhs \ rhs of sorted prime lists.
std::vector<MonomialPrime> prime_difference(const std::vector<MonomialPrime>& lhs,
                                            const std::vector<MonomialPrime>& rhs);

}  // namespace decayideal::harness
