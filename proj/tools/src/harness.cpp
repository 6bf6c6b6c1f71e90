#include "decayideal/harness.hpp"

#include <algorithm>
#include <chrono>
#include <iterator>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "decayideal/errors.hpp"

namespace decayideal::harness {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json primes_json(const std::vector<MonomialPrime>& primes) {
  ordered_json out = ordered_json::array();
  for (const auto& p : primes) out.push_back(p.names());
  return out;
}

std::string primes_text(const std::vector<MonomialPrime>& primes) {
  std::string out = "{";
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (i > 0) out += ", ";
    out += primes[i].to_string();
  }
  return out + "}";
}

ordered_json report_json(const VerificationReport& report, bool stable) {
  ordered_json out;
  out["q"] = report.q.entries();
  out["n"] = report.q.n();
  out["m"] = report.m;
  ordered_json records = ordered_json::array();
  for (const auto& r : report.records) {
    ordered_json rec;
    rec["e"] = r.e;
    rec["predicted_count"] = r.predicted_count;
    rec["computed_count"] = r.computed_count;
    rec["match"] = r.match;
    rec["predicted_primes"] = primes_json(r.predicted_primes);
    rec["computed_primes"] = primes_json(r.computed_primes);
    rec["missing"] = primes_json(r.missing);
    rec["extra"] = primes_json(r.extra);
    if (r.algorithms_agree) rec["algorithms_agree"] = *r.algorithms_agree;
    if (!stable) rec["wall_time_ms"] = r.wall_time_ms;
    records.push_back(std::move(rec));
  }
  out["records"] = std::move(records);
  out["overall"] = report.overall;
  out["counts_ok"] = report.counts_ok;
  out["cross_check_ok"] = report.cross_check_ok;
  out["passed"] = report.passed();
  return out;
}

}  // namespace

Algorithm parse_algorithm(const std::string& name) {
  if (name == "split") return Algorithm::split;
  if (name == "witness") return Algorithm::witness;
  if (name == "both") return Algorithm::both;
  throw InvalidArgument("unknown algorithm '" + name + "'");
}

std::string to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::split: return "split";
    case Algorithm::witness: return "witness";
    case Algorithm::both: return "both";
  }
  return "split";
}

std::vector<MonomialPrime> prime_difference(const std::vector<MonomialPrime>& lhs,
                                            const std::vector<MonomialPrime>& rhs) {
  std::vector<MonomialPrime> out;
  std::set_difference(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(),
                      std::back_inserter(out));
  return out;
}

AssResult compute_ass(const MonomialIdeal& ideal, std::uint64_t e, Algorithm algorithm,
                      std::uint64_t witness_budget) {
  const MonomialIdeal power = ideal_power(ideal, e);
  AssResult result;
  result.algorithm = algorithm;
  if (algorithm != Algorithm::witness) {
    result.split = associated_primes_split(power);
    result.primes = result.split;
  }
  if (algorithm != Algorithm::split) {
    result.witness = witnessed_primes(power, witness_budget);
    if (algorithm == Algorithm::witness) {
      for (const auto& wp : result.witness) result.primes.push_back(wp.prime);
    } else {
      std::vector<MonomialPrime> witness_primes;
      for (const auto& wp : result.witness) witness_primes.push_back(wp.prime);
      result.agree = witness_primes == result.split;
    }
  }
  return result;
}

VerificationReport verify_construction(const DecaySequence& q, std::uint64_t m,
                                       const VerifyOptions& options) {
  if (q.is_empty()) throw InvalidArgument("cannot verify the empty sequence");
  const ConstructionData data = build(q, m);
  const std::uint64_t max_e = options.max_e == 0 ? q.n() + 2 : options.max_e;

  VerificationReport report;
  report.q = q;
  report.m = m;
  MonomialIdeal power = data.ideal;
  for (std::uint64_t e = 1; e <= max_e; ++e) {
    const auto start = std::chrono::steady_clock::now();
    if (e > 1) power = ideal_product(power, data.ideal);
    PowerRecord rec;
    rec.e = e;
    rec.predicted_primes = predicted_ass(data, e);
    rec.predicted_count = predicted_count(q, e);
    rec.computed_primes = associated_primes_split(power);
    rec.computed_count = rec.computed_primes.size();
    rec.missing = prime_difference(rec.predicted_primes, rec.computed_primes);
    rec.extra = prime_difference(rec.computed_primes, rec.predicted_primes);
    rec.match = rec.missing.empty() && rec.extra.empty();
    report.counts_ok = report.counts_ok && rec.computed_count == rec.predicted_count;
    if (options.cross_check) {
      auto witness = associated_primes_witness(power, options.witness_budget);
      rec.algorithms_agree = witness == rec.computed_primes;
      report.cross_check_ok = report.cross_check_ok && *rec.algorithms_agree;
    }
    rec.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    report.overall = report.overall && rec.match;
    report.records.push_back(std::move(rec));
  }
  return report;
}

std::string report_to_json(const VerificationReport& report, bool stable) {
  return report_json(report, stable).dump();
}

std::string report_to_text(const VerificationReport& report, bool stable) {
  std::ostringstream out;
  out << "q = " << report.q.to_string() << "  n = " << report.q.n() << "  m = " << report.m
      << '\n';
  for (const auto& r : report.records) {
    out << "e=" << r.e << "  predicted=" << r.predicted_count
        << "  computed=" << r.computed_count << "  " << (r.match ? "ok" : "MISMATCH");
    if (r.algorithms_agree) out << (*r.algorithms_agree ? "  cross-check ok" : "  cross-check DIFFERS");
    if (!stable) out << "  [" << r.wall_time_ms << " ms]";
    out << '\n';
    out << "    primes: " << primes_text(r.computed_primes) << '\n';
    if (!r.missing.empty()) out << "    missing: " << primes_text(r.missing) << '\n';
    if (!r.extra.empty()) out << "    extra: " << primes_text(r.extra) << '\n';
  }
  out << "overall: " << (report.passed() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// Fuzzing

FuzzSampler::FuzzSampler(std::uint64_t seed) : engine_(seed) {}

std::uint64_t FuzzSampler::uniform(std::uint64_t lo, std::uint64_t hi) {
  if (lo > hi) throw InvalidArgument("empty sampling range");
  const std::uint64_t span = hi - lo;
  if (span == std::numeric_limits<std::uint64_t>::max()) return engine_();
  const std::uint64_t range = span + 1;
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t draw = 0;
  do {
    draw = engine_();
  } while (draw >= limit);
  return lo + draw % range;
}

DecaySequence FuzzSampler::sequence(std::uint64_t max_q1, std::size_t max_n) {
  const auto n = static_cast<std::size_t>(uniform(1, max_n));
  std::vector<std::int64_t> entries(n);
  entries[n - 1] = static_cast<std::int64_t>(uniform(1, max_q1));
  for (std::size_t i = n - 1; i-- > 0;) {
    const auto next = static_cast<std::uint64_t>(entries[i + 1]);
    entries[i] = static_cast<std::int64_t>(next + uniform(0, max_q1 - next));
  }
  return DecaySequence::validate(entries, n);
}

const FuzzCase* FuzzSummary::first_failure() const {
  for (const auto& c : cases) {
    if (!c.report.passed()) return &c;
  }
  return nullptr;
}

FuzzSummary run_fuzz(const FuzzOptions& options) {
  if (options.max_q1 == 0 || options.max_n == 0) {
    throw InvalidArgument("fuzz bounds must be positive");
  }
  FuzzSummary summary;
  summary.options = options;
  FuzzSampler sampler(options.seed);
  VerifyOptions verify;
  verify.cross_check = true;
  verify.witness_budget = options.witness_budget;
  for (std::size_t i = 0; i < options.cases; ++i) {
    DecaySequence q = sampler.sequence(options.max_q1, options.max_n);
    const std::uint64_t m = q.n() + sampler.uniform(0, options.max_m_slack);
    FuzzCase c{i, verify_construction(q, m, verify)};
    if (c.report.passed()) ++summary.passed;
    summary.cases.push_back(std::move(c));
  }
  return summary;
}

std::string fuzz_to_json(const FuzzSummary& summary, bool stable) {
  ordered_json out;
  out["seed"] = summary.options.seed;
  out["cases"] = summary.cases.size();
  out["passed"] = summary.passed;
  out["failed"] = summary.cases.size() - summary.passed;
  ordered_json results = ordered_json::array();
  for (const auto& c : summary.cases) {
    ordered_json item;
    item["index"] = c.index;
    item["q"] = c.report.q.entries();
    item["n"] = c.report.q.n();
    item["m"] = c.report.m;
    item["passed"] = c.report.passed();
    results.push_back(std::move(item));
  }
  out["results"] = std::move(results);
  const FuzzCase* failure = summary.first_failure();
  out["first_failure"] = failure ? report_json(failure->report, stable) : ordered_json(nullptr);
  out["all_passed"] = summary.all_passed();
  return out.dump();
}

std::string fuzz_to_text(const FuzzSummary& summary, bool stable) {
  std::ostringstream out;
  for (const auto& c : summary.cases) {
    out << "case " << c.index << ": q = " << c.report.q.to_string() << "  n = " << c.report.q.n()
        << "  m = " << c.report.m << "  " << (c.report.passed() ? "pass" : "FAIL") << '\n';
  }
  out << summary.passed << "/" << summary.cases.size() << " passed\n";
  if (const FuzzCase* failure = summary.first_failure()) {
    out << "first failure (case " << failure->index << "):\n"
        << report_to_text(failure->report, stable);
  }
  return out.str();
}

}  // namespace decayideal::harness
