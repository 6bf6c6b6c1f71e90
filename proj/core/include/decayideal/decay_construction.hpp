#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "decayideal/decomposition.hpp"
#include "decayideal/monomial.hpp"
#include "decayideal/monomial_ideal.hpp"
#include "decayideal/ring.hpp"

namespace decayideal {

/// Non-increasing positive sequence q_1 >= ... >= q_n that stays at q_n
/// forever after position n.
class DecaySequence {
 public:
  /// Validates `entries`. Without `n`, the smallest index after which the
  /// list is constant is used; an explicit `n` must lie between that index
  /// and the list length. Entries past n are dropped.
  static DecaySequence validate(std::span<const std::int64_t> entries,
                                std::optional<std::size_t> n = std::nullopt);
  /// Comma separated integers, e.g. "6,5,5,4,2,1".
  static DecaySequence parse(std::string_view text,
                             std::optional<std::size_t> n = std::nullopt);
  /// The sequence {} with n = 0. Only produced by g_transform.
  static DecaySequence empty() { return DecaySequence(); }

  std::size_t n() const noexcept { return entries_.size(); }
  bool is_empty() const noexcept { return entries_.empty(); }
  /// q_1 .. q_n.
  const std::vector<std::uint64_t>& entries() const noexcept { return entries_; }
  /// q_e for e >= 1; positions past n repeat q_n.
  std::uint64_t at(std::size_t e) const;
  std::string to_string() const;

  friend bool operator==(const DecaySequence&, const DecaySequence&) = default;

 private:
  DecaySequence() = default;
  explicit DecaySequence(std::vector<std::uint64_t> entries) : entries_(std::move(entries)) {}
  friend DecaySequence h_transform(const DecaySequence&, std::size_t);
  friend DecaySequence g_transform(const DecaySequence&, std::size_t);

  std::vector<std::uint64_t> entries_;
};

/// The smallest stabilization index of a list (1 for constant lists).
std::size_t minimal_stabilization_index(std::span<const std::int64_t> entries);

/// Adjacent-difference measure: q_n - 1 at i = n, q_i - q_{i+1} - 1 below.
std::int64_t difference_measure(const DecaySequence& q, std::size_t i);

/// Everything the construction derives from (q, m).
struct ConstructionData {
  DecaySequence q;
  std::uint64_t m = 0;
  /// t[i - 1] is the difference measure at i, for i = 1..n.
  std::vector<std::int64_t> t;
  /// Indices i < n with t_i >= 0, ascending.
  std::vector<std::size_t> J;
  /// Indices i <= n with t_i >= 1, ascending.
  std::vector<std::size_t> K;
  /// a, b, x<j> for j in J, y<k>_<l> for k in K and 1 <= l <= t_k.
  Ring ring;
  /// Keyed by j in J ∪ {n}.
  std::map<std::size_t, Monomial> Z;
  std::map<std::size_t, Monomial> Y;
  /// Keyed by j in J: a^m b^(m-j+1) x_j.
  std::map<std::size_t, Monomial> M;
  /// (a^(m+2), a^(m+1) b, a b^(m+1), b^(m+2)) over `ring`.
  MonomialIdeal base_ideal;
  /// (M_j Y_j : j in J) + base_ideal * Y_n.
  MonomialIdeal ideal;

  std::int64_t t_at(std::size_t i) const { return t.at(i - 1); }
  bool in_J(std::size_t j) const;
  std::size_t a() const { return ring.require("a"); }
  std::size_t b() const { return ring.require("b"); }
  std::size_t x(std::size_t j) const;
  std::size_t y(std::size_t k, std::size_t l) const;
};

std::string x_name(std::size_t j);
std::string y_name(std::size_t k, std::size_t l);

/// Throws InvalidArgument when m < n. The empty sequence yields the zero
/// ideal over the ring without variables.
ConstructionData build(const DecaySequence& q, std::uint64_t m);

/// The associated primes of ideal^e as predicted for the construction.
std::vector<MonomialPrime> predicted_ass(const ConstructionData& data, std::uint64_t e);
std::vector<MonomialPrime> predicted_ass(const DecaySequence& q, std::uint64_t m,
                                         std::uint64_t e);
/// q_min(e, n).
std::uint64_t predicted_count(const DecaySequence& q, std::uint64_t e);

/// Subtracts t_k from q_1..q_k. Requires k in J ∪ {n}; keeps n.
DecaySequence h_transform(const DecaySequence& q, std::size_t k);
/// {} for k = n, otherwise q_{k+1} repeated k + 1 times then q_{k+2}..q_n.
DecaySequence g_transform(const DecaySequence& q, std::size_t k);

/// Run-length positions j_1 < ... < j_r = n for a sequence with K empty,
/// where r = q_1.
std::vector<std::size_t> base_case_structure(const DecaySequence& q);

/// P_s = (a, b, x_{j_s}, ..., x_{j_{r-1}}) for 1 <= s < r. Requires K empty.
MonomialPrime base_case_prime(const ConstructionData& data, std::size_t s);

/// Monomial w with ideal^e : w = P_s, for K empty, 1 <= s < r and e <= j_s.
Monomial base_case_witness(const ConstructionData& data, std::uint64_t e, std::size_t s);

}  // namespace decayideal
