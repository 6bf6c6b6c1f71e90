#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "decayideal/monomial.hpp"
#include "decayideal/monomial_ideal.hpp"
#include "decayideal/ring.hpp"

namespace decayideal {

/// A prime monomial ideal, i.e. a subset of the ring's variables.
class MonomialPrime {
 public:
  /// Indices are sorted and deduplicated.
  MonomialPrime(Ring ring, std::vector<std::size_t> variables);
  static MonomialPrime from_names(const Ring& ring, const std::vector<std::string>& names);

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<std::size_t>& variables() const noexcept { return variables_; }
  std::size_t size() const noexcept { return variables_.size(); }
  bool contains(std::size_t variable) const;
  std::vector<std::string> names() const;
  MonomialIdeal to_ideal() const;
  /// "(a,b,x5)".
  std::string to_string() const;

  friend bool operator==(const MonomialPrime& lhs, const MonomialPrime& rhs);
  /// Lexicographic on the sorted index lists.
  friend std::strong_ordering operator<=>(const MonomialPrime& lhs, const MonomialPrime& rhs);

 private:
  Ring ring_;
  std::vector<std::size_t> variables_;
};

/// An ideal generated by pure powers x^b_x; `powers[x] == 0` means x is absent.
class IrreducibleComponent {
 public:
  IrreducibleComponent(Ring ring, std::vector<Exponent> powers);

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Exponent>& powers() const noexcept { return powers_; }
  /// The radical.
  MonomialPrime support() const;
  MonomialIdeal to_ideal() const;
  /// other ⊆ *this.
  bool contains(const IrreducibleComponent& other) const;
  std::string to_string() const;

  friend bool operator==(const IrreducibleComponent&, const IrreducibleComponent&) = default;
  friend auto operator<=>(const IrreducibleComponent& lhs, const IrreducibleComponent& rhs) {
    return lhs.powers_ <=> rhs.powers_;
  }

 private:
  Ring ring_;
  std::vector<Exponent> powers_;
};

/// True iff every minimal generator is a single variable.
bool is_prime(const MonomialIdeal& ideal);
std::optional<MonomialPrime> as_prime(const MonomialIdeal& ideal);
/// True iff every variable occurring in a generator also occurs as a pure power.
bool is_primary(const MonomialIdeal& ideal);

/// Components whose intersection is `ideal`, found by recursive splitting
/// g = u * v -> (I + (u)) ∩ (I + (v)). Sorted and deduplicated. Throws
/// InvalidArgument for the zero and unit ideals.
std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& ideal);

/// Drops, in order, each component that contains the intersection of the
/// remaining ones.
std::vector<IrreducibleComponent> irredundant(std::vector<IrreducibleComponent> components);

/// Intersection of a nonempty list of components.
MonomialIdeal intersect_components(const std::vector<IrreducibleComponent>& components);

/// Associated primes as radicals of an irredundant irreducible decomposition.
std::vector<MonomialPrime> associated_primes_split(const MonomialIdeal& ideal);

inline constexpr std::uint64_t kDefaultWitnessBudget = 10'000'000;

/// kDefaultWitnessBudget unless DECAYIDEAL_WITNESS_BUDGET holds a positive integer.
std::uint64_t default_witness_budget();

struct WitnessedPrime {
  MonomialPrime prime;
  /// Lexicographically smallest f in the search box with I : f == prime.
  Monomial witness;
};

/// Number of monomials in the witness search box of `ideal`, saturating at
/// UINT64_MAX.
std::uint64_t witness_box_size(const MonomialIdeal& ideal);

/// Searches every f below the generators' lcm for a prime colon I : f with
/// f ∉ I. Throws BudgetExceeded when the box holds more than `budget`
/// monomials. `threads == 0` picks the hardware concurrency.
std::vector<WitnessedPrime> witnessed_primes(const MonomialIdeal& ideal,
                                             std::uint64_t budget = default_witness_budget(),
                                             unsigned threads = 0);

std::vector<MonomialPrime> associated_primes_witness(
    const MonomialIdeal& ideal, std::uint64_t budget = default_witness_budget());

}  // namespace decayideal
