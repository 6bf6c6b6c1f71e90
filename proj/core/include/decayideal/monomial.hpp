#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "decayideal/ring.hpp"

namespace decayideal {

using Exponent = std::uint64_t;

/// Checked exponent addition; throws ExponentOverflow instead of wrapping.
Exponent add_exponents(Exponent lhs, Exponent rhs);
/// Checked exponent multiplication.
Exponent multiply_exponents(Exponent lhs, Exponent rhs);

/// A monomial as a dense exponent vector over a Ring.
class Monomial {
 public:
  /// The monomial 1 over `ring`.
  explicit Monomial(Ring ring);
  /// Throws InvalidArgument if the vector length differs from the ring size.
  Monomial(Ring ring, std::vector<Exponent> exponents);

  static Monomial one(const Ring& ring) { return Monomial(ring); }
  static Monomial variable(const Ring& ring, std::size_t index, Exponent power = 1);
  /// Parses products such as "a^3*b^2*x1" or "1". Whitespace is ignored.
  static Monomial parse(const Ring& ring, std::string_view text);

  const Ring& ring() const noexcept { return ring_; }
  std::span<const Exponent> exponents() const noexcept { return exponents_; }
  Exponent operator[](std::size_t index) const { return exponents_.at(index); }
  std::size_t size() const noexcept { return exponents_.size(); }

  bool is_one() const noexcept;
  Exponent total_degree() const;
  /// Indices of the variables with a positive exponent.
  std::vector<std::size_t> support() const;

  bool divides(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  /// this / gcd(this, other), the generator of (this) : other.
  Monomial colon(const Monomial& other) const;
  /// Exact quotient; throws InvalidArgument when `divisor` does not divide.
  Monomial divided_by(const Monomial& divisor) const;
  Monomial pow(Exponent power) const;

  /// Re-indexes into a ring containing every variable of this ring.
  Monomial extended_to(const Ring& bigger) const;

  std::string to_string() const;

  friend Monomial operator*(const Monomial& lhs, const Monomial& rhs);
  friend bool operator==(const Monomial& lhs, const Monomial& rhs);
  /// Lexicographic by exponent vector; monomials of different rings are unordered.
  friend std::strong_ordering operator<=>(const Monomial& lhs, const Monomial& rhs);

 private:
  Ring ring_;
  std::vector<Exponent> exponents_;
};

}  // namespace decayideal
