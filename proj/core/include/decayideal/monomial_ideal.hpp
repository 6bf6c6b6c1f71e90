#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "decayideal/monomial.hpp"
#include "decayideal/ring.hpp"

namespace decayideal {

/// A monomial ideal held as its unique minimal generating set.
///
/// Generators are stored row-major and sorted lexicographically by exponent
/// vector, so two ideals over the same ring are equal exactly when their
/// generator tables are identical. The zero ideal has no generators and the
/// unit ideal has the single generator 1.
class MonomialIdeal {
 public:
  /// The zero ideal of `ring`.
  explicit MonomialIdeal(Ring ring);

  static MonomialIdeal zero(const Ring& ring) { return MonomialIdeal(ring); }
  static MonomialIdeal unit(const Ring& ring);
  /// Generated by `rows` (one exponent vector per generator), minimalized.
  static MonomialIdeal from_exponents(const Ring& ring,
                                      const std::vector<std::vector<Exponent>>& rows);
  /// Row-major table of `count` generators, minimalized.
  static MonomialIdeal from_rows(const Ring& ring, std::vector<Exponent> flat,
                                 std::size_t count);
  /// Comma separated monomials, e.g. "x*y, x*z, y*z". "0" is the zero ideal.
  static MonomialIdeal parse(const Ring& ring, std::string_view text);

  const Ring& ring() const noexcept { return ring_; }
  std::size_t size() const noexcept { return count_; }
  bool is_zero() const noexcept { return count_ == 0; }
  bool is_unit() const noexcept;

  std::span<const Exponent> row(std::size_t index) const;
  const std::vector<Exponent>& flat() const noexcept { return data_; }
  Monomial generator(std::size_t index) const;
  std::vector<Monomial> generators() const;

  /// Variables that occur in some minimal generator, in ring order.
  std::vector<std::size_t> occurring_variables() const;
  /// Componentwise maximum of the generators' exponents.
  std::vector<Exponent> generator_lcm() const;

  std::string to_string() const;

  friend bool operator==(const MonomialIdeal& lhs, const MonomialIdeal& rhs);

 private:
  MonomialIdeal(Ring ring, std::vector<Exponent> canonical, std::size_t count);

  Ring ring_;
  std::vector<Exponent> data_;
  std::size_t count_ = 0;
};

/// The ideal generated by `gens` with every non-minimal generator removed.
MonomialIdeal minimalize(const Ring& ring, std::span<const Monomial> gens);

MonomialIdeal ideal_sum(const MonomialIdeal& lhs, const MonomialIdeal& rhs);
MonomialIdeal ideal_product(const MonomialIdeal& lhs, const MonomialIdeal& rhs);
/// I * (f).
MonomialIdeal ideal_product(const MonomialIdeal& ideal, const Monomial& factor);
/// I^e for e >= 1, multiplying by I one step at a time.
MonomialIdeal ideal_power(const MonomialIdeal& ideal, std::uint64_t e);
MonomialIdeal ideal_intersection(const MonomialIdeal& lhs, const MonomialIdeal& rhs);
/// I : f.
MonomialIdeal ideal_colon(const MonomialIdeal& ideal, const Monomial& f);
/// I : f^infinity by repeated colon. Cross-checked against
/// saturation_by_substitution.
MonomialIdeal ideal_saturation(const MonomialIdeal& ideal, const Monomial& f);
/// Sets every variable of f's support to 1 in each generator.
MonomialIdeal saturation_by_substitution(const MonomialIdeal& ideal, const Monomial& f);

/// (I : x^n, I + (x^n)); throws InvalidArgument unless I : x^n = I : x^(n+1).
std::pair<MonomialIdeal, MonomialIdeal> colon_split(const MonomialIdeal& ideal,
                                                    std::size_t variable,
                                                    std::uint64_t n);

bool ideal_contains(const MonomialIdeal& ideal, const Monomial& f);
/// inner ⊆ outer.
bool ideal_subset(const MonomialIdeal& inner, const MonomialIdeal& outer);

/// Re-indexes the generators into a ring that contains all of I's variables.
MonomialIdeal extend_ring(const MonomialIdeal& ideal, const Ring& bigger);

}  // namespace decayideal
