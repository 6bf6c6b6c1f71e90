#pragma once

// Row-major generator tables shared by the ideal arithmetic and the
// decomposition engines.

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "decayideal/monomial.hpp"

namespace decayideal::detail {

inline bool divides(std::span<const Exponent> lhs, std::span<const Exponent> rhs) {
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (lhs[i] > rhs[i]) return false;
  }
  return true;
}

inline bool lex_less(std::span<const Exponent> lhs, std::span<const Exponent> rhs) {
  return std::lexicographical_compare(lhs.begin(), lhs.end(), rhs.begin(), rhs.end());
}

struct FlatGens {
  std::size_t nvars = 0;
  std::size_t count = 0;
  std::vector<Exponent> data;

  std::span<const Exponent> row(std::size_t i) const {
    return {data.data() + i * nvars, nvars};
  }
  void push(std::span<const Exponent> r) {
    data.insert(data.end(), r.begin(), r.end());
    ++count;
  }
  bool operator==(const FlatGens&) const = default;
};

/// Sorts rows lexicographically and keeps only the minimal ones.
void canonicalize(FlatGens& gens);

/// Adds a monomial to an already canonical table, dropping its multiples.
/// The monomial must not be divisible by any existing generator.
FlatGens insert_minimal(const FlatGens& gens, std::size_t skip,
                        std::span<const Exponent> added);

}  // namespace decayideal::detail
