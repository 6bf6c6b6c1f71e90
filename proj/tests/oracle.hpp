#pragma once

// Test-only reference implementations. Everything here works from the
// definitions (membership by divisibility, enumeration over exponent boxes)
// and never calls the library's ideal arithmetic.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "decayideal/monomial_ideal.hpp"

namespace oracle {

using decayideal::Exponent;
using Row = std::vector<Exponent>;
using Rows = std::vector<Row>;
using Member = std::function<bool(const Row&)>;

inline bool divides(const Row& a, const Row& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

inline Rows rows_of(const decayideal::MonomialIdeal& ideal) {
  Rows out;
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    auto r = ideal.row(i);
    out.emplace_back(r.begin(), r.end());
  }
  return out;
}

inline bool in_span(const Rows& gens, const Row& f) {
  return std::any_of(gens.begin(), gens.end(), [&](const Row& g) { return divides(g, f); });
}

/// f ∈ (gens)^e: peel off one generator at a time.
inline bool in_power(const Rows& gens, const Row& f, std::uint64_t e) {
  if (e == 0) return true;
  for (const auto& g : gens) {
    if (!divides(g, f)) continue;
    Row rest(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) rest[i] = f[i] - g[i];
    if (in_power(gens, rest, e - 1)) return true;
  }
  return false;
}

/// Calls `visit` on every exponent vector in [0, bound]^nvars.
inline void for_box(std::size_t nvars, Exponent bound, const std::function<void(const Row&)>& visit) {
  Row f(nvars, 0);
  while (true) {
    visit(f);
    std::size_t v = nvars;
    while (true) {
      if (v == 0) return;
      --v;
      if (f[v] < bound) {
        ++f[v];
        break;
      }
      f[v] = 0;
    }
  }
}

/// Minimal generators of the monomial ideal described by `member`, found by
/// enumerating [0, bound]^nvars: f is minimal iff f is a member and no f / x_i is.
/// Sorted lexicographically.
inline Rows generators_by_enumeration(std::size_t nvars, Exponent bound, const Member& member) {
  Rows out;
  for_box(nvars, bound, [&](const Row& f) {
    if (!member(f)) return;
    for (std::size_t i = 0; i < nvars; ++i) {
      if (f[i] == 0) continue;
      Row g = f;
      --g[i];
      if (member(g)) return;
    }
    out.push_back(f);
  });
  std::sort(out.begin(), out.end());
  return out;
}

inline Exponent max_exponent(const Rows& rows) {
  Exponent m = 0;
  for (const auto& r : rows) {
    for (auto e : r) m = std::max(m, e);
  }
  return m;
}

/// Random ideal with up to `max_gens` generators and exponents <= max_exp.
inline decayideal::MonomialIdeal random_ideal(std::mt19937_64& rng, const decayideal::Ring& ring,
                                              Exponent max_exp, std::size_t max_gens,
                                              bool allow_unit = false) {
  std::uniform_int_distribution<std::size_t> count(1, max_gens);
  std::uniform_int_distribution<Exponent> exp(0, max_exp);
  while (true) {
    std::vector<std::vector<Exponent>> rows(count(rng), std::vector<Exponent>(ring.size()));
    for (auto& r : rows) {
      for (auto& e : r) e = exp(rng);
    }
    auto ideal = decayideal::MonomialIdeal::from_exponents(ring, rows);
    if (allow_unit || !ideal.is_unit()) return ideal;
  }
}

}  // namespace oracle
