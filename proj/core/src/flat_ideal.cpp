#include "flat_ideal.hpp"

#include <numeric>

namespace decayideal::detail {

void canonicalize(FlatGens& gens) {
  const std::size_t n = gens.nvars;
  if (gens.count == 0) return;
  if (n == 0) {
    gens.count = 1;
    return;
  }
  std::vector<std::size_t> order(gens.count);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return lex_less(gens.row(a), gens.row(b));
  });
  // A divisor is lexicographically no larger than its multiple, so scanning
  // in order only has to compare against already kept rows.
  std::vector<std::size_t> kept;
  for (std::size_t idx : order) {
    auto candidate = gens.row(idx);
    bool redundant = false;
    for (std::size_t k : kept) {
      if (divides(gens.row(k), candidate)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(idx);
  }
  FlatGens out{n, 0, {}};
  out.data.reserve(kept.size() * n);
  for (std::size_t k : kept) out.push(gens.row(k));
  gens = std::move(out);
}

FlatGens insert_minimal(const FlatGens& gens, std::size_t skip,
                        std::span<const Exponent> added) {
  FlatGens out{gens.nvars, 0, {}};
  out.data.reserve(gens.data.size());
  bool placed = false;
  for (std::size_t i = 0; i < gens.count; ++i) {
    if (i == skip) continue;
    auto r = gens.row(i);
    if (divides(added, r)) continue;
    if (!placed && lex_less(added, r)) {
      out.push(added);
      placed = true;
    }
    out.push(r);
  }
  if (!placed) out.push(added);
  return out;
}

}  // namespace decayideal::detail
