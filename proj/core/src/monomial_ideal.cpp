#include "decayideal/monomial_ideal.hpp"

#include <algorithm>
#include <stdexcept>

#include "decayideal/errors.hpp"
#include "flat_ideal.hpp"

namespace decayideal {

MonomialIdeal::MonomialIdeal(Ring ring) : ring_(std::move(ring)) {}

MonomialIdeal::MonomialIdeal(Ring ring, std::vector<Exponent> canonical,
                             std::size_t count)
    : ring_(std::move(ring)), data_(std::move(canonical)), count_(count) {}

MonomialIdeal MonomialIdeal::unit(const Ring& ring) {
  return MonomialIdeal(ring, std::vector<Exponent>(ring.size(), 0), 1);
}

MonomialIdeal MonomialIdeal::from_exponents(
    const Ring& ring, const std::vector<std::vector<Exponent>>& rows) {
  std::vector<Exponent> flat;
  flat.reserve(rows.size() * ring.size());
  for (const auto& r : rows) {
    if (r.size() != ring.size()) {
      throw InvalidArgument("generator length " + std::to_string(r.size()) +
                            " does not match ring size " + std::to_string(ring.size()));
    }
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return from_rows(ring, std::move(flat), rows.size());
}

MonomialIdeal MonomialIdeal::from_rows(const Ring& ring, std::vector<Exponent> flat,
                                       std::size_t count) {
  if (flat.size() != count * ring.size()) {
    throw InvalidArgument("generator table has the wrong size");
  }
  detail::FlatGens gens{ring.size(), count, std::move(flat)};
  detail::canonicalize(gens);
  return MonomialIdeal(ring, std::move(gens.data), gens.count);
}

MonomialIdeal MonomialIdeal::parse(const Ring& ring, std::string_view text) {
  std::string body;
  for (char c : text) {
    if (c != '(' && c != ')' && c != ' ' && c != '\t' && c != '\n') body.push_back(c);
  }
  if (body.empty() || body == "0") return zero(ring);
  std::vector<Monomial> gens;
  std::string_view rest = body;
  while (true) {
    auto comma = rest.find(',');
    gens.push_back(Monomial::parse(ring, rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return minimalize(ring, gens);
}

bool MonomialIdeal::is_unit() const noexcept {
  return count_ == 1 &&
         std::all_of(data_.begin(), data_.end(), [](Exponent e) { return e == 0; });
}

std::span<const Exponent> MonomialIdeal::row(std::size_t index) const {
  if (index >= count_) throw std::out_of_range("generator index out of range");
  return {data_.data() + index * ring_.size(), ring_.size()};
}

Monomial MonomialIdeal::generator(std::size_t index) const {
  auto r = row(index);
  return Monomial(ring_, std::vector<Exponent>(r.begin(), r.end()));
}

std::vector<Monomial> MonomialIdeal::generators() const {
  std::vector<Monomial> out;
  out.reserve(count_);
  for (std::size_t i = 0; i < count_; ++i) out.push_back(generator(i));
  return out;
}

std::vector<std::size_t> MonomialIdeal::occurring_variables() const {
  std::vector<std::size_t> out;
  auto lcm = generator_lcm();
  for (std::size_t v = 0; v < lcm.size(); ++v) {
    if (lcm[v] > 0) out.push_back(v);
  }
  return out;
}

std::vector<Exponent> MonomialIdeal::generator_lcm() const {
  std::vector<Exponent> out(ring_.size(), 0);
  for (std::size_t i = 0; i < count_; ++i) {
    auto r = row(i);
    for (std::size_t v = 0; v < r.size(); ++v) out[v] = std::max(out[v], r[v]);
  }
  return out;
}

std::string MonomialIdeal::to_string() const {
  if (count_ == 0) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < count_; ++i) {
    if (i > 0) out += ", ";
    out += generator(i).to_string();
  }
  return out + ")";
}

bool operator==(const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
  return lhs.ring_ == rhs.ring_ && lhs.count_ == rhs.count_ && lhs.data_ == rhs.data_;
}

MonomialIdeal minimalize(const Ring& ring, std::span<const Monomial> gens) {
  std::vector<Exponent> flat;
  flat.reserve(gens.size() * ring.size());
  for (const auto& g : gens) {
    require_same_ring(ring, g.ring());
    auto e = g.exponents();
    flat.insert(flat.end(), e.begin(), e.end());
  }
  return MonomialIdeal::from_rows(ring, std::move(flat), gens.size());
}

MonomialIdeal ideal_sum(const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
  require_same_ring(lhs.ring(), rhs.ring());
  std::vector<Exponent> flat = lhs.flat();
  flat.insert(flat.end(), rhs.flat().begin(), rhs.flat().end());
  return MonomialIdeal::from_rows(lhs.ring(), std::move(flat), lhs.size() + rhs.size());
}

MonomialIdeal ideal_product(const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
  require_same_ring(lhs.ring(), rhs.ring());
  const std::size_t n = lhs.ring().size();
  std::vector<Exponent> flat;
  flat.reserve(lhs.size() * rhs.size() * n);
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    auto a = lhs.row(i);
    for (std::size_t j = 0; j < rhs.size(); ++j) {
      auto b = rhs.row(j);
      for (std::size_t v = 0; v < n; ++v) flat.push_back(add_exponents(a[v], b[v]));
    }
  }
  return MonomialIdeal::from_rows(lhs.ring(), std::move(flat), lhs.size() * rhs.size());
}

MonomialIdeal ideal_product(const MonomialIdeal& ideal, const Monomial& factor) {
  require_same_ring(ideal.ring(), factor.ring());
  const std::size_t n = ideal.ring().size();
  std::vector<Exponent> flat;
  flat.reserve(ideal.flat().size());
  auto f = factor.exponents();
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    auto a = ideal.row(i);
    for (std::size_t v = 0; v < n; ++v) flat.push_back(add_exponents(a[v], f[v]));
  }
  return MonomialIdeal::from_rows(ideal.ring(), std::move(flat), ideal.size());
}

MonomialIdeal ideal_power(const MonomialIdeal& ideal, std::uint64_t e) {
  if (e == 0) throw InvalidArgument("ideal_power requires e >= 1");
  MonomialIdeal out = ideal;
  for (std::uint64_t i = 1; i < e; ++i) out = ideal_product(out, ideal);
  return out;
}

MonomialIdeal ideal_intersection(const MonomialIdeal& lhs, const MonomialIdeal& rhs) {
  require_same_ring(lhs.ring(), rhs.ring());
  const std::size_t n = lhs.ring().size();
  std::vector<Exponent> flat;
  flat.reserve(lhs.size() * rhs.size() * n);
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    auto a = lhs.row(i);
    for (std::size_t j = 0; j < rhs.size(); ++j) {
      auto b = rhs.row(j);
      for (std::size_t v = 0; v < n; ++v) flat.push_back(std::max(a[v], b[v]));
    }
  }
  return MonomialIdeal::from_rows(lhs.ring(), std::move(flat), lhs.size() * rhs.size());
}

MonomialIdeal ideal_colon(const MonomialIdeal& ideal, const Monomial& f) {
  require_same_ring(ideal.ring(), f.ring());
  const std::size_t n = ideal.ring().size();
  std::vector<Exponent> flat;
  flat.reserve(ideal.flat().size());
  auto fe = f.exponents();
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    auto a = ideal.row(i);
    for (std::size_t v = 0; v < n; ++v) flat.push_back(a[v] > fe[v] ? a[v] - fe[v] : 0);
  }
  return MonomialIdeal::from_rows(ideal.ring(), std::move(flat), ideal.size());
}

MonomialIdeal saturation_by_substitution(const MonomialIdeal& ideal, const Monomial& f) {
  require_same_ring(ideal.ring(), f.ring());
  const std::size_t n = ideal.ring().size();
  std::vector<Exponent> flat = ideal.flat();
  auto fe = f.exponents();
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    for (std::size_t v = 0; v < n; ++v) {
      if (fe[v] > 0) flat[i * n + v] = 0;
    }
  }
  return MonomialIdeal::from_rows(ideal.ring(), std::move(flat), ideal.size());
}

MonomialIdeal ideal_saturation(const MonomialIdeal& ideal, const Monomial& f) {
  MonomialIdeal current = ideal;
  // Colon by 1 is the identity, so the loop terminates immediately then.
  while (true) {
    MonomialIdeal next = ideal_colon(current, f);
    if (next == current) break;
    current = std::move(next);
  }
  if (!(current == saturation_by_substitution(ideal, f))) {
    throw std::logic_error("saturation routes disagree for " + ideal.to_string());
  }
  return current;
}

std::pair<MonomialIdeal, MonomialIdeal> colon_split(const MonomialIdeal& ideal,
                                                    std::size_t variable,
                                                    std::uint64_t n) {
  const Ring& ring = ideal.ring();
  auto xn = Monomial::variable(ring, variable, n);
  auto colon_n = ideal_colon(ideal, xn);
  auto colon_next = ideal_colon(ideal, Monomial::variable(ring, variable, add_exponents(n, 1)));
  if (!(colon_n == colon_next)) {
    throw InvalidArgument("colon by " + xn.to_string() + " has not stabilized");
  }
  return {std::move(colon_n), ideal_sum(ideal, minimalize(ring, std::span(&xn, 1)))};
}

bool ideal_contains(const MonomialIdeal& ideal, const Monomial& f) {
  require_same_ring(ideal.ring(), f.ring());
  auto fe = f.exponents();
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    if (detail::divides(ideal.row(i), fe)) return true;
  }
  return false;
}

bool ideal_subset(const MonomialIdeal& inner, const MonomialIdeal& outer) {
  require_same_ring(inner.ring(), outer.ring());
  for (std::size_t i = 0; i < inner.size(); ++i) {
    bool found = false;
    for (std::size_t j = 0; j < outer.size() && !found; ++j) {
      found = detail::divides(outer.row(j), inner.row(i));
    }
    if (!found) return false;
  }
  return true;
}

MonomialIdeal extend_ring(const MonomialIdeal& ideal, const Ring& bigger) {
  const Ring& small = ideal.ring();
  std::vector<std::size_t> target(small.size());
  for (std::size_t v = 0; v < small.size(); ++v) {
    auto idx = bigger.index_of(small.name(v));
    if (!idx) {
      throw InvalidArgument("variable '" + small.name(v) + "' missing from target ring");
    }
    target[v] = *idx;
  }
  std::vector<Exponent> flat(ideal.size() * bigger.size(), 0);
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    auto r = ideal.row(i);
    for (std::size_t v = 0; v < small.size(); ++v) flat[i * bigger.size() + target[v]] = r[v];
  }
  return MonomialIdeal::from_rows(bigger, std::move(flat), ideal.size());
}

}  // namespace decayideal
