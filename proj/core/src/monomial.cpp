#include "decayideal/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "decayideal/errors.hpp"

namespace decayideal {

Exponent add_exponents(Exponent lhs, Exponent rhs) {
  Exponent out = 0;
  if (__builtin_add_overflow(lhs, rhs, &out)) {
    throw ExponentOverflow("exponent overflow in addition");
  }
  return out;
}

Exponent multiply_exponents(Exponent lhs, Exponent rhs) {
  Exponent out = 0;
  if (__builtin_mul_overflow(lhs, rhs, &out)) {
    throw ExponentOverflow("exponent overflow in multiplication");
  }
  return out;
}

Monomial::Monomial(Ring ring)
    : ring_(std::move(ring)), exponents_(ring_.size(), 0) {}

Monomial::Monomial(Ring ring, std::vector<Exponent> exponents)
    : ring_(std::move(ring)), exponents_(std::move(exponents)) {
  if (exponents_.size() != ring_.size()) {
    throw InvalidArgument("exponent vector length " +
                          std::to_string(exponents_.size()) +
                          " does not match ring size " +
                          std::to_string(ring_.size()));
  }
}

Monomial Monomial::variable(const Ring& ring, std::size_t index, Exponent power) {
  if (index >= ring.size()) throw InvalidArgument("variable index out of range");
  Monomial out(ring);
  out.exponents_[index] = power;
  return out;
}

Monomial Monomial::parse(const Ring& ring, std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  }
  Monomial out(ring);
  if (compact.empty() || compact == "1") return out;
  std::string_view rest = compact;
  while (!rest.empty()) {
    auto star = rest.find('*');
    std::string_view factor = rest.substr(0, star);
    rest = star == std::string_view::npos ? std::string_view{} : rest.substr(star + 1);
    if (factor.empty()) throw InvalidArgument("malformed monomial '" + std::string(text) + "'");
    Exponent power = 1;
    auto caret = factor.find('^');
    if (caret != std::string_view::npos) {
      auto digits = factor.substr(caret + 1);
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), power);
      if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
        throw InvalidArgument("malformed exponent in '" + std::string(factor) + "'");
      }
      factor = factor.substr(0, caret);
    }
    if (factor == "1") continue;
    auto idx = ring.require(factor);
    out.exponents_[idx] = add_exponents(out.exponents_[idx], power);
  }
  return out;
}

bool Monomial::is_one() const noexcept {
  return std::all_of(exponents_.begin(), exponents_.end(),
                     [](Exponent e) { return e == 0; });
}

Exponent Monomial::total_degree() const {
  Exponent sum = 0;
  for (Exponent e : exponents_) sum = add_exponents(sum, e);
  return sum;
}

std::vector<std::size_t> Monomial::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > 0) out.push_back(i);
  }
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  require_same_ring(ring_, other.ring_);
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] > other.exponents_[i]) return false;
  }
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  require_same_ring(ring_, other.ring_);
  Monomial out(ring_);
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    out.exponents_[i] = std::max(exponents_[i], other.exponents_[i]);
  }
  return out;
}

Monomial Monomial::gcd(const Monomial& other) const {
  require_same_ring(ring_, other.ring_);
  Monomial out(ring_);
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    out.exponents_[i] = std::min(exponents_[i], other.exponents_[i]);
  }
  return out;
}

Monomial Monomial::colon(const Monomial& other) const {
  require_same_ring(ring_, other.ring_);
  Monomial out(ring_);
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    out.exponents_[i] = exponents_[i] > other.exponents_[i]
                            ? exponents_[i] - other.exponents_[i]
                            : 0;
  }
  return out;
}

Monomial Monomial::divided_by(const Monomial& divisor) const {
  if (!divisor.divides(*this)) {
    throw InvalidArgument(divisor.to_string() + " does not divide " + to_string());
  }
  return colon(divisor);
}

Monomial Monomial::pow(Exponent power) const {
  Monomial out(ring_);
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    out.exponents_[i] = multiply_exponents(exponents_[i], power);
  }
  return out;
}

Monomial Monomial::extended_to(const Ring& bigger) const {
  Monomial out(bigger);
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    auto idx = bigger.index_of(ring_.name(i));
    if (!idx) {
      throw InvalidArgument("variable '" + ring_.name(i) + "' missing from target ring");
    }
    out.exponents_[*idx] = exponents_[i];
  }
  return out;
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring_.name(i);
    if (exponents_[i] > 1) out += '^' + std::to_string(exponents_[i]);
  }
  return out.empty() ? "1" : out;
}

Monomial operator*(const Monomial& lhs, const Monomial& rhs) {
  require_same_ring(lhs.ring_, rhs.ring_);
  Monomial out(lhs.ring_);
  for (std::size_t i = 0; i < lhs.exponents_.size(); ++i) {
    out.exponents_[i] = add_exponents(lhs.exponents_[i], rhs.exponents_[i]);
  }
  return out;
}

bool operator==(const Monomial& lhs, const Monomial& rhs) {
  return lhs.ring_ == rhs.ring_ && lhs.exponents_ == rhs.exponents_;
}

std::strong_ordering operator<=>(const Monomial& lhs, const Monomial& rhs) {
  return lhs.exponents_ <=> rhs.exponents_;
}

}  // namespace decayideal
