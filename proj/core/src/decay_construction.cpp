#include "decayideal/decay_construction.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "decayideal/errors.hpp"

namespace decayideal {

// ---------------------------------------------------------------------------
// DecaySequence

std::size_t minimal_stabilization_index(std::span<const std::int64_t> entries) {
  std::size_t n = entries.size();
  while (n > 1 && entries[n - 2] == entries[n - 1]) --n;
  return n;
}

DecaySequence DecaySequence::validate(std::span<const std::int64_t> entries,
                                      std::optional<std::size_t> n) {
  if (entries.empty()) throw InvalidArgument("sequence is empty");
  for (auto q : entries) {
    if (q <= 0) throw InvalidArgument("sequence entries must be positive");
  }
  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (entries[i] > entries[i - 1]) throw InvalidArgument("sequence not non-increasing");
  }
  const std::size_t smallest = minimal_stabilization_index(entries);
  const std::size_t chosen = n.value_or(smallest);
  if (chosen < smallest || chosen > entries.size()) {
    throw InvalidArgument("stabilization index " + std::to_string(chosen) +
                          " must lie between " + std::to_string(smallest) + " and " +
                          std::to_string(entries.size()));
  }
  std::vector<std::uint64_t> kept(entries.begin(), entries.begin() + chosen);
  return DecaySequence(std::move(kept));
}

DecaySequence DecaySequence::parse(std::string_view text, std::optional<std::size_t> n) {
  std::vector<std::int64_t> values;
  std::string_view rest = text;
  while (!rest.empty() || values.empty()) {
    auto comma = rest.find(',');
    auto token = rest.substr(0, comma);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (token.empty()) {
      if (text.find_first_not_of(' ') == std::string_view::npos) {
        throw InvalidArgument("sequence is empty");
      }
      throw InvalidArgument("malformed sequence '" + std::string(text) + "'");
    }
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw InvalidArgument("malformed sequence entry '" + std::string(token) + "'");
    }
    values.push_back(value);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
    if (rest.empty()) throw InvalidArgument("malformed sequence '" + std::string(text) + "'");
  }
  return validate(values, n);
}

std::uint64_t DecaySequence::at(std::size_t e) const {
  if (entries_.empty()) throw InvalidArgument("the empty sequence has no entries");
  if (e == 0) throw InvalidArgument("sequence positions start at 1");
  return entries_[std::min(e, entries_.size()) - 1];
}

std::string DecaySequence::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out;
}

std::int64_t difference_measure(const DecaySequence& q, std::size_t i) {
  const std::size_t n = q.n();
  if (i == 0 || i > n) throw InvalidArgument("difference index out of range");
  const auto& e = q.entries();
  if (i == n) return static_cast<std::int64_t>(e[n - 1]) - 1;
  return static_cast<std::int64_t>(e[i - 1]) - static_cast<std::int64_t>(e[i]) - 1;
}

// ---------------------------------------------------------------------------
// Construction

std::string x_name(std::size_t j) { return "x" + std::to_string(j); }

std::string y_name(std::size_t k, std::size_t l) {
  return "y" + std::to_string(k) + "_" + std::to_string(l);
}

bool ConstructionData::in_J(std::size_t j) const {
  return std::binary_search(J.begin(), J.end(), j);
}

std::size_t ConstructionData::x(std::size_t j) const { return ring.require(x_name(j)); }

std::size_t ConstructionData::y(std::size_t k, std::size_t l) const {
  return ring.require(y_name(k, l));
}

ConstructionData build(const DecaySequence& q, std::uint64_t m) {
  ConstructionData data{q, m, {}, {}, {}, Ring(), {}, {}, {}, MonomialIdeal(Ring()),
                        MonomialIdeal(Ring())};
  if (q.is_empty()) return data;
  const std::size_t n = q.n();
  if (m < n) {
    throw InvalidArgument("m = " + std::to_string(m) + " must be at least n = " +
                          std::to_string(n));
  }

  for (std::size_t i = 1; i <= n; ++i) {
    const auto t = difference_measure(q, i);
    data.t.push_back(t);
    if (i < n && t >= 0) data.J.push_back(i);
    if (t >= 1) data.K.push_back(i);
  }

  std::vector<std::string> names{"a", "b"};
  for (auto j : data.J) names.push_back(x_name(j));
  for (auto k : data.K) {
    for (std::int64_t l = 1; l <= data.t_at(k); ++l) names.push_back(y_name(k, l));
  }
  data.ring = Ring(std::move(names));
  const Ring& ring = data.ring;
  const std::size_t a = 0;
  const std::size_t b = 1;

  auto z_of = [&](std::size_t j) {
    Monomial z(ring);
    for (std::int64_t l = 1; l <= data.t_at(j); ++l) {
      z = z * Monomial::variable(ring, data.y(j, static_cast<std::size_t>(l)));
    }
    return z;
  };
  for (auto j : data.J) data.Z.emplace(j, z_of(j));
  data.Z.emplace(n, z_of(n));

  for (const auto& [j, _] : data.Z) {
    Monomial y = data.Z.at(n);
    for (auto s : data.J) {
      if (s >= j) y = y * data.Z.at(s);
    }
    data.Y.emplace(j, std::move(y));
  }

  const std::uint64_t m1 = add_exponents(m, 1);
  const std::uint64_t m2 = add_exponents(m, 2);
  for (auto j : data.J) {
    Monomial mj = Monomial::variable(ring, a, m) *
                  Monomial::variable(ring, b, m - j + 1) *
                  Monomial::variable(ring, data.x(j));
    data.M.emplace(j, std::move(mj));
  }

  std::vector<Monomial> base{
      Monomial::variable(ring, a, m2),
      Monomial::variable(ring, a, m1) * Monomial::variable(ring, b),
      Monomial::variable(ring, a) * Monomial::variable(ring, b, m1),
      Monomial::variable(ring, b, m2),
  };
  data.base_ideal = minimalize(ring, base);

  std::vector<Monomial> gens;
  for (auto j : data.J) gens.push_back(data.M.at(j) * data.Y.at(j));
  data.ideal = ideal_sum(minimalize(ring, gens), ideal_product(data.base_ideal, data.Y.at(n)));
  return data;
}

// ---------------------------------------------------------------------------
// Predictions

std::vector<MonomialPrime> predicted_ass(const ConstructionData& data, std::uint64_t e) {
  if (e == 0) throw InvalidArgument("powers start at e = 1");
  if (data.q.is_empty()) throw InvalidArgument("no prediction for the empty sequence");
  const Ring& ring = data.ring;
  const std::size_t n = data.q.n();
  const std::size_t a = data.a();
  const std::size_t b = data.b();

  std::vector<MonomialPrime> out;
  out.emplace_back(ring, std::vector<std::size_t>{a, b});
  for (std::int64_t l = 1; l <= data.t_at(n); ++l) {
    out.emplace_back(ring, std::vector<std::size_t>{data.y(n, static_cast<std::size_t>(l))});
  }
  for (auto j : data.J) {
    if (j < e) continue;
    std::vector<std::size_t> chain{a, b};
    std::vector<std::size_t> tail{a, b};
    for (auto i : data.J) {
      if (i >= j) chain.push_back(data.x(i));
      if (i > j) tail.push_back(data.x(i));
    }
    out.emplace_back(ring, chain);
    for (std::int64_t l = 1; l <= data.t_at(j); ++l) {
      auto vars = tail;
      vars.push_back(data.y(j, static_cast<std::size_t>(l)));
      out.emplace_back(ring, std::move(vars));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<MonomialPrime> predicted_ass(const DecaySequence& q, std::uint64_t m,
                                         std::uint64_t e) {
  return predicted_ass(build(q, m), e);
}

std::uint64_t predicted_count(const DecaySequence& q, std::uint64_t e) {
  if (e == 0) throw InvalidArgument("powers start at e = 1");
  return q.at(static_cast<std::size_t>(std::min<std::uint64_t>(e, q.n())));
}

// ---------------------------------------------------------------------------
// Inductive transforms

namespace {

void require_transform_index(const DecaySequence& q, std::size_t k) {
  const std::size_t n = q.n();
  if (q.is_empty() || k == 0 || k > n) {
    throw InvalidArgument("transform index " + std::to_string(k) + " out of range");
  }
  if (k < n && difference_measure(q, k) < 0) {
    throw InvalidArgument("transform index " + std::to_string(k) + " is not in J or n");
  }
}

void require_non_increasing(const std::vector<std::uint64_t>& entries) {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] == 0 || (i > 0 && entries[i] > entries[i - 1])) {
      throw std::logic_error("transformed sequence is not non-increasing and positive");
    }
  }
}

}  // namespace

DecaySequence h_transform(const DecaySequence& q, std::size_t k) {
  require_transform_index(q, k);
  const auto shift = static_cast<std::uint64_t>(difference_measure(q, k));
  auto entries = q.entries();
  for (std::size_t i = 0; i < k; ++i) entries[i] -= shift;
  require_non_increasing(entries);
  return DecaySequence(std::move(entries));
}

DecaySequence g_transform(const DecaySequence& q, std::size_t k) {
  require_transform_index(q, k);
  const std::size_t n = q.n();
  if (k == n) return DecaySequence::empty();
  const auto& e = q.entries();
  std::vector<std::uint64_t> entries(k + 1, e[k]);
  entries.insert(entries.end(), e.begin() + static_cast<std::ptrdiff_t>(k + 1), e.end());
  require_non_increasing(entries);
  return DecaySequence(std::move(entries));
}

// ---------------------------------------------------------------------------
// Base case

std::vector<std::size_t> base_case_structure(const DecaySequence& q) {
  if (q.is_empty()) throw InvalidArgument("base case needs a nonempty sequence");
  for (std::size_t i = 1; i <= q.n(); ++i) {
    if (difference_measure(q, i) >= 1) {
      throw InvalidArgument("base case requires K to be empty");
    }
  }
  const std::uint64_t r = q.at(1);
  // run_length[v] = number of entries equal to v among q_1..q_n.
  std::vector<std::size_t> run_length(r + 1, 0);
  for (auto v : q.entries()) ++run_length[v];
  std::vector<std::size_t> positions;
  std::size_t total = 0;
  for (std::uint64_t k = 1; k <= r; ++k) {
    total += run_length[r - k + 1];
    positions.push_back(total);
  }
  return positions;
}

MonomialPrime base_case_prime(const ConstructionData& data, std::size_t s) {
  const auto j = base_case_structure(data.q);
  const std::size_t r = j.size();
  if (s == 0 || s >= r) {
    throw InvalidArgument("base case index s must satisfy 1 <= s < " + std::to_string(r));
  }
  std::vector<std::size_t> vars{data.a(), data.b()};
  for (std::size_t i = s; i < r; ++i) vars.push_back(data.x(j[i - 1]));
  return MonomialPrime(data.ring, std::move(vars));
}

Monomial base_case_witness(const ConstructionData& data, std::uint64_t e, std::size_t s) {
  const auto j = base_case_structure(data.q);
  const std::size_t r = j.size();
  if (s == 0 || s >= r) {
    throw InvalidArgument("base case index s must satisfy 1 <= s < " + std::to_string(r));
  }
  if (e == 0 || e > j[s - 1]) {
    throw InvalidArgument("no witness for e = " + std::to_string(e) + " (needs 1 <= e <= " +
                          std::to_string(j[s - 1]) + ")");
  }
  const Ring& ring = data.ring;
  const std::uint64_t m = data.m;
  const std::size_t previous = s == 1 ? 0 : j[s - 2];
  const Monomial am = Monomial::variable(ring, data.a(), m);
  if (e <= previous + 1) {
    const std::uint64_t b_power =
        add_exponents(m - previous, multiply_exponents(e - 1, add_exponents(m, 2)));
    Monomial w = am * Monomial::variable(ring, data.b(), b_power);
    if (previous > 0) w = w * Monomial::variable(ring, data.x(previous));
    return w;
  }
  const std::uint64_t b_power = multiply_exponents(e, add_exponents(m, 1)) - 1;
  return am * Monomial::variable(ring, data.b(), b_power);
}

}  // namespace decayideal
