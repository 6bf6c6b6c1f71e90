#include "decayideal/decomposition.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <string_view>
#include <thread>
#include <unordered_map>

#include "decayideal/errors.hpp"
#include "flat_ideal.hpp"

namespace decayideal {

// ---------------------------------------------------------------------------
// MonomialPrime / IrreducibleComponent

MonomialPrime::MonomialPrime(Ring ring, std::vector<std::size_t> variables)
    : ring_(std::move(ring)), variables_(std::move(variables)) {
  std::sort(variables_.begin(), variables_.end());
  variables_.erase(std::unique(variables_.begin(), variables_.end()), variables_.end());
  if (!variables_.empty() && variables_.back() >= ring_.size()) {
    throw InvalidArgument("prime variable index out of range");
  }
}

MonomialPrime MonomialPrime::from_names(const Ring& ring,
                                        const std::vector<std::string>& names) {
  std::vector<std::size_t> idx;
  idx.reserve(names.size());
  for (const auto& n : names) idx.push_back(ring.require(n));
  return MonomialPrime(ring, std::move(idx));
}

bool MonomialPrime::contains(std::size_t variable) const {
  return std::binary_search(variables_.begin(), variables_.end(), variable);
}

std::vector<std::string> MonomialPrime::names() const {
  std::vector<std::string> out;
  out.reserve(variables_.size());
  for (auto v : variables_) out.push_back(ring_.name(v));
  return out;
}

MonomialIdeal MonomialPrime::to_ideal() const {
  std::vector<Monomial> gens;
  for (auto v : variables_) gens.push_back(Monomial::variable(ring_, v));
  return minimalize(ring_, gens);
}

std::string MonomialPrime::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (i > 0) out += ',';
    out += ring_.name(variables_[i]);
  }
  return out + ")";
}

bool operator==(const MonomialPrime& lhs, const MonomialPrime& rhs) {
  return lhs.ring_ == rhs.ring_ && lhs.variables_ == rhs.variables_;
}

std::strong_ordering operator<=>(const MonomialPrime& lhs, const MonomialPrime& rhs) {
  return lhs.variables_ <=> rhs.variables_;
}

IrreducibleComponent::IrreducibleComponent(Ring ring, std::vector<Exponent> powers)
    : ring_(std::move(ring)), powers_(std::move(powers)) {
  if (powers_.size() != ring_.size()) {
    throw InvalidArgument("component exponent vector does not match ring size");
  }
}

MonomialPrime IrreducibleComponent::support() const {
  std::vector<std::size_t> vars;
  for (std::size_t v = 0; v < powers_.size(); ++v) {
    if (powers_[v] > 0) vars.push_back(v);
  }
  return MonomialPrime(ring_, std::move(vars));
}

MonomialIdeal IrreducibleComponent::to_ideal() const {
  std::vector<Monomial> gens;
  for (std::size_t v = 0; v < powers_.size(); ++v) {
    if (powers_[v] > 0) gens.push_back(Monomial::variable(ring_, v, powers_[v]));
  }
  return minimalize(ring_, gens);
}

bool IrreducibleComponent::contains(const IrreducibleComponent& other) const {
  require_same_ring(ring_, other.ring_);
  // Each generator x^c of `other` must be a multiple of x^b in *this.
  for (std::size_t v = 0; v < powers_.size(); ++v) {
    if (other.powers_[v] == 0) continue;
    if (powers_[v] == 0 || powers_[v] > other.powers_[v]) return false;
  }
  return true;
}

std::string IrreducibleComponent::to_string() const { return to_ideal().to_string(); }

// ---------------------------------------------------------------------------
// Predicates

std::optional<MonomialPrime> as_prime(const MonomialIdeal& ideal) {
  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    auto r = ideal.row(i);
    std::size_t nonzero = 0;
    std::size_t var = 0;
    for (std::size_t v = 0; v < r.size(); ++v) {
      if (r[v] == 0) continue;
      ++nonzero;
      var = v;
      if (r[v] != 1) return std::nullopt;
    }
    if (nonzero != 1) return std::nullopt;
    vars.push_back(var);
  }
  return MonomialPrime(ideal.ring(), std::move(vars));
}

bool is_prime(const MonomialIdeal& ideal) { return as_prime(ideal).has_value(); }

bool is_primary(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.ring().size();
  std::vector<bool> occurs(n, false);
  std::vector<bool> pure(n, false);
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    auto r = ideal.row(i);
    std::size_t nonzero = 0;
    std::size_t var = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (r[v] == 0) continue;
      occurs[v] = true;
      ++nonzero;
      var = v;
    }
    if (nonzero == 1) pure[var] = true;
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (occurs[v] && !pure[v]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Splitting decomposition

namespace {

struct RowsHash {
  std::size_t operator()(const std::vector<Exponent>& rows) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (Exponent e : rows) {
      h ^= e + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

using ComponentRows = std::vector<std::vector<Exponent>>;

class Splitter {
 public:
  explicit Splitter(std::size_t nvars) : nvars_(nvars) {}

  const ComponentRows& run(const detail::FlatGens& gens) {
    if (auto it = memo_.find(gens.data); it != memo_.end()) return it->second;

    std::size_t pivot = gens.count;
    std::size_t pivot_var = 0;
    for (std::size_t i = 0; i < gens.count && pivot == gens.count; ++i) {
      auto r = gens.row(i);
      std::size_t nonzero = 0;
      std::size_t first = 0;
      for (std::size_t v = 0; v < nvars_; ++v) {
        if (r[v] == 0) continue;
        if (nonzero++ == 0) first = v;
      }
      if (nonzero >= 2) {
        pivot = i;
        pivot_var = first;
      }
    }

    ComponentRows result;
    if (pivot == gens.count) {
      std::vector<Exponent> powers(nvars_, 0);
      for (std::size_t i = 0; i < gens.count; ++i) {
        auto r = gens.row(i);
        for (std::size_t v = 0; v < nvars_; ++v) {
          if (r[v] > 0) powers[v] = r[v];
        }
      }
      result.push_back(std::move(powers));
    } else {
      auto g = gens.row(pivot);
      std::vector<Exponent> u(nvars_, 0);
      u[pivot_var] = g[pivot_var];
      std::vector<Exponent> v(g.begin(), g.end());
      v[pivot_var] = 0;
      // Mapped values of an unordered_map keep their addresses on rehash.
      const ComponentRows& left = run(detail::insert_minimal(gens, pivot, u));
      const ComponentRows& right = run(detail::insert_minimal(gens, pivot, v));
      result.reserve(left.size() + right.size());
      std::merge(left.begin(), left.end(), right.begin(), right.end(),
                 std::back_inserter(result));
      result.erase(std::unique(result.begin(), result.end()), result.end());
    }
    return memo_.emplace(gens.data, std::move(result)).first->second;
  }

 private:
  std::size_t nvars_;
  std::unordered_map<std::vector<Exponent>, ComponentRows, RowsHash> memo_;
};

void require_proper_nonzero(const MonomialIdeal& ideal, std::string_view what) {
  if (ideal.is_zero()) throw InvalidArgument(std::string(what) + " of the zero ideal");
  if (ideal.is_unit()) throw InvalidArgument(std::string(what) + " of the unit ideal");
}

}  // namespace

std::vector<IrreducibleComponent> irreducible_decomposition(const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal, "irreducible decomposition");
  const std::size_t n = ideal.ring().size();
  Splitter splitter(n);
  const ComponentRows& rows = splitter.run({n, ideal.size(), ideal.flat()});
  std::vector<IrreducibleComponent> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.emplace_back(ideal.ring(), r);
  return out;
}

std::vector<IrreducibleComponent> irredundant(std::vector<IrreducibleComponent> components) {
  std::sort(components.begin(), components.end());
  // For an irreducible C, the intersection of the others lies in C exactly
  // when one of the others does: test the largest standard monomial of C.
  std::vector<bool> alive(components.size(), true);
  for (std::size_t i = 0; i < components.size(); ++i) {
    for (std::size_t j = 0; j < components.size(); ++j) {
      if (j == i || !alive[j]) continue;
      if (components[i].contains(components[j])) {
        alive[i] = false;
        break;
      }
    }
  }
  std::vector<IrreducibleComponent> out;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (alive[i]) out.push_back(std::move(components[i]));
  }
  return out;
}

MonomialIdeal intersect_components(const std::vector<IrreducibleComponent>& components) {
  if (components.empty()) throw InvalidArgument("intersection of no components");
  MonomialIdeal out = components.front().to_ideal();
  for (std::size_t i = 1; i < components.size(); ++i) {
    out = ideal_intersection(out, components[i].to_ideal());
  }
  return out;
}

std::vector<MonomialPrime> associated_primes_split(const MonomialIdeal& ideal) {
  auto components = irredundant(irreducible_decomposition(ideal));
  std::vector<MonomialPrime> primes;
  primes.reserve(components.size());
  for (const auto& c : components) primes.push_back(c.support());
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

// ---------------------------------------------------------------------------
// Witness search

std::uint64_t default_witness_budget() {
  if (const char* env = std::getenv("DECAYIDEAL_WITNESS_BUDGET")) {
    char* end = nullptr;
    auto value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return value;
  }
  return kDefaultWitnessBudget;
}

std::uint64_t witness_box_size(const MonomialIdeal& ideal) {
  std::uint64_t total = 1;
  for (Exponent e : ideal.generator_lcm()) {
    std::uint64_t dim = e == std::numeric_limits<Exponent>::max() ? e : e + 1;
    if (__builtin_mul_overflow(total, dim, &total)) {
      return std::numeric_limits<std::uint64_t>::max();
    }
  }
  return total;
}

namespace {

// Colon test over the occurring variables only, with supports as bitmasks.
class WitnessScanner {
 public:
  WitnessScanner(const MonomialIdeal& ideal, std::vector<std::size_t> vars)
      : vars_(std::move(vars)), count_(ideal.size()) {
    rows_.reserve(count_ * vars_.size());
    for (std::size_t i = 0; i < count_; ++i) {
      auto r = ideal.row(i);
      for (auto v : vars_) rows_.push_back(r[v]);
    }
    masks_.resize(count_);
  }

  /// Bitmask of the prime I : f, or 0 when f ∈ I or I : f is not prime.
  std::uint64_t prime_mask(const std::vector<Exponent>& f) {
    const std::size_t k = vars_.size();
    std::uint64_t linear = 0;
    for (std::size_t i = 0; i < count_; ++i) {
      const Exponent* r = rows_.data() + i * k;
      std::uint64_t mask = 0;
      Exponent degree = 0;
      for (std::size_t v = 0; v < k; ++v) {
        if (r[v] > f[v]) {
          mask |= std::uint64_t{1} << v;
          degree += r[v] - f[v];
        }
      }
      if (mask == 0) return 0;
      if (degree == 1) linear |= mask;
      masks_[i] = mask;
    }
    for (std::size_t i = 0; i < count_; ++i) {
      if ((masks_[i] & linear) == 0) return 0;
    }
    return linear;
  }

 private:
  std::vector<std::size_t> vars_;
  std::size_t count_;
  std::vector<Exponent> rows_;
  std::vector<std::uint64_t> masks_;
};

}  // namespace

std::vector<WitnessedPrime> witnessed_primes(const MonomialIdeal& ideal,
                                             std::uint64_t budget, unsigned threads) {
  require_proper_nonzero(ideal, "witness search");
  const auto lcm = ideal.generator_lcm();
  const auto vars = ideal.occurring_variables();
  const std::uint64_t total = witness_box_size(ideal);
  if (total > budget || vars.size() > 63) {
    throw BudgetExceeded("witness search box holds " +
                         (total == std::numeric_limits<std::uint64_t>::max()
                              ? std::string("more than 2^64")
                              : std::to_string(total)) +
                         " monomials, budget is " + std::to_string(budget));
  }
  const std::size_t k = vars.size();
  std::vector<Exponent> dims(k);
  for (std::size_t v = 0; v < k; ++v) dims[v] = lcm[vars[v]] + 1;

  auto decode = [&](std::uint64_t index) {
    std::vector<Exponent> f(k, 0);
    for (std::size_t v = k; v-- > 0;) {
      f[v] = index % dims[v];
      index /= dims[v];
    }
    return f;
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, total / 4096 + 1));

  // mask -> smallest enumeration index (= lexicographically smallest f).
  std::vector<std::map<std::uint64_t, std::uint64_t>> found(threads);
  auto scan = [&](unsigned t) {
    WitnessScanner scanner(ideal, vars);
    const std::uint64_t begin = total / threads * t + std::min<std::uint64_t>(t, total % threads);
    const std::uint64_t end = begin + total / threads + (t < total % threads ? 1 : 0);
    if (begin >= end) return;
    auto f = decode(begin);
    for (std::uint64_t index = begin; index < end; ++index) {
      if (auto mask = scanner.prime_mask(f)) found[t].emplace(mask, index);
      for (std::size_t v = k; v-- > 0;) {
        if (++f[v] < dims[v]) break;
        f[v] = 0;
      }
    }
  };
  if (threads == 1) {
    scan(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(scan, t);
  }

  std::map<std::uint64_t, std::uint64_t> merged;
  for (const auto& part : found) {
    for (auto [mask, index] : part) {
      auto [it, inserted] = merged.emplace(mask, index);
      if (!inserted) it->second = std::min(it->second, index);
    }
  }

  const Ring& ring = ideal.ring();
  std::vector<WitnessedPrime> out;
  for (auto [mask, index] : merged) {
    std::vector<std::size_t> prime_vars;
    for (std::size_t v = 0; v < k; ++v) {
      if (mask & (std::uint64_t{1} << v)) prime_vars.push_back(vars[v]);
    }
    auto local = decode(index);
    std::vector<Exponent> exps(ring.size(), 0);
    for (std::size_t v = 0; v < k; ++v) exps[vars[v]] = local[v];
    out.push_back({MonomialPrime(ring, std::move(prime_vars)), Monomial(ring, std::move(exps))});
  }
  std::sort(out.begin(), out.end(),
            [](const WitnessedPrime& a, const WitnessedPrime& b) { return a.prime < b.prime; });
  return out;
}

std::vector<MonomialPrime> associated_primes_witness(const MonomialIdeal& ideal,
                                                     std::uint64_t budget) {
  std::vector<MonomialPrime> out;
  for (auto& wp : witnessed_primes(ideal, budget)) out.push_back(std::move(wp.prime));
  return out;
}

}  // namespace decayideal
