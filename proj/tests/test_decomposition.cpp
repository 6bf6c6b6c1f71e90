#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "decayideal/decomposition.hpp"
#include "decayideal/errors.hpp"
#include "oracle.hpp"

using namespace decayideal;

namespace {

Ring xyz() { return Ring({"x", "y", "z"}); }
MonomialIdeal I(const Ring& ring, const char* text) { return MonomialIdeal::parse(ring, text); }

std::vector<std::string> prime_strings(const std::vector<MonomialPrime>& primes) {
  std::vector<std::string> out;
  for (const auto& p : primes) out.push_back(p.to_string());
  return out;
}

std::vector<std::string> component_strings(const std::vector<IrreducibleComponent>& comps) {
  std::vector<std::string> out;
  for (const auto& c : comps) out.push_back(c.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

// Greedy removal straight from the definition: drop C_i when the
// intersection of the other surviving components lies inside it.
std::vector<IrreducibleComponent> irredundant_by_definition(std::vector<IrreducibleComponent> comps) {
  std::sort(comps.begin(), comps.end());
  std::vector<bool> alive(comps.size(), true);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    std::vector<IrreducibleComponent> others;
    for (std::size_t j = 0; j < comps.size(); ++j) {
      if (j != i && alive[j]) others.push_back(comps[j]);
    }
    if (others.empty()) continue;
    if (ideal_subset(intersect_components(others), comps[i].to_ideal())) alive[i] = false;
  }
  std::vector<IrreducibleComponent> out;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (alive[i]) out.push_back(comps[i]);
  }
  return out;
}

}  // namespace

TEST(Predicates, IsPrime) {
  auto r = xyz();
  EXPECT_TRUE(is_prime(I(r, "x, z")));
  EXPECT_FALSE(is_prime(I(r, "x^2, y")));
  EXPECT_FALSE(is_prime(I(r, "x*y")));
  EXPECT_EQ(as_prime(I(r, "z, x"))->to_string(), "(x,z)");
}

TEST(Predicates, IsPrimary) {
  Ring ab({"a", "b"});
  EXPECT_TRUE(is_primary(I(ab, "a^5, a^4*b, a*b^4, b^5")));
  EXPECT_FALSE(is_primary(I(xyz(), "x*y, x*z, y*z")));
  EXPECT_TRUE(is_primary(I(xyz(), "x^2")));
  EXPECT_FALSE(is_primary(I(xyz(), "x^2, x*y")));
}

TEST(IrreducibleDecomposition, Examples) {
  auto r = xyz();
  EXPECT_EQ(component_strings(irreducible_decomposition(I(r, "x*y"))),
            (std::vector<std::string>{"(x)", "(y)"}));

  auto mixed = I(r, "x^2, x*y");
  auto comps = irreducible_decomposition(mixed);
  EXPECT_EQ(component_strings(comps), (std::vector<std::string>{"(x)", "(y, x^2)"}));
  EXPECT_EQ(intersect_components(comps), mixed);

  auto tri = irreducible_decomposition(I(r, "x*y, x*z, y*z"));
  EXPECT_EQ(component_strings(tri), (std::vector<std::string>{"(y, x)", "(z, x)", "(z, y)"}));
  for (const auto& c : tri) EXPECT_TRUE(is_prime(c.to_ideal()));
}

TEST(IrreducibleDecomposition, RejectsZeroAndUnit) {
  EXPECT_THROW(irreducible_decomposition(MonomialIdeal::zero(xyz())), InvalidArgument);
  EXPECT_THROW(irreducible_decomposition(MonomialIdeal::unit(xyz())), InvalidArgument);
  EXPECT_THROW(associated_primes_split(MonomialIdeal::unit(xyz())), InvalidArgument);
  EXPECT_THROW(associated_primes_witness(MonomialIdeal::zero(xyz())), InvalidArgument);
}

TEST(Irredundant, Examples) {
  auto r = xyz();
  IrreducibleComponent x(r, {1, 0, 0}), x2(r, {2, 0, 0}), y(r, {0, 1, 0});
  auto kept = irredundant({x, x2});
  ASSERT_EQ(kept.size(), 1u);
  EXPECT_EQ(kept[0], x2);
  EXPECT_EQ(irredundant({x, y}).size(), 2u);

  auto square = ideal_power(I(r, "x*y, x*z, y*z"), 2);
  auto survivors = irredundant(irreducible_decomposition(square));
  std::vector<MonomialPrime> radicals;
  for (const auto& c : survivors) radicals.push_back(c.support());
  std::sort(radicals.begin(), radicals.end());
  radicals.erase(std::unique(radicals.begin(), radicals.end()), radicals.end());
  EXPECT_EQ(radicals, associated_primes_witness(square));
  EXPECT_EQ(radicals.size(), 4u);
  EXPECT_EQ(intersect_components(survivors), square);
}

TEST(AssociatedPrimes, IntroExample) {
  auto r = xyz();
  auto tri = I(r, "x*y, x*z, y*z");
  EXPECT_EQ(prime_strings(associated_primes_split(tri)),
            (std::vector<std::string>{"(x,y)", "(x,z)", "(y,z)"}));
  auto square = ideal_power(tri, 2);
  EXPECT_EQ(prime_strings(associated_primes_split(square)),
            (std::vector<std::string>{"(x,y)", "(x,y,z)", "(x,z)", "(y,z)"}));
  EXPECT_EQ(associated_primes_witness(tri), associated_primes_split(tri));
  EXPECT_EQ(associated_primes_witness(square), associated_primes_split(square));
}

TEST(AssociatedPrimes, BaseIdealIsPrimary) {
  Ring ab({"a", "b"});
  for (Exponent m = 1; m <= 5; ++m) {
    auto base = MonomialIdeal::from_exponents(ab, {{m + 2, 0}, {m + 1, 1}, {1, m + 1}, {0, m + 2}});
    EXPECT_TRUE(is_primary(base));
    EXPECT_EQ(prime_strings(associated_primes_split(base)), (std::vector<std::string>{"(a,b)"}));
    EXPECT_EQ(associated_primes_witness(base), associated_primes_split(base));
  }
}

TEST(Witness, ExamplesAndSoundness) {
  auto r = xyz();
  auto single = witnessed_primes(I(r, "x^2"));
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0].prime.to_string(), "(x)");
  EXPECT_EQ(single[0].witness.to_string(), "x");

  auto square = ideal_power(I(r, "x*y, x*z, y*z"), 2);
  auto found = witnessed_primes(square);
  ASSERT_EQ(found.size(), 4u);
  for (const auto& wp : found) {
    EXPECT_FALSE(ideal_contains(square, wp.witness));
    EXPECT_EQ(ideal_colon(square, wp.witness), wp.prime.to_ideal());
  }
  EXPECT_EQ(ideal_colon(square, Monomial::parse(r, "x*y*z")), I(r, "x, y, z"));
}

TEST(Witness, BudgetIsEnforced) {
  auto r = xyz();
  auto ideal = I(r, "x^9*y^9*z^9");
  EXPECT_EQ(witness_box_size(ideal), 1000u);
  EXPECT_THROW(witnessed_primes(ideal, 999), BudgetExceeded);
  EXPECT_NO_THROW(witnessed_primes(ideal, 1000));
}

TEST(Witness, ThreadCountDoesNotChangeResult) {
  std::mt19937_64 rng(99);
  Ring r({"a", "b", "c", "d"});
  for (int trial = 0; trial < 20; ++trial) {
    auto ideal = ideal_power(oracle::random_ideal(rng, r, 3, 4), 2);
    auto one = witnessed_primes(ideal, kDefaultWitnessBudget, 1);
    auto many = witnessed_primes(ideal, kDefaultWitnessBudget, 5);
    ASSERT_EQ(one.size(), many.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
      EXPECT_EQ(one[i].prime, many[i].prime);
      EXPECT_EQ(one[i].witness, many[i].witness);
    }
  }
}

// ---------------------------------------------------------------------------
// Properties over random ideals in at most 4 variables, exponents <= 4.

class RandomAss : public ::testing::Test {
 protected:
  std::mt19937_64 rng{31337};
  Ring ring{{"a", "b", "c", "d"}};
};

TEST_F(RandomAss, SplitMatchesWitnessOracle) {
  for (int trial = 0; trial < 250; ++trial) {
    auto ideal = oracle::random_ideal(rng, ring, 4, 6);
    EXPECT_EQ(associated_primes_split(ideal), associated_primes_witness(ideal)) << ideal.to_string();
  }
}

TEST_F(RandomAss, DecompositionIntersectsBackToIdeal) {
  for (int trial = 0; trial < 150; ++trial) {
    auto ideal = oracle::random_ideal(rng, ring, 4, 6);
    auto comps = irreducible_decomposition(ideal);
    EXPECT_EQ(intersect_components(comps), ideal);
    auto kept = irredundant(comps);
    EXPECT_EQ(intersect_components(kept), ideal);
    EXPECT_EQ(kept, irredundant_by_definition(comps));
    // No survivor is removable.
    EXPECT_EQ(irredundant(kept), kept);
  }
}

TEST_F(RandomAss, VariableOccurrenceCriterion) {
  for (int trial = 0; trial < 150; ++trial) {
    auto ideal = oracle::random_ideal(rng, ring, 4, 6);
    std::vector<std::size_t> vars;
    for (const auto& p : associated_primes_split(ideal)) {
      vars.insert(vars.end(), p.variables().begin(), p.variables().end());
    }
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    EXPECT_EQ(vars, ideal.occurring_variables());
  }
}

TEST_F(RandomAss, MinimalPrimesPersistInPowers) {
  for (int trial = 0; trial < 60; ++trial) {
    auto ideal = oracle::random_ideal(rng, ring, 3, 4);
    auto ass = associated_primes_split(ideal);
    std::vector<MonomialPrime> minimal;
    for (const auto& p : ass) {
      bool has_smaller = std::any_of(ass.begin(), ass.end(), [&](const MonomialPrime& q) {
        return q != p && std::includes(p.variables().begin(), p.variables().end(),
                                       q.variables().begin(), q.variables().end());
      });
      if (!has_smaller) minimal.push_back(p);
    }
    for (std::uint64_t e = 2; e <= 3; ++e) {
      auto power_ass = associated_primes_split(ideal_power(ideal, e));
      for (const auto& p : minimal) {
        EXPECT_TRUE(std::binary_search(power_ass.begin(), power_ass.end(), p));
      }
    }
  }
}

TEST_F(RandomAss, PrimaryMeansSinglePrime) {
  int primary_seen = 0;
  for (int trial = 0; trial < 400; ++trial) {
    auto ideal = oracle::random_ideal(rng, ring, 4, 4);
    auto ass = associated_primes_split(ideal);
    EXPECT_EQ(is_primary(ideal), ass.size() == 1u) << ideal.to_string();
    primary_seen += is_primary(ideal);
  }
  EXPECT_GT(primary_seen, 0);
}

TEST_F(RandomAss, SplitContainment) {
  // Ass(I) ⊆ Ass(I : x^n) ∪ Ass(I + (x^n)) once the colon has stabilized.
  for (int trial = 0; trial < 150; ++trial) {
    auto ideal = oracle::random_ideal(rng, ring, 4, 6);
    const std::size_t x = trial % 4;
    auto [colon, sum] = colon_split(ideal, x, 4);
    std::vector<MonomialPrime> allowed;
    if (!colon.is_unit()) allowed = associated_primes_split(colon);
    auto more = associated_primes_split(sum);
    allowed.insert(allowed.end(), more.begin(), more.end());
    for (const auto& p : associated_primes_split(ideal)) {
      EXPECT_NE(std::find(allowed.begin(), allowed.end(), p), allowed.end());
    }
  }
}
