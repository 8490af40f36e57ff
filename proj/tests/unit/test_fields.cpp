/*
   Copyright 2026 The towerlab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#include <gtest/gtest.h>

#include <cstdlib>
#include <map>
#include <set>

#include "towerlab/fq_poly.hpp"
#include "towerlab/places.hpp"
#include "towerlab/polynomial.hpp"

namespace towerlab {
namespace {

using Code = FiniteField::Code;

// Schoolbook F_p[z]/(m) on digit vectors, independent of the table code.
struct DigitOracle {
  std::uint32_t p;
  std::vector<std::uint32_t> m;  // monic, little-endian

  std::vector<std::uint32_t> mul(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) const {
    const std::size_t k = m.size() - 1;
    std::vector<std::uint64_t> c(2 * k, 0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) c[i + j] = (c[i + j] + std::uint64_t{a[i]} * b[j]) % p;
    for (std::size_t i = 2 * k - 1; i >= k; --i) {
      const std::uint64_t lead = c[i];
      if (lead == 0) continue;
      for (std::size_t j = 0; j <= k; ++j) c[i - k + j] = (c[i - k + j] + (p - lead) * m[j]) % p;
    }
    return std::vector<std::uint32_t>(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(k));
  }
};

TEST(FiniteField, PrimeFieldBasics) {
  const auto F = FiniteField::prime(7);
  EXPECT_EQ(F->order(), 7u);
  EXPECT_EQ(F->mul(3, 5), 1u);
  EXPECT_EQ(F->inv(3), 5u);
  EXPECT_EQ(F->add(6, 3), 2u);
  EXPECT_EQ(F->neg(2), 5u);
  EXPECT_EQ(F->from_int(-1), 6u);
  EXPECT_EQ(F->str(), "p=7");
}

TEST(FiniteField, QuadraticCharacterExamples) {
  EXPECT_EQ(FiniteField::prime(5)->quadratic_character(4), 1);
  EXPECT_EQ(FiniteField::prime(5)->quadratic_character(0), 0);
  EXPECT_EQ(FiniteField::prime(3)->quadratic_character(2), -1);
  EXPECT_THROW((void)FiniteField::prime(2)->quadratic_character(1), PreconditionError);
}

TEST(FiniteField, AbsoluteTraceExamples) {
  const auto F8 = FiniteField::over_prime(2, {1, 1, 0, 1});
  EXPECT_EQ(F8->absolute_trace(2), 0u);  // code 2 is z
  EXPECT_EQ(FiniteField::prime(2)->absolute_trace(1), 1u);
  const auto F4 = FiniteField::over_prime(2, {1, 1, 1});
  EXPECT_EQ(F4->absolute_trace(2), 1u);
}

TEST(FiniteField, RejectsReducibleModulus) {
  EXPECT_THROW(FiniteField::over_prime(2, {1, 0, 1}), PreconditionError);
  EXPECT_THROW(FiniteField::over_prime(3, {2, 0, 1}), PreconditionError);
  EXPECT_THROW(FiniteField::prime(9), PreconditionError);
}

TEST(FiniteField, MultiplicationMatchesDigitOracle) {
  for (std::uint64_t q : {4ull, 8ull, 9ull, 25ull, 27ull, 49ull, 64ull, 125ull}) {
    const auto F = FiniteField::of_order(q);
    DigitOracle o{F->characteristic(), {}};
    for (auto c : F->modulus()) o.m.push_back(c);
    for (Code a = 0; a < q; ++a) {
      for (Code b = 0; b < q; ++b) {
        const auto want = o.mul(F->digits(a), F->digits(b));
        ASSERT_EQ(F->digits(F->mul(a, b)), want) << "q=" << q << " a=" << a << " b=" << b;
      }
    }
  }
}

TEST(FiniteField, AdditionIsCoordinatewise) {
  const auto F = FiniteField::of_order(125);
  for (Code a = 0; a < 125; a += 7) {
    for (Code b = 0; b < 125; ++b) {
      const auto da = F->digits(a), db = F->digits(b), ds = F->digits(F->add(a, b));
      for (std::size_t i = 0; i < da.size(); ++i) ASSERT_EQ(ds[i], (da[i] + db[i]) % 5);
    }
  }
}

TEST(FiniteField, CodesOfPrimeSubfieldAreStable) {
  const auto F = FiniteField::of_order(49);
  for (Code a = 0; a < 7; ++a)
    for (Code b = 0; b < 7; ++b) EXPECT_EQ(F->mul(a, b), (a * b) % 7);
}

TEST(FiniteField, QuadraticCharacterAgainstSquareList) {
  for (std::uint64_t q : {3ull, 5ull, 9ull, 25ull, 27ull, 121ull}) {
    const auto F = FiniteField::of_order(q);
    std::set<Code> squares;
    for (Code x = 1; x < q; ++x) squares.insert(F->mul(x, x));
    EXPECT_EQ(squares.size(), (q - 1) / 2);
    int sum = 0;
    for (Code x = 0; x < q; ++x) {
      const int chi = F->quadratic_character(x);
      sum += chi;
      EXPECT_EQ(chi, x == 0 ? 0 : (squares.count(x) ? 1 : -1));
    }
    EXPECT_EQ(sum, 0);
  }
}

TEST(FiniteField, TraceIsSumOfConjugates) {
  for (std::uint64_t q : {4ull, 8ull, 9ull, 27ull, 32ull, 125ull}) {
    const auto F = FiniteField::of_order(q);
    std::map<Code, std::uint64_t> fibres;
    for (Code x = 0; x < q; ++x) {
      Code s = 0, y = x;
      for (unsigned i = 0; i < F->absolute_degree(); ++i) {
        s = F->add(s, y);
        y = F->pow(y, F->characteristic());
      }
      ASSERT_EQ(F->absolute_trace(x), s);
      ++fibres[s];
    }
    EXPECT_EQ(fibres.size(), F->characteristic());
    for (auto& [t, n] : fibres) EXPECT_EQ(n, q / F->characteristic());
  }
}

TEST(FiniteField, PthRootInvertsFrobenius) {
  for (std::uint64_t q : {8ull, 9ull, 25ull, 64ull}) {
    const auto F = FiniteField::of_order(q);
    for (Code x = 0; x < q; ++x) EXPECT_EQ(F->pow(F->pth_root(x), F->characteristic()), x);
  }
}

TEST(FiniteField, ParseRoundTrip) {
  const auto F = FiniteField::parse("p=5;m=2,4,1");
  EXPECT_EQ(F->order(), 25u);
  EXPECT_EQ(FiniteField::parse(F->str())->str(), F->str());
  EXPECT_THROW(FiniteField::parse("q=5"), PreconditionError);
}

TEST(FiniteField, TowerOverExtension) {
  const auto F4 = FiniteField::of_order(4);
  const auto F16 = FiniteField::standard_extension(F4, 2);
  EXPECT_EQ(F16->order(), 16u);
  EXPECT_EQ(F16->absolute_degree(), 4u);
  for (Code a = 1; a < 16; ++a) EXPECT_EQ(F16->mul(a, F16->inv(a)), 1u);
  for (Code a = 0; a < 4; ++a)
    for (Code b = 0; b < 4; ++b) EXPECT_EQ(F16->mul(a, b), F4->mul(a, b));
}

// ---- FqPoly ------------------------------------------------------------------

TEST(FqPoly, ArithmeticAndDivision) {
  const auto F = FiniteField::prime(5);
  const FqPoly a = FqPoly::from_ints(F, {1, 2, 3, 4}), b = FqPoly::from_ints(F, {2, 0, 1});
  const auto [q, r] = divmod(a, b);
  EXPECT_EQ(q * b + r, a);
  EXPECT_LT(r.degree(), b.degree());
  EXPECT_EQ(gcd(a * b, b * b), b.monic());
}

TEST(FqPoly, ProductOfIrreduciblesIsFrobeniusPolynomial) {
  // x^{q^m} - x is the product of the monic irreducibles of degree dividing m.
  for (std::uint64_t q : {2ull, 3ull, 4ull}) {
    const auto F = FiniteField::of_order(q);
    for (unsigned m = 1; m <= 4; ++m) {
      FqPoly prod = FqPoly::constant(F, 1);
      for (const auto& f : monic_irreducibles(F, static_cast<int>(m), Budget()))
        if (m % static_cast<unsigned>(f.degree()) == 0) prod = prod * f;
      const std::size_t qm = ipow_u64(q, m);
      FqPoly target = FqPoly::monomial(F, 1, qm) - FqPoly::x(F);
      EXPECT_EQ(prod, target) << "q=" << q << " m=" << m;
    }
  }
}

TEST(FqPoly, IrreducibilityMatchesTrialDivision) {
  const auto F = FiniteField::prime(3);
  std::vector<FqPoly> small;
  for (int deg = 1; deg <= 2; ++deg) {
    const std::uint64_t n = ipow_u64(3, static_cast<unsigned>(deg));
    for (std::uint64_t i = 0; i < n; ++i) {
      std::vector<Code> c(static_cast<std::size_t>(deg) + 1, 1);
      std::uint64_t v = i;
      for (int j = 0; j < deg; ++j) c[static_cast<std::size_t>(j)] = static_cast<Code>(v % 3), v /= 3;
      small.emplace_back(F, c);
    }
  }
  for (std::uint64_t i = 0; i < 81; ++i) {
    std::vector<Code> c(5, 1);
    std::uint64_t v = i;
    for (int j = 0; j < 4; ++j) c[static_cast<std::size_t>(j)] = static_cast<Code>(v % 3), v /= 3;
    const FqPoly f(F, c);
    bool has_divisor = false;
    for (const auto& g : small) has_divisor |= (f % g).is_zero();
    EXPECT_EQ(is_irreducible(f), !has_divisor) << f.str();
  }
}

TEST(FqPoly, FactorReconstructs) {
  for (std::uint64_t q : {2ull, 3ull, 5ull, 4ull, 9ull}) {
    const auto F = FiniteField::of_order(q);
    std::vector<std::int64_t> coeffs = {1, 0, 2, 1, 1, 0, 0, 1, 1};
    FqPoly f = FqPoly::from_ints(F, coeffs);
    f = f * f * FqPoly::from_ints(F, {1, 1}) * FqPoly::x(F);
    const auto fac = factor(f);
    FqPoly prod = FqPoly::constant(F, f.leading());
    for (const auto& [g, e] : fac) {
      EXPECT_TRUE(is_irreducible(g));
      EXPECT_EQ(g, g.monic());
      for (int i = 0; i < e; ++i) prod = prod * g;
    }
    EXPECT_EQ(prod, f) << "q=" << q;
    for (std::size_t i = 1; i < fac.size(); ++i) EXPECT_TRUE(code_order_less(fac[i - 1].first, fac[i].first));
  }
}

TEST(FqPoly, ParseIsStrict) {
  const auto F = FiniteField::prime(5);
  EXPECT_EQ(parse_fq_poly(F, "1,0,3").str(), "1,0,3");
  EXPECT_EQ(parse_fq_poly(F, "-1,1").str(), "4,1");
  EXPECT_THROW(parse_fq_poly(F, "1,x"), PreconditionError);
  EXPECT_THROW(parse_fq_poly(F, "1,2a"), PreconditionError);
  EXPECT_THROW(parse_fq_poly(FiniteField::of_order(25), "30"), PreconditionError);
}

TEST(FqPoly, Valuation) {
  const auto F = FiniteField::prime(7);
  const FqPoly t = FqPoly::x(F), g = FqPoly::from_ints(F, {3, 1});
  EXPECT_EQ(valuation(t * t * t * g, t), 3);
  EXPECT_EQ(valuation(g * g, g), 2);
  EXPECT_EQ(valuation(g, t), 0);
}

// ---- places ------------------------------------------------------------------

TEST(Places, IrreducibleEnumerationExamples) {
  const auto F2 = FiniteField::prime(2);
  std::vector<std::string> got;
  for (const auto& f : monic_irreducibles(F2, 3, Budget())) got.push_back(f.str());
  EXPECT_EQ(got, (std::vector<std::string>{"0,1", "1,1", "1,1,1", "1,1,0,1", "1,0,1,1"}));
  got.clear();
  for (const auto& f : monic_irreducibles(FiniteField::prime(3), 1, Budget())) got.push_back(f.str());
  EXPECT_EQ(got, (std::vector<std::string>{"0,1", "1,1", "2,1"}));
}

TEST(Places, NecklaceCountsMatchEnumeration) {
  for (std::uint64_t q : {2ull, 3ull, 4ull, 5ull, 7ull}) {
    const auto F = FiniteField::of_order(q);
    for (int m = 1; m <= 4; ++m) {
      std::uint64_t n = 0;
      for_each_monic_irreducible(F, m, [&](const FqPoly&) { ++n; }, Budget());
      // (1/m) sum_{e | m} mu(e) q^{m/e}, written out independently.
      std::int64_t s = 0;
      for (int e = 1; e <= m; ++e)
        if (m % e == 0) s += mobius(static_cast<std::uint64_t>(e)) * static_cast<std::int64_t>(ipow_u64(q, static_cast<unsigned>(m / e)));
      EXPECT_EQ(static_cast<std::int64_t>(n), s / m);
      EXPECT_EQ(necklace_count(q, static_cast<unsigned>(m)), BigInt(s / m));
    }
  }
}

TEST(Places, BudgetRejectsLargeDegree) {
  Budget b;
  b.max_place_degree = 3;
  EXPECT_THROW(monic_irreducibles(FiniteField::prime(5), 4, b), BudgetError);
}

TEST(Places, ResidueFieldReduction) {
  const auto F = FiniteField::prime(3);
  const Place v = Place::finite(FqPoly::from_ints(F, {1, 0, 1}));  // t^2 + 1
  const auto R = residue_field(v);
  EXPECT_EQ(R->order(), 9u);
  EXPECT_EQ(v.residue_order(), BigInt(9));
  // t^2 reduces to -1.
  EXPECT_EQ(reduce(FqPoly::from_ints(F, {0, 0, 1}), v, R), R->from_int(-1));
  EXPECT_EQ(Place::infinity(F).str(), "inf");
  EXPECT_EQ(places_up_to(F, 2, Budget()).size(), 3u + 3u + 1u);
}

// ---- integer polynomials and common --------------------------------------------

TEST(IntPoly, DivisionAndMultiplicity) {
  const IntPoly a{1, 0, -25}, b{1, -5};
  const auto q = exact_divide(a, b);
  ASSERT_TRUE(q);
  EXPECT_EQ(*q, (IntPoly{1, 5}));
  EXPECT_FALSE(exact_divide(IntPoly{1, -5}, IntPoly{1, 5}));
  EXPECT_EQ(divisibility_multiplicity(a * a * b, b), 3);
  EXPECT_EQ(parse_int_poly("1,-10,0,250,-625"), (IntPoly{1, -10, 0, 250, -625}));
}

TEST(IntPoly, PowerSumsRoundTrip) {
  const IntPoly p{1, -10, 0, 250, -625};
  const auto s = inverse_root_power_sums(p, 4);
  EXPECT_EQ(s[0], BigInt(10));
  EXPECT_EQ(from_inverse_root_power_sums(s, 4), p);
}

TEST(Common, NumberTheory) {
  EXPECT_EQ(mobius(1), 1);
  EXPECT_EQ(mobius(6), 1);
  EXPECT_EQ(mobius(12), 0);
  EXPECT_EQ(mobius(30), -1);
  EXPECT_EQ(prime_power(125), (std::pair<std::uint32_t, unsigned>{5, 3}));
  EXPECT_THROW(prime_power(12), PreconditionError);
  EXPECT_TRUE(is_prime_u64(1000003));
  EXPECT_FALSE(is_prime_u64(1));
}

TEST(Common, BudgetParsing) {
  EXPECT_EQ(Budget::parse("1234").max_enumeration, 1234u);
  const Budget b = Budget::parse("enum=50,degree=3");
  EXPECT_EQ(b.max_enumeration, 50u);
  EXPECT_EQ(b.max_place_degree, 3);
  EXPECT_THROW(Budget::parse("enum=x"), PreconditionError);
  EXPECT_THROW(Budget::parse("speed=3"), PreconditionError);
  EXPECT_THROW(b.require(51, "thing"), BudgetError);
  EXPECT_NO_THROW(b.require(50, "thing"));
}

}  // namespace
}  // namespace towerlab
