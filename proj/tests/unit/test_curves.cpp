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

#include <cmath>
#include <map>

#include "towerlab/curves.hpp"

namespace towerlab {
namespace {

using Code = FiniteField::Code;

Code horner(const FieldPtr& F, const std::vector<Code>& c, Code x) {
  Code acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = F->add(F->mul(acc, x), c[i]);
  return acc;
}

// Points of the smooth model: affine pairs (x, y) plus the points of the chart
// at infinity, glued by w = 1/x, v = y / x^{g+1}.
std::int64_t oracle_count(const HyperellipticModel& m, unsigned deg) {
  const FieldPtr F = FiniteField::standard_extension(m.field, deg);
  const std::uint64_t q = F->order();
  const auto& f = m.f.coefficients();
  const auto& h = m.h.coefficients();
  std::int64_t n = 0;
  for (Code x = 0; x < q; ++x) {
    const Code fx = horner(F, f, x), hx = horner(F, h, x);
    for (Code y = 0; y < q; ++y)
      if (F->add(F->mul(y, y), F->mul(hx, y)) == fx) ++n;
  }
  if (F->characteristic() == 2) return n + 1;
  // v^2 = w^{2g+2} f(1/w) at w = 0: the coefficient of x^{2g+2} in f.
  const Code c = m.f.coeff(static_cast<std::size_t>(2 * m.genus + 2));
  for (Code v = 0; v < q; ++v)
    if (F->mul(v, v) == c) ++n;
  return n;
}

HyperellipticModel odd_model(std::uint64_t q, std::vector<std::int64_t> f) {
  return HyperellipticModel::odd(FqPoly::from_ints(FiniteField::of_order(q), f));
}

TEST(Curves, PointCountExamples) {
  EXPECT_EQ(count_points(odd_model(3, {0, -1, 0, 1}), 1, Budget()), 4);
  EXPECT_EQ(count_points(odd_model(3, {-1, 0, 0, 0, 1}), 1, Budget()), 4);
  const auto F2 = FiniteField::prime(2);
  const auto as = HyperellipticModel::char2(FqPoly::constant(F2, 1), FqPoly::from_ints(F2, {0, 0, 0, 1}));
  EXPECT_EQ(as.genus, 1);
  EXPECT_EQ(count_points(as, 1, Budget()), 3);
}

TEST(Curves, PointCountsMatchGluingOracle) {
  const std::vector<HyperellipticModel> models = {
      odd_model(3, {0, -1, 0, 1}),
      odd_model(3, {-1, 0, 0, 0, 1}),
      odd_model(5, {1, 1, 0, 0, 0, 1}),
      odd_model(5, {2, 0, 1, 0, 3}),        // leading coefficient 3 is a nonsquare mod 5
      odd_model(7, {1, 2, 0, 3, 0, 0, 1}),
      odd_model(7, {3, 1, 0, 0, 0, 0, 5}),
      odd_model(9, {2, 1, 0, 1}),
      HyperellipticModel::char2(FqPoly::from_ints(FiniteField::prime(2), {0, 1}),
                                FqPoly::from_ints(FiniteField::prime(2), {0, 1, 0, 0, 0, 1})),
      HyperellipticModel::char2(FqPoly::constant(FiniteField::prime(2), 1),
                                FqPoly::from_ints(FiniteField::prime(2), {0, 1, 0, 1, 0, 1})),
      HyperellipticModel::char2(FqPoly::from_ints(FiniteField::of_order(4), {1, 1}),
                                FqPoly::from_ints(FiniteField::of_order(4), {1, 0, 0, 1})),
  };
  for (const auto& m : models)
    for (unsigned deg = 1; deg <= 3; ++deg) {
      if (ipow_u64(m.field->order(), deg) > 800) continue;
      EXPECT_EQ(count_points(m, deg, Budget()), oracle_count(m, deg)) << m.str() << " m=" << deg;
    }
}

TEST(Curves, ModelValidation) {
  EXPECT_THROW(odd_model(5, {1, 0, 0, 0, 0, 1}), PreconditionError);  // (x+1)^5
  EXPECT_THROW(odd_model(5, {1}), PreconditionError);
  EXPECT_THROW(HyperellipticModel::odd(FqPoly::from_ints(FiniteField::prime(2), {1, 1, 0, 1})), PreconditionError);
  const auto F2 = FiniteField::prime(2);
  EXPECT_THROW(HyperellipticModel::char2(FqPoly::x(F2), FqPoly::from_ints(F2, {0, 0, 0, 0, 1})), PreconditionError);
  EXPECT_THROW(HyperellipticModel::char2(FqPoly::constant(F2, 1), FqPoly::constant(F2, 1)),
               PreconditionError);
  EXPECT_EQ(HyperellipticModel::char2(FqPoly::constant(F2, 1), FqPoly::from_ints(F2, {0, 0, 1})).genus, 0);
}

TEST(Curves, BudgetIsEnforcedBeforeCounting) {
  Budget b;
  b.max_enumeration = 100;
  EXPECT_THROW(count_points(odd_model(3, {0, -1, 0, 1}), 5, b), BudgetError);
}

TEST(Zeta, Examples) {
  const auto z1 = zeta_numerator(odd_model(3, {0, -1, 0, 1}), Budget());
  EXPECT_EQ(z1.poly, (IntPoly{1, 0, 3}));
  const auto z2 = zeta_numerator(odd_model(3, {-1, 0, 0, 0, 1}), Budget());
  EXPECT_EQ(z2.poly, (IntPoly{1, 0, 3}));
  EXPECT_EQ(z2.counts, (std::vector<std::int64_t>{4}));
  const auto z0 = zeta_numerator(odd_model(5, {-1, 0, 1}), Budget());
  EXPECT_EQ(z0.genus, 0);
  EXPECT_EQ(z0.poly, (IntPoly{1}));
}

TEST(Zeta, ReexpansionMatchesDirectCounts) {
  const std::vector<HyperellipticModel> models = {
      odd_model(5, {1, 1, 0, 0, 0, 1}), odd_model(7, {1, 2, 0, 3, 0, 0, 1}), odd_model(3, {1, 0, 2, 0, 0, 1}),
      HyperellipticModel::char2(FqPoly::from_ints(FiniteField::prime(2), {0, 1}),
                                FqPoly::from_ints(FiniteField::prime(2), {0, 1, 0, 0, 0, 1}))};
  for (const auto& m : models) {
    const auto z = zeta_numerator(m, Budget());
    EXPECT_TRUE(satisfies_functional_equation(z.poly, z.q, z.genus));
    const unsigned mmax = static_cast<unsigned>(z.genus) + 2;
    const auto predicted = counts_from_zeta(z, mmax);
    for (unsigned k = 1; k <= mmax; ++k)
      EXPECT_EQ(predicted[k - 1], BigInt(oracle_count(m, k))) << m.str() << " m=" << k;
  }
}

TEST(Zeta, FromCountsRejectsInconsistentData) {
  EXPECT_EQ(zeta_from_counts(3, 1, {4}).poly, (IntPoly{1, 0, 3}));
  EXPECT_THROW(zeta_from_counts(3, 1, {20}), InvariantError);  // past the Weil bound
  EXPECT_FALSE(satisfies_functional_equation(IntPoly{1, 1, 5}, 3, 1));
}

TEST(Zeta, SupersingularCurveOverF7) {
  // Exhaustive a_p = 0 search among y^2 = x^3 + a x + b over F_7.
  const auto F = FiniteField::prime(7);
  bool found = false;
  for (int a = 0; a < 7 && !found; ++a)
    for (int b = 0; b < 7 && !found; ++b) {
      const int disc = (4 * a * a * a + 27 * b * b) % 7;
      if (disc == 0) continue;
      std::int64_t affine = 0;
      for (int x = 0; x < 7; ++x)
        for (int y = 0; y < 7; ++y) affine += ((y * y - x * x * x - a * x - b) % 7 + 7) % 7 == 0;
      if (affine + 1 != 8) continue;
      found = true;
      EXPECT_EQ(zeta_numerator(HyperellipticModel::odd(FqPoly::from_ints(F, {b, a, 0, 1})), Budget()).poly,
                (IntPoly{1, 0, 7}));
    }
  EXPECT_TRUE(found);
}

TEST(Kummer, PullbackGenus) {
  const auto F3 = FiniteField::prime(3);
  const FqPoly base = FqPoly::from_ints(F3, {-1, 1});
  const auto c4 = kummer_pullback(base, 4);
  EXPECT_EQ(c4.f, FqPoly::from_ints(F3, {-1, 0, 0, 0, 1}));
  EXPECT_EQ(c4.genus, 1);
  EXPECT_EQ(kummer_pullback(base, 28).genus, 13);
  EXPECT_EQ(kummer_pullback(base, 1).genus, 0);
  EXPECT_EQ(hyperelliptic_genus_riemann_hurwitz(28), 13);
  EXPECT_EQ(hyperelliptic_genus_riemann_hurwitz(5), 2);
}

TEST(Kummer, ArtinSchreierPullbackMatchesOracle) {
  const auto F2 = FiniteField::prime(2);
  const FqPoly base = FqPoly::x(F2);
  for (unsigned d : {3u, 5u, 9u}) {
    const auto m = artin_schreier_pullback(base, d);
    EXPECT_EQ(m.genus, (artin_schreier_reduced_degree(FqPoly::monomial(F2, 1, d)) - 1) / 2);
    const auto z = zeta_numerator(m, Budget());
    const auto predicted = counts_from_zeta(z, static_cast<unsigned>(z.genus) + 1);
    for (unsigned k = 1; k <= static_cast<unsigned>(z.genus) + 1; ++k)
      EXPECT_EQ(predicted[k - 1], BigInt(oracle_count(m, k))) << "d=" << d << " m=" << k;
  }
  EXPECT_EQ(artin_schreier_reduced_degree(FqPoly::monomial(F2, 1, 6)), 3);
  EXPECT_THROW(artin_schreier_pullback(base, 6), PreconditionError);
}

TEST(Weil, Multiplicity) {
  const auto w = WeilPolynomial::from_trace(3, 0);
  EXPECT_EQ(w.poly, (IntPoly{1, 0, 3}));
  ZetaNumerator z;
  z.q = 3;
  z.genus = 3;
  z.poly = (IntPoly{1, 0, 3}) * (IntPoly{1, 0, 3}) * (IntPoly{1, 3, 3});
  EXPECT_EQ(weil_multiplicity(z, w), 2);
  z.genus = 1;
  z.poly = IntPoly{1, 0, 3};
  EXPECT_EQ(weil_multiplicity(z, w), 1);
  z.poly = IntPoly{1, 1, 3};
  EXPECT_EQ(weil_multiplicity(z, w), 0);
  EXPECT_EQ(WeilPolynomial::from_trace(3, 3).poly, (IntPoly{1, -3, 3}));
  EXPECT_THROW(WeilPolynomial::from_trace(5, 2), PreconditionError);
}

TEST(Twist, DeskScale) {
  const auto F3 = FiniteField::prime(3);
  const auto r = twist_rank(0, 3, FqPoly::from_ints(F3, {-1, 1}), 1, Budget());
  EXPECT_EQ(r.d, 4u);
  EXPECT_EQ(r.zeta.poly, (IntPoly{1, 0, 3}));
  EXPECT_EQ(r.multiplicity, 1);
  EXPECT_EQ(r.rank, 2);
  EXPECT_THROW(twist_rank(0, 3, FqPoly::from_ints(F3, {-1, 1}), 2, Budget()), PreconditionError);
  EXPECT_THROW(check_twist_selection(3, 3, 1), PreconditionError);
  EXPECT_NO_THROW(check_twist_selection(3, 3, 3));
  EXPECT_NO_THROW(check_twist_selection(2, 2, 2));
  EXPECT_THROW(twist_rank(0, 3, FqPoly::from_ints(FiniteField::prime(5), {-1, 1}), 1, Budget()), PreconditionError);
}

TEST(Bivariate, Examples) {
  const auto F7 = FiniteField::prime(7);
  EXPECT_EQ(count_bivariate_zeros(F7, {{1, 1, 0}, {F7->neg(1), 0, 1}}, Budget()), 7u);

  // Value multiset of x^4 + x^3: pairs with equal values.
  for (std::uint64_t q : {5ull, 25ull}) {
    const auto F = FiniteField::of_order(q);
    std::map<Code, std::uint64_t> values;
    for (Code x = 0; x < q; ++x) ++values[F->add(F->pow(x, 4), F->pow(x, 3))];
    std::uint64_t pairs = 0;
    for (auto& [v, c] : values) pairs += c * c;
    const auto got = count_bivariate_zeros(F, case1_pair_polynomial(F, 1), Budget());
    EXPECT_EQ(got, pairs);
    if (q == 5) EXPECT_EQ(got, 7u);
    EXPECT_LE(std::abs(static_cast<double>(got) - 2.0 * static_cast<double>(q)), 18.0 * std::sqrt(double(q)));
  }
}

}  // namespace
}  // namespace towerlab
