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
#include <cstdio>
#include <numeric>

#include "towerlab/families.hpp"
#include "towerlab/lfunction.hpp"
#include "towerlab/shioda.hpp"
#include "towerlab/towers.hpp"

namespace towerlab {
namespace {

using Code = FiniteField::Code;

FieldPtr F5() { return FiniteField::prime(5); }
FqPoly P(std::vector<std::int64_t> c) { return FqPoly::from_ints(F5(), c); }

WeierstrassModel legendre() { return WeierstrassModel::make(P({-1, -1}), P({0, 1}), FqPoly(F5())); }

WeierstrassModel e_d(std::uint64_t d) {
  return quartic_to_weierstrass({FqPoly::monomial(F5(), 1, d), FqPoly(F5()), FqPoly(F5()), P({1}), P({1})});
}

Code horner(const FieldPtr& F, const std::vector<Code>& c, Code x) {
  Code acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = F->add(F->mul(acc, x), c[i]);
  return acc;
}

// Affine pairs of y^2 = g(x), plus the chart at infinity of a quartic.
std::int64_t pair_count(const FieldPtr& F, const std::vector<Code>& g) {
  std::int64_t n = 0;
  for (Code x = 0; x < F->order(); ++x) {
    const Code v = horner(F, g, x);
    for (Code y = 0; y < F->order(); ++y) n += F->mul(y, y) == v;
  }
  if (g.size() == 5)
    for (Code y = 0; y < F->order(); ++y) n += F->mul(y, y) == g[4];
  return n;
}

std::int64_t weierstrass_fiber_count(const WeierstrassModel& m, const FieldPtr& F, Code t) {
  auto at = [&](const FqPoly& f) { return horner(F, f.coefficients(), t); };
  return pair_count(F, {at(m.a6), at(m.a4), at(m.a2), 1}) + 1;
}

// Power series of prod_v factor_v^{-1} mod T^{D+1}.
IntPoly euler_oracle(const WeierstrassModel& m, int D) {
  std::vector<BigInt> s(static_cast<std::size_t>(D) + 1, 0);
  s[0] = 1;
  for (const auto& v : places_up_to(m.field, D, Budget())) {
    const IntPoly f = local_data(m, v, Budget()).poly;
    // s <- s / f, term by term.
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = 1; j <= i && j < f.coefficients().size(); ++j) s[i] -= f.coeff(j) * s[i - j];
  }
  return IntPoly(s);
}

// Rational Gauss-Jordan inverse; delta is the lcm of the denominators.
std::optional<BigInt> delta_oracle(const std::vector<Monomial>& ms) {
  std::vector<std::vector<Rational>> a(4, std::vector<Rational>(8, Rational(0)));
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& m = ms[i];
    a[i][0] = 1 - static_cast<long>(m.u + m.x + m.y);
    a[i][1] = m.u;
    a[i][2] = m.x;
    a[i][3] = m.y;
    a[i][4 + i] = 1;
  }
  for (std::size_t c = 0; c < 4; ++c) {
    std::size_t piv = c;
    while (piv < 4 && a[piv][c] == 0) ++piv;
    if (piv == 4) return std::nullopt;
    std::swap(a[c], a[piv]);
    const Rational inv = 1 / a[c][c];
    for (auto& v : a[c]) v *= inv;
    for (std::size_t r = 0; r < 4; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (std::size_t k = 0; k < 8; ++k) a[r][k] -= f * a[c][k];
    }
  }
  BigInt l = 1;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t k = 4; k < 8; ++k) l = boost::multiprecision::lcm(l, denominator(a[r][k]));
  return l;
}

TEST(Weierstrass, DiscriminantIdentity) {
  for (const auto& m : {legendre(), e_d(1), e_d(6), WeierstrassModel::make(P({0}), P({1, 0, 2}), P({3, 1}))})
    EXPECT_EQ(m.c4 * m.c4 * m.c4 - m.c6 * m.c6, m.delta.scaled(F5()->from_int(1728)));
}

TEST(LocalData, LegendreExamples) {
  const auto at0 = local_data(legendre(), Place::finite(P({0, 1})), Budget());
  EXPECT_EQ(at0.reduction, Reduction::kSplitMultiplicative);
  EXPECT_EQ(at0.a_v, 1);
  EXPECT_EQ(at0.poly, (IntPoly{1, -1}));
  EXPECT_EQ(at0.cond_exponent, 1);
  const auto at3 = local_data(legendre(), Place::finite(P({-3, 1})), Budget());
  EXPECT_EQ(at3.reduction, Reduction::kGood);
  EXPECT_EQ(at3.a_v, 2);
  EXPECT_EQ(at3.poly, (IntPoly{1, -2, 5}));
  EXPECT_EQ(pair_count(F5(), {0, 3, F5()->from_int(-4), 1}) + 1, 4);
}

TEST(LocalData, AdditiveCusp) {
  const auto m = WeierstrassModel::make(FqPoly(F5()), FqPoly(F5()), P({0, -1}));
  const auto lf = local_data(m, Place::finite(P({0, 1})), Budget());
  EXPECT_EQ(lf.reduction, Reduction::kAdditive);
  EXPECT_EQ(lf.a_v, 0);
  EXPECT_EQ(lf.poly, (IntPoly{1}));
  EXPECT_EQ(lf.cond_exponent, 2);
  EXPECT_TRUE(m.isotrivial());
  EXPECT_EQ(conductor(WeierstrassModel::make(FqPoly(F5()), FqPoly(F5()), P({0, 1})), Budget()).degree, 4);
  EXPECT_THROW(l_function(m, Budget()), PreconditionError);
}

TEST(LocalData, GoodFibresMatchBruteForce) {
  for (const auto& m : {legendre(), e_d(1), e_d(6), e_d(2)})
    for (Code c = 0; c < 5; ++c) {
      const auto lf = local_data(m, Place::finite(P({-static_cast<std::int64_t>(c), 1})), Budget());
      if (lf.reduction != Reduction::kGood) continue;
      EXPECT_EQ(lf.a_v, 6 - weierstrass_fiber_count(m, F5(), c)) << m.str() << " t=" << c;
      EXPECT_LE(lf.a_v * lf.a_v, 20);
    }
}

TEST(Quartic, FibreCountsAgreeWithJacobian) {
  EXPECT_EQ(count_quartic(F5(), {1, 0, 0, 1, 1}), 9);
  EXPECT_EQ(pair_count(F5(), {1, 0, 0, 1, 1}), 9);
  const auto m = e_d(6);
  EXPECT_EQ(local_data(m, Place::finite(P({-1, 1})), Budget()).a_v, -3);
  int compared = 0;
  for (int deg = 1; deg <= 3; ++deg) {
    for_each_monic_irreducible(F5(), deg, [&](const FqPoly& pi) {
      const Place v = Place::finite(pi);
      const auto lf = local_data(m, v, Budget());
      if (lf.reduction != Reduction::kGood) return;
      const FieldPtr R = residue_field(v);
      std::vector<Code> g(5);
      g[0] = reduce(FqPoly::monomial(F5(), 1, 6), v, R);
      g[3] = g[4] = 1;
      const FqPoly gp(R, g);
      if (!gcd(gp, gp.derivative()).is_one()) return;
      EXPECT_EQ(static_cast<std::int64_t>(R->order()) + 1 - lf.a_v, pair_count(R, g)) << pi.str();
      EXPECT_EQ(count_quartic(R, g), pair_count(R, g));
      ++compared;
    }, Budget());
  }
  EXPECT_GT(compared, 40);
  EXPECT_TRUE(quartic_to_weierstrass({P({-1}), FqPoly(F5()), FqPoly(F5()), FqPoly(F5()), P({1})}).isotrivial());
  EXPECT_THROW(quartic_to_weierstrass({P({1}), P({1}), P({0}), P({0}), P({2})}), PreconditionError);
}

TEST(LFunction, NullCase) {
  const auto l = l_function(legendre(), Budget());
  EXPECT_EQ(l.poly, (IntPoly{1}));
  EXPECT_EQ(l.degree, 0);
  EXPECT_EQ(l.conductor_degree, 4);
  EXPECT_EQ(l.conductor, (std::vector<std::pair<std::string, int>>{{"0,1", 1}, {"4,1", 1}, {"inf", 2}}));
  EXPECT_EQ(euler_oracle(legendre(), 0), l.poly);
}

TEST(LFunction, BaseFamilyMember) {
  const auto l = l_function(e_d(1), Budget());
  EXPECT_EQ(l.poly, (IntPoly{1, -5}));
  EXPECT_EQ(l.sign, -1);
  EXPECT_EQ(l.degree, l.conductor_degree - 4);
  EXPECT_EQ(euler_oracle(e_d(1), 1), l.poly);
  bool has_critical = false;
  for (const auto& [place, e] : l.conductor) has_critical |= place == "3,1" && e == 1;
  EXPECT_TRUE(has_critical);
}

TEST(LFunction, FirstCoefficientIsSumOfTraces) {
  for (const auto& m : {legendre(), e_d(1), e_d(2), e_d(6)}) {
    const auto l = l_function(m, Budget());
    std::int64_t sum = 0;
    for (const auto& v : places_up_to(F5(), 1, Budget())) sum += local_data(m, v, Budget()).a_v;
    EXPECT_EQ(l.poly.coeff(1), BigInt(sum)) << m.str();
    EXPECT_EQ(euler_oracle(m, l.degree), l.poly) << m.str();
  }
}

TEST(LFunction, KummerLevelSix) {
  const auto l = l_function(e_d(6), Budget());
  EXPECT_EQ(l.poly, (IntPoly{1, -10, 0, 250, -625}));
  EXPECT_EQ(l.poly, (IntPoly{1, 0, -25}) * (IntPoly{1, -5}) * (IntPoly{1, -5}));
  EXPECT_EQ(l.sign, -1);
  EXPECT_EQ(analytic_rank(l), 3);
  EXPECT_EQ(l.conductor_degree, 8);
}

TEST(LFunction, TruncationIsSound) {
  for (const auto& m : {e_d(1), e_d(2), e_d(6)}) {
    LFunctionOptions more;
    more.extra_degree = 1;
    EXPECT_EQ(l_function(m, Budget(), more).poly, l_function(m, Budget()).poly);
  }
}

TEST(LFunction, FunctionalEquationExamples) {
  EXPECT_EQ(functional_equation_check(IntPoly{1, 5}, 5, 1, 1), 1);
  EXPECT_EQ(functional_equation_check(IntPoly{1, -5}, 5, 1, 1), -1);
  EXPECT_EQ(functional_equation_check(IntPoly{1}, 5, 1, 0), 1);
  EXPECT_THROW(functional_equation_check(IntPoly{1, 3}, 5, 1, 1), InvariantError);
}

TEST(LFunction, AnalyticRankExamples) {
  EXPECT_EQ(analytic_rank(IntPoly{1, -5} * IntPoly{1, -5} * IntPoly{1, 5}, 5, 1), 2);
  EXPECT_EQ(analytic_rank(IntPoly{1}, 5, 1), 0);
  EXPECT_THROW(analytic_rank(IntPoly{1, 0, 3}, 3, 0), PreconditionError);
}

TEST(LFunction, BaseChangeExamples) {
  EXPECT_EQ(base_change(IntPoly{1, 0, 3}, 2), (IntPoly{1, 6, 9}));
  EXPECT_EQ(base_change(IntPoly{1, -5}, 3), (IntPoly{1, -125}));
  const IntPoly e6{1, -10, 0, 250, -625};
  EXPECT_EQ(base_change(e6, 1), e6);
  // (1-25T^2)(1-5T)^2 -> (1-25T)^2 (1-25T)^2 over F_25.
  EXPECT_EQ(base_change(e6, 2), (IntPoly{1, -25}) * (IntPoly{1, -25}) * (IntPoly{1, -25}) * (IntPoly{1, -25}));
}

TEST(LFunction, DivisibilityExamples) {
  const auto a = divisibility_check(IntPoly{1}, IntPoly{1});
  EXPECT_TRUE(a.divides);
  EXPECT_EQ(a.quotient, (IntPoly{1}));
  EXPECT_FALSE(divisibility_check(IntPoly{1, -5}, IntPoly{1, 5}).divides);
  const auto b = divisibility_check(IntPoly{1, -10, 0, 250, -625}, IntPoly{1, 0, -25});
  EXPECT_TRUE(b.divides);
  EXPECT_EQ(b.quotient, (IntPoly{1, -10, 25}));
}

TEST(RankBounds, Examples) {
  const auto r = rank_bounds(6, 5);
  EXPECT_EQ(r.geometric, 6);
  ASSERT_TRUE(r.brumer_defined);
  char want[32];
  std::snprintf(want, sizeof want, "%.4f", 6.0 / (2.0 * std::log(6.0) / std::log(5.0)));
  EXPECT_EQ(r.brumer_decimal, want);
  EXPECT_EQ(r.brumer_decimal, "2.6947");
  const auto u = rank_bounds(1, 2);
  EXPECT_EQ(u.geometric, 1);
  EXPECT_FALSE(u.brumer_defined);
  EXPECT_FALSE(rank_bounds(0, 5).brumer_defined);
}

TEST(Shioda, FamilyExponentMatrices) {
  for (unsigned g = 1; g <= 3; ++g) {
    const auto c1 = shioda_check(family_monomials(1, g), 5);
    EXPECT_EQ(abs(c1.det), BigInt(2));
    ASSERT_TRUE(c1.delta);
    EXPECT_EQ(*c1.delta, BigInt(2));
    EXPECT_EQ(*c1.delta, *delta_oracle(family_monomials(1, g)));
    EXPECT_TRUE(c1.passes);
    const auto c4 = shioda_check(family_monomials(4, g), 2);
    ASSERT_TRUE(c4.delta);
    EXPECT_EQ(*c4.delta, *delta_oracle(family_monomials(4, g)));
    EXPECT_EQ(*c4.delta, BigInt(2 * g - 1));
    EXPECT_TRUE(c4.passes);
    for (int c : {2, 3})
      EXPECT_EQ(*shioda_check(family_monomials(c, g), 3).delta, *delta_oracle(family_monomials(c, g)));
  }
}

TEST(Shioda, DegenerateAndMalformed) {
  const auto ms = parse_monomials("1:0,0,2;1:0,3,0;1:0,1,0;1:0,0,1");
  const auto d = shioda_check(ms, 5);
  EXPECT_EQ(d.det, 0);
  EXPECT_FALSE(d.passes);
  EXPECT_EQ(d.failure, "det A = 0");
  EXPECT_FALSE(delta_oracle(ms));
  EXPECT_THROW(shioda_check(parse_monomials("1:0,0,2;1:0,3,0;1:1,0,0"), 5), PreconditionError);
  EXPECT_THROW(parse_monomials("1:0,0"), PreconditionError);
  const auto rt = parse_monomials(format_monomials(family_monomials(4, 2)));
  EXPECT_EQ(format_monomials(rt), format_monomials(family_monomials(4, 2)));
  EXPECT_FALSE(shioda_check(family_monomials(1, 1), 2).passes);  // p | delta
}

TEST(Families, Models) {
  const auto m1 = family_model(1, 1, 5, 6);
  EXPECT_EQ(m1.equation, "y^2 = x^4 + x^3 + t^6");
  EXPECT_EQ(m1.weight, 1);
  EXPECT_EQ(m1.sign_rho, -1);
  EXPECT_TRUE(m1.everywhere_tame);
  EXPECT_EQ(m1.conductor.swan_zero, 0);
  EXPECT_EQ(m1.conductor.swan_infinity, 0);
  EXPECT_EQ(m1.conductor.deg_n_prime, 1);
  EXPECT_EQ(m1.critical_value, std::optional<std::uint32_t>(2));
  ASSERT_TRUE(m1.weierstrass);
  EXPECT_EQ(m1.weierstrass->delta, e_d(6).delta);

  const auto m4 = family_model(4, 2, 2, 3);
  EXPECT_EQ(m4.equation, "y^2 + x*y = x^5 + t^3*x");
  EXPECT_EQ(m4.conductor.swan_infinity, 3);
  EXPECT_FALSE(m4.everywhere_tame);
  EXPECT_FALSE(m4.weierstrass);

  EXPECT_THROW(family_model(1, 1, 3, 2), PreconditionError);
  EXPECT_THROW(family_model(2, 1, 5, 2), PreconditionError);
  EXPECT_THROW(family_model(2, 1, 2, 1), PreconditionError);
  EXPECT_NO_THROW(family_model(2, 2, 3, 1));
  EXPECT_NO_THROW(family_model(3, 1, 3, 2));
  EXPECT_THROW(family_model(1, 1, 5, 5), PreconditionError);
}

TEST(Families, CriticalValueIsABadPlace) {
  // The closed-form critical value shows up in the conductor of the d = 1 member.
  for (std::uint32_t p : {5u, 7u, 11u}) {
    const auto m = family_model(1, 1, p, 1);
    ASSERT_TRUE(m.critical_value && m.weierstrass);
    const auto F = FiniteField::prime(p);
    const Place v = Place::finite(FqPoly(F, {F->neg(*m.critical_value), 1}));
    EXPECT_EQ(local_data(*m.weierstrass, v, Budget()).cond_exponent, 1) << p;
  }
}

TEST(Towers, KummerLevelSix) {
  const auto t = verify_towers(1, 1, 5, 1, Budget());
  EXPECT_EQ(t.d, 6u);
  EXPECT_EQ(t.l.poly, (IntPoly{1, -10, 0, 250, -625}));
  EXPECT_TRUE(t.gos_consistent);
  EXPECT_EQ(t.rank, 3);
  ASSERT_EQ(t.verdicts.size(), 2u);
  auto verdict = [&](std::vector<std::uint64_t> elems) {
    for (const auto& v : t.verdicts)
      if (v.orbit.elements == elems) return v;
    ADD_FAILURE() << "orbit missing";
    return OrbitVerdict{};
  };
  EXPECT_FALSE(verdict({1, 5}).good);
  EXPECT_EQ(verdict({1, 5}).character_order, 6u);
  EXPECT_TRUE(verdict({2, 4}).good);
  EXPECT_EQ(verdict({2, 4}).character_order, 3u);
  EXPECT_EQ(verdict({2, 4}).method, "primitive-part");
  EXPECT_EQ(t.good_product, (IntPoly{1, 0, -25}));
  EXPECT_TRUE(t.cumulative.divides);
  EXPECT_EQ(t.good_size_sum, 2);
  EXPECT_GE(t.extended_rank, t.good_size_sum);
  EXPECT_EQ(t.extended_rank, analytic_rank(base_change(t.l, 2)));
  EXPECT_TRUE(t.center_bound_holds);
  EXPECT_TRUE(t.extended_bound_holds);
  EXPECT_THROW(verify_towers(4, 1, 2, 1, Budget()), PreconditionError);
}

}  // namespace
}  // namespace towerlab
