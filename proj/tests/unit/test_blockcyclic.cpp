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

#include <numeric>

#include "towerlab/block_cyclic.hpp"

namespace towerlab {
namespace {

// det(1 - T M) by Faddeev-LeVerrier: c_n = 1, M_k = A M_{k-1} + c_{n-k+1} I,
// c_{n-k} = -tr(A M_k) / k. The coefficient of T^j is c_{n-j}.
RatPoly leverrier(const RatMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  RatMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m + RatMatrix::identity(n).scaled(c[n - k + 1]);
    const RatMatrix am = a * m;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / Rational(static_cast<long>(k));
  }
  std::vector<Rational> r(n + 1);
  for (std::size_t j = 0; j <= n; ++j) r[j] = c[n - j];
  return RatPoly(r);
}

// Laplace expansion of det(I - T M) along the first row, entries in Q[T].
RatPoly cofactor_det(const std::vector<std::vector<RatPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return RatPoly{Rational(1)};
  RatPoly acc;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<RatPoly>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<RatPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    const RatPoly term = m[0][j] * cofactor_det(minor);
    acc = j % 2 == 0 ? acc + term : acc - term;
  }
  return acc;
}

RatPoly cofactor_char_poly(const RatMatrix& a) {
  std::vector<std::vector<RatPoly>> m(a.rows(), std::vector<RatPoly>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = RatPoly{Rational(i == j ? 1 : 0), -a(i, j)};
  return cofactor_det(m);
}

// Remainder of schoolbook division by a polynomial with unit constant term,
// done from the top coefficient down.
bool oracle_divides(RatPoly a, const RatPoly& b) {
  while (!a.is_zero() && a.degree() >= b.degree()) {
    const Rational c = a.leading() / b.leading();
    a -= RatPoly::monomial(c, static_cast<std::size_t>(a.degree() - b.degree())) * b;
  }
  return a.is_zero();
}

RatPoly one_minus(Rational c, std::size_t k) {
  RatPoly p = RatPoly::monomial(-c, k);
  p += RatPoly{Rational(1)};
  return p;
}

bool form_invariant(const BlockCyclicOperator& op) { return op.phi.transpose() * op.gram * op.phi == op.gram; }

RatMatrix mat(std::size_t r, std::size_t c, std::vector<long> v) {
  RatMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = v[i * c + j];
  return m;
}

BlockCyclicOperator forced(int epsilon) {
  RatMatrix g(2, 2);
  g(0, 1) = 1;
  g(1, 0) = epsilon;
  return make_block_cyclic({1, 1}, {mat(1, 1, {1}), mat(1, 1, {epsilon})}, g, epsilon);
}

TEST(BlockCyclic, LambdaInstance) {
  const Rational lambda(7, 3);
  RatMatrix p(1, 1);
  p(0, 0) = lambda;
  const auto op = make_block_cyclic({1, 1}, {mat(1, 1, {1}), p}, RatMatrix(), 1);
  EXPECT_EQ(char_poly(op), one_minus(lambda, 2));
  EXPECT_TRUE(verify_cyclic_identity(op));
}

TEST(BlockCyclic, IdentityOnOneBlock) {
  const auto op = make_block_cyclic({2}, {RatMatrix::identity(2)}, RatMatrix::identity(2), 1);
  EXPECT_EQ(char_poly(op), (RatPoly{1, -2, 1}));
}

TEST(BlockCyclic, NilpotentWithEmptyW0) {
  const auto op = make_block_cyclic({0, 2}, {RatMatrix(2, 0), RatMatrix(0, 2)}, RatMatrix(), 1);
  EXPECT_EQ(char_poly(op), (RatPoly{1}));
  EXPECT_TRUE(verify_cyclic_identity(op));
}

TEST(BlockCyclic, ThreeBlocksUnequalDims) {
  const auto op = make_block_cyclic({2, 3, 2},
                                    {mat(3, 2, {1, 2, -1, 0, 3, 1}), mat(2, 3, {0, 1, 4, 2, -2, 1}),
                                     mat(2, 2, {5, -1, 1, 1})},
                                    RatMatrix(), 1);
  EXPECT_EQ(char_poly(op), cofactor_char_poly(op.phi));
  EXPECT_TRUE(verify_cyclic_identity(op));
}

TEST(BlockCyclic, CharPolyMatchesCofactorOracle) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const auto op = build_instance(2, 3, seed % 2 ? 1 : -1, seed);
    ASSERT_EQ(op.dim(), 6u);
    EXPECT_EQ(char_poly(op), cofactor_char_poly(op.phi)) << seed;
  }
}

TEST(BlockCyclic, CharPolyMatchesLeverrierOracle) {
  for (int a : {2, 4, 6})
    for (std::size_t n : {1u, 3u, 5u}) {
      const auto op = build_instance(a, n, -1, 11 * n + static_cast<std::uint64_t>(a));
      EXPECT_EQ(char_poly(op), leverrier(op.phi)) << "a=" << a << " n=" << n;
    }
}

TEST(BlockCyclic, ForcedInstances) {
  for (int eps : {-1, 1}) {
    const auto op = forced(eps);
    EXPECT_TRUE(form_invariant(op));
    EXPECT_EQ(char_poly(op), one_minus(Rational(eps), 2));
    const auto rep = verify_prop_la(op);
    EXPECT_TRUE(rep.divides);
    ASSERT_TRUE(rep.quotient);
    EXPECT_EQ(*rep.quotient, (RatPoly{1}));
    EXPECT_EQ(verify_eigen_and_det_lemmas(op), std::make_pair(true, true));
  }
}

TEST(BlockCyclic, BuiltInstanceWithSmallestShape) {
  // Invariance forces phi^2 | W_0 = epsilon when N = 1.
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto minus = build_instance(2, 1, -1, seed);
    const RatPoly cp = char_poly(minus);
    ASSERT_EQ(cp.degree(), 2);
    EXPECT_EQ(cp.coeff(1), 0);
    EXPECT_GT(cp.coeff(2), 0);
    EXPECT_TRUE(oracle_divides(char_poly(build_instance(2, 1, 1, seed)), one_minus(1, 2)));
  }
}

TEST(BlockCyclic, SeededInstancesSatisfyEverything) {
  for (int eps : {-1, 1}) {
    const auto op = build_instance(4, 3, eps, 7);
    EXPECT_FALSE(prop_la_failure(op));
    EXPECT_TRUE(form_invariant(op));
    EXPECT_EQ(op.gram.transpose(), op.gram.scaled(Rational(eps)));
    EXPECT_TRUE(verify_cyclic_identity(op));
    EXPECT_TRUE(verify_prop_la(op).divides);
    EXPECT_TRUE(oracle_divides(leverrier(op.phi), one_minus(Rational(eps), 4)));
    EXPECT_EQ(verify_eigen_and_det_lemmas(op), std::make_pair(true, true));
    EXPECT_TRUE(verify_asymmetry(op));
  }
}

TEST(BlockCyclic, Deterministic) {
  EXPECT_EQ(build_instance(4, 3, 1, 42).phi, build_instance(4, 3, 1, 42).phi);
  EXPECT_NE(build_instance(4, 3, 1, 42).phi, build_instance(4, 3, 1, 43).phi);
}

TEST(BlockCyclic, EvenNCounterexample) {
  const auto found = find_even_n_counterexample(2, 2, 1, 0, 100);
  ASSERT_TRUE(found);
  const auto& op = found->second;
  EXPECT_TRUE(form_invariant(op));
  EXPECT_FALSE(oracle_divides(leverrier(op.phi), one_minus(1, 2)));
  EXPECT_EQ(prop_la_failure(op), std::optional<std::string>("N is odd"));
  EXPECT_THROW(find_even_n_counterexample(2, 3, 1, 0, 1), PreconditionError);
}

TEST(BlockCyclic, HypothesisErrorNamesTheHypothesis) {
  auto op = build_instance(2, 3, 1, 3);
  op.gram(0, op.offset(1)) += 1;
  try {
    (void)verify_prop_la(op);
    FAIL() << "expected HypothesisError";
  } catch (const HypothesisError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("hypotheses not met: ", 0), 0u);
    EXPECT_FALSE(e.hypothesis().empty());
  }
  EXPECT_THROW(build_instance(3, 3, 1, 0), PreconditionError);
  EXPECT_THROW(build_instance(2, 2, 1, 0), PreconditionError);
}

TEST(BlockCyclicVariant, MinusOneOnALine) {
  const auto op = make_block_cyclic({1}, {mat(1, 1, {-1})}, mat(1, 1, {1}), -1);
  const auto rep = verify_la_variant(op);
  EXPECT_EQ(rep.predicted_factor, (RatPoly{1, 1}));
  EXPECT_TRUE(rep.divides);
}

TEST(BlockCyclicVariant, Reflection) {
  const auto op = make_block_cyclic({2}, {mat(2, 2, {1, 0, 0, -1})}, RatMatrix::identity(2), 1);
  const auto rep = verify_la_variant(op);
  EXPECT_EQ(rep.charpoly, (RatPoly{1, -1}) * (RatPoly{1, 1}));
  EXPECT_EQ(rep.predicted_factor, (RatPoly{1, 0, -1}));
  EXPECT_TRUE(rep.divides);
}

TEST(BlockCyclicVariant, SeededInstances) {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const auto even = build_la_variant_instance(2, 2, -1, seed);
    EXPECT_TRUE(form_invariant(even));
    EXPECT_TRUE(verify_la_variant(even).divides);
    EXPECT_TRUE(oracle_divides(leverrier(even.phi), one_minus(1, 4)));
    for (int det : {-1, 1}) {
      const auto odd = build_la_variant_instance(3, 3, det, seed);
      EXPECT_TRUE(oracle_divides(leverrier(odd.phi), one_minus(Rational(det), 3)));
      EXPECT_TRUE(verify_la_variant(odd).divides);
    }
  }
  EXPECT_THROW(build_la_variant_instance(2, 2, 0, 0), PreconditionError);
}

}  // namespace
}  // namespace towerlab
