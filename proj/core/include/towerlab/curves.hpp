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


#ifndef TOWERLAB_CURVES_HPP
#define TOWERLAB_CURVES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "towerlab/fq_poly.hpp"
#include "towerlab/polynomial.hpp"

namespace towerlab {

/**
 * Smooth proper hyperelliptic curve. Odd characteristic: y^2 = f(x), f
 * squarefree. Characteristic 2: y^2 + h(x) y = f(x), either with
 * deg f = 2g + 1 and deg h <= g, or with h = 1 (Artin-Schreier form, where
 * the degree of f after removing even-degree leading terms is 2g + 1).
 */
struct HyperellipticModel {
  FieldPtr field;
  FqPoly f;
  FqPoly h;  // zero in odd characteristic
  int genus = 0;

  static HyperellipticModel odd(FqPoly f);
  static HyperellipticModel char2(FqPoly h, FqPoly f);

  bool artin_schreier() const { return field->characteristic() == 2 && h.degree() == 0; }
  std::string str() const;
};

/// Points over F_{q^m}; requires q^m within the enumeration budget.
std::int64_t count_points(const HyperellipticModel& model, unsigned m, const Budget& budget, unsigned threads = 1);

struct ZetaNumerator {
  IntPoly poly;  // P(T), degree 2g
  std::uint64_t q = 0;
  int genus = 0;
  std::vector<std::int64_t> counts;  // N_1..N_g
};

/// P(T) from N_1..N_g by Newton's identities and the functional equation.
ZetaNumerator zeta_numerator(const HyperellipticModel& model, const Budget& budget, unsigned threads = 1);

/// Assembles P from counts and checks the Weil bound, the functional equation and P(1) > 0.
ZetaNumerator zeta_from_counts(std::uint64_t q, int genus, const std::vector<std::int64_t>& counts);

/// N_m predicted by P for m = 1..m_max.
std::vector<BigInt> counts_from_zeta(const ZetaNumerator& z, unsigned m_max);

/// P(T) == q^g T^{2g} P(1/(qT)).
bool satisfies_functional_equation(const IntPoly& p, std::uint64_t q, int genus);

/// y^2 = base_f(t^d) over the field of base_f (odd characteristic).
HyperellipticModel kummer_pullback(const FqPoly& base_f, unsigned d);

/// y^2 + y = base_f(t^d) over a field of characteristic 2.
HyperellipticModel artin_schreier_pullback(const FqPoly& base_f, unsigned d);

/// Genus from the ramification of y^2 = F with F squarefree of the given degree.
int hyperelliptic_genus_riemann_hurwitz(int degree);

/// Degree of f after the substitutions y -> y + c t^k that remove even-degree
/// leading terms (characteristic 2 Artin-Schreier reduction).
int artin_schreier_reduced_degree(const FqPoly& f);

struct WeilPolynomial {
  IntPoly poly;  // 1 - a T + p T^2
  std::uint32_t p = 0;
  std::string label;

  /// Supersingular traces only: a = 0, or a = +-3 for p = 3, or a = +-2 for p = 2.
  static WeilPolynomial from_trace(std::uint32_t p, int a);
};

/// Largest m with w^m dividing the zeta numerator.
int weil_multiplicity(const ZetaNumerator& zeta, const WeilPolynomial& w);

struct TwistRankResult {
  std::uint64_t d = 0;
  HyperellipticModel model;
  ZetaNumerator zeta;
  WeilPolynomial weil;
  int multiplicity = 0;
  int rank = 0;
};

/// Rejects parameters outside the selection rules: (a_p = 0, n odd),
/// (p = 3, a_p = +-3, n = 3 mod 6), (p = 2, a_p = +-2, n = 2 mod 4).
void check_twist_selection(std::uint32_t p, int a_p, unsigned n);

/// 2 * multiplicity of 1 - a_p T + p T^2 in the zeta numerator of the pullback by d = p^n + 1.
TwistRankResult twist_rank(int a_p, std::uint32_t p, const FqPoly& base_f, unsigned n, const Budget& budget,
                           unsigned threads = 1);

struct BivariateTerm {
  FiniteField::Code c;
  unsigned i;  // exponent of x
  unsigned j;  // exponent of x'
};
using BivariatePoly = std::vector<BivariateTerm>;

/// #{(x, x') in F_q^2 : g(x, x') = 0}.
std::uint64_t count_bivariate_zeros(const FieldPtr& field, const BivariatePoly& g, const Budget& budget);

/// x^{2g+2} + x^{2g+1} - x'^{2g+2} - x'^{2g+1}.
BivariatePoly case1_pair_polynomial(const FieldPtr& field, unsigned g);

}  // namespace towerlab

#endif  // TOWERLAB_CURVES_HPP
