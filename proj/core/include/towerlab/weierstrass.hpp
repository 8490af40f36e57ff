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


#ifndef TOWERLAB_WEIERSTRASS_HPP
#define TOWERLAB_WEIERSTRASS_HPP

#include <string>
#include <vector>

#include "towerlab/places.hpp"
#include "towerlab/polynomial.hpp"

namespace towerlab {

/// y^2 = x^3 + a2 x^2 + a4 x + a6 over F_q(t), characteristic >= 5.
struct WeierstrassModel {
  FieldPtr field;
  FqPoly a2, a4, a6;
  FqPoly c4, c6, delta;

  static WeierstrassModel make(FqPoly a2, FqPoly a4, FqPoly a6);

  /// j constant: c4 = 0 or c4^3 proportional to delta.
  bool isotrivial() const;
  std::string str() const;
};

enum class Reduction { kGood, kSplitMultiplicative, kNonsplitMultiplicative, kAdditive };

std::string to_string(Reduction r);

struct LocalFactor {
  Place place;
  Reduction reduction = Reduction::kGood;
  std::int64_t a_v = 0;
  IntPoly poly;  // Euler factor in T
  int cond_exponent = 0;
};

/// Short model y^2 = x^3 + A x + B with A = -27 c4, B = -54 c6, minimal at the
/// place, written in the local coordinate (t for finite places, s = 1/t at infinity).
struct LocalMinimalModel {
  FqPoly a, b;  // minimal A, B in the local coordinate
  int v_a = 0, v_b = 0, v_delta = 0;  // valuations after minimalization (-1 for zero A or B)
  Place local_place;  // the place in the local coordinate (s at infinity)
};

LocalMinimalModel minimal_model(const WeierstrassModel& model, const Place& place);

/// 0 (good), 1 (multiplicative) or 2 (additive), from valuations alone.
int conductor_exponent(const LocalMinimalModel& m);

/// Euler factor at a place; requires characteristic >= 5.
LocalFactor local_data(const WeierstrassModel& model, const Place& place, const Budget& budget);

struct Conductor {
  std::vector<std::pair<Place, int>> divisor;  // finite places in code order, then infinity
  int degree = 0;
};

Conductor conductor(const WeierstrassModel& model, const Budget& budget);

/// Points on the projective cubic y^2 = x^3 + A x + B over a finite field (singular allowed).
std::int64_t count_cubic(const FieldPtr& field, FiniteField::Code a, FiniteField::Code b);

/// Jacobian of y^2 = c4 x^4 + c3 x^3 + c2 x^2 + c1 x + c0 via the classical
/// invariants I and J: y^2 = x^3 - 27 I x - 27 J. The leading coefficient must be
/// a nonzero square constant.
WeierstrassModel quartic_to_weierstrass(const std::vector<FqPoly>& coeffs);

/// Points on the smooth proper model of y^2 = quartic over a finite field.
std::int64_t count_quartic(const FieldPtr& field, const std::vector<FiniteField::Code>& coeffs);

}  // namespace towerlab

#endif  // TOWERLAB_WEIERSTRASS_HPP
