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


#ifndef TOWERLAB_LFUNCTION_HPP
#define TOWERLAB_LFUNCTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "towerlab/polynomial.hpp"
#include "towerlab/weierstrass.hpp"

namespace towerlab {

struct LSeries {
  IntPoly poly;
  std::uint64_t q = 0;
  int weight = 1;
  int degree = 0;  // D
  int conductor_degree = 0;
  int sign = 1;
  std::vector<std::pair<std::string, int>> conductor;  // (place, exponent)
  std::string provenance;
};

struct LFunctionOptions {
  /// Places up to degree D + extra_degree are multiplied in. Places of degree
  /// above D only change coefficients beyond T^D, so any value >= 0 agrees.
  int extra_degree = 0;
};

/// Euler product over all places of degree <= D truncated at T^D, D = deg n - 4.
/// Rejects isotrivial models. The functional equation is a hard gate.
LSeries l_function(const WeierstrassModel& model, const Budget& budget, const LFunctionOptions& options = {});

/// Sign s with L(T) = s (q^{(w+1)/2} T)^D L(1/(q^{w+1} T)); throws InvariantError if neither works.
int functional_equation_check(const IntPoly& poly, std::uint64_t q, int weight, int degree);
int functional_equation_check(const LSeries& l);

/// Order of vanishing at T = q^{-(w+1)/2}; w must be odd.
int analytic_rank(const IntPoly& poly, std::uint64_t q, int weight);
int analytic_rank(const LSeries& l);

/// prod (1 - a_i T) -> prod (1 - a_i^k T), and q -> q^k.
IntPoly base_change(const IntPoly& poly, unsigned k);
LSeries base_change(const LSeries& l, unsigned k);

struct DivisibilityVerdict {
  bool divides = false;
  IntPoly quotient;
};

DivisibilityVerdict divisibility_check(const IntPoly& l, const IntPoly& predicted);

struct RankBounds {
  int geometric = 0;
  bool brumer_defined = false;
  Rational brumer_main_term;  // rounded to 4 decimals
  std::string brumer_decimal;  // "2.6947"
};

/// Geometric bound D and the main term D / (2 log_q D).
RankBounds rank_bounds(int D, std::uint64_t q);

}  // namespace towerlab

#endif  // TOWERLAB_LFUNCTION_HPP
