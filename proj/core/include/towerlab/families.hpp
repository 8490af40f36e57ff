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


#ifndef TOWERLAB_FAMILIES_HPP
#define TOWERLAB_FAMILIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "towerlab/orbits.hpp"
#include "towerlab/shioda.hpp"
#include "towerlab/weierstrass.hpp"

namespace towerlab {

/**
 * The four hyperelliptic families over F_p(u), u = t^d:
 *
 *   case 1  p > 2, p !| (2g+2)(2g+1)   y^2 = x^{2g+2} + x^{2g+1} + u
 *   case 2  p > 2, p  | 2g+2           y^2 = x^{2g+2} + x^{2g+1} + u x
 *   case 3  p > 2, p  | 2g+1           y^2 = x^{2g+1} + x^{2g} + u x
 *   case 4  p = 2                      y^2 + x y = x^{2g+1} + u x
 *
 * Cases 1 to 3 are tame with one geometric critical value u0 != 0 (an ordinary
 * double point), so deg n' = 1. Case 4 has good reduction away from 0 and
 * infinity with Swan conductor 2g - 1 at infinity.
 */
struct FamilyModel {
  int family_case = 1;
  unsigned genus = 1;
  std::uint32_t p = 0;
  std::uint64_t d = 1;
  std::string equation;  // with u replaced by t^d
  int weight = 1;
  int sign_rho = -1;
  ConductorData conductor;
  bool everywhere_tame = true;
  std::optional<std::uint32_t> critical_value;  // u0 in F_p, cases 1 to 3
  std::vector<Monomial> shioda_monomials;       // in (u, x, y), u not yet pulled back
  std::optional<WeierstrassModel> weierstrass;  // g = 1, p >= 5 only
};

FamilyModel family_model(int family_case, unsigned g, std::uint32_t p, std::uint64_t d);

/// The four monomials of a case in (u, x, y), with no congruence gate.
std::vector<Monomial> family_monomials(int family_case, unsigned g);

}  // namespace towerlab

#endif  // TOWERLAB_FAMILIES_HPP
