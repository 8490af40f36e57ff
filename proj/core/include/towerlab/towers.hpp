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


#ifndef TOWERLAB_TOWERS_HPP
#define TOWERLAB_TOWERS_HPP

#include <string>
#include <vector>

#include "towerlab/families.hpp"
#include "towerlab/lfunction.hpp"
#include "towerlab/orbits.hpp"

namespace towerlab {

struct OrbitVerdict {
  Orbit orbit;
  std::uint64_t character_order = 0;
  IntPoly factor;
  bool good = false;
  std::string method;  // "primitive-part" or "cumulative"
};

struct PrimitivePart {
  std::uint64_t order = 0;  // character order e | d
  IntPoly poly;            // product of L(rho x sigma_o) over orbits of order e
  bool exact = true;
};

struct TowersVerification {
  FamilyModel family;
  unsigned n = 0;
  std::uint64_t q = 0;
  std::uint64_t d = 0;
  TowersPrediction prediction;  // excluded orbits are the ones that failed
  LSeries l;
  std::vector<PrimitivePart> primitive_parts;
  std::vector<OrbitVerdict> verdicts;
  IntPoly good_product;
  DivisibilityVerdict cumulative;
  int rank = 0;
  std::int64_t good_count = 0;
  std::int64_t good_size_sum = 0;
  LSeries extended;  // base change to F_{q^{2n}}
  int extended_rank = 0;
  bool gos_consistent = false;
  bool center_bound_holds = false;
  bool extended_bound_holds = false;
};

/// Family model at d = p^n + 1, its L-function over F_p(t), and an exact
/// division test of every higher self-dual orbit factor. L(E_e) for each e | d
/// is Moebius-inverted into per-order primitive parts; an orbit is good when its
/// factor divides the part of its order. Requires a family with a Weierstrass model.
TowersVerification verify_towers(int family_case, unsigned g, std::uint32_t p, unsigned n, const Budget& budget);

}  // namespace towerlab

#endif  // TOWERLAB_TOWERS_HPP
