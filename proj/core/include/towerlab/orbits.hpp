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


#ifndef TOWERLAB_ORBITS_HPP
#define TOWERLAB_ORBITS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "towerlab/polynomial.hpp"

namespace towerlab {

enum class OrderClass { kTrivial, kOrderTwo, kHigher };

std::string to_string(OrderClass c);

/// An orbit of multiplication by q on Z/dZ.
struct Orbit {
  std::vector<std::uint64_t> elements;  // sorted
  bool self_dual = false;
  OrderClass order_class = OrderClass::kHigher;

  std::size_t size() const { return elements.size(); }
  bool operator==(const Orbit& o) const { return elements == o.elements; }
};

struct OrbitDecomposition {
  std::uint64_t d = 1;
  std::uint64_t q = 2;
  std::uint64_t b = 1;  // multiplicative order of q mod d
  std::vector<Orbit> orbits;  // sorted by minimal element
};

/// Requires d >= 1 and gcd(q, d) = 1.
OrbitDecomposition orbit_decomposition(std::uint64_t d, std::uint64_t q);

/// Self-dual orbits of higher order, in decomposition order.
std::vector<Orbit> higher_self_dual_orbits(const OrbitDecomposition& dec);

struct SelfDualCount {
  std::uint64_t actual = 0;
  std::uint64_t lower_bound = 0;        // ceil((q^n - 1) / 2n)
  std::uint64_t floor_lower_bound = 0;  // floor((q^n - 1) / 2n)
};

/// Counts higher-order self-dual orbits for d = q^n + 1 and asserts the lower bound.
SelfDualCount selfdual_higher_count(std::uint64_t q, unsigned n);

/// 1 - epsilon q^{(w+1)k/2} T^k; throws if (w+1)k is odd.
IntPoly orbit_factor(std::uint64_t q, int w, int epsilon, std::size_t k);

/// Product of orbit factors over the given orbits, each of which must be
/// self-dual of higher order. epsilon = -sign_rho.
IntPoly predicted_divisor(const OrbitDecomposition& dec, int w, int sign_rho, const std::vector<Orbit>& included);

/// Product over every higher-order self-dual orbit not listed in `excluded`.
IntPoly predicted_divisor_excluding(const OrbitDecomposition& dec, int w, int sign_rho,
                                    const std::vector<Orbit>& excluded);

struct ExcludedOrbit {
  Orbit orbit;
  std::string reason;
};

struct TowersPrediction {
  std::uint64_t q = 0;
  unsigned n = 0;
  std::uint64_t d = 0;
  int w = 1;
  int sign_rho = -1;
  int epsilon = 1;
  int swan_zero = 0;
  int swan_infinity = 0;
  int deg_n_prime = 0;
  std::vector<Orbit> good_orbits;
  std::vector<ExcludedOrbit> excluded_orbits;
  std::int64_t lower_bound_center = 0;
  std::int64_t lower_bound_extended = 0;
  Rational asymptotic_form;  // d/(2n) - excluded_count
  Rational provable_count;   // (q^n - 1)/(2n)
  Rational intro_count;      // q^n/(2n)
};

struct ConductorData {
  int swan_zero = 0;
  int swan_infinity = 0;
  int deg_n_prime = 0;
};

/// Rank predictor for d = q^n + 1. The `excluded_count` largest orbits are set
/// aside (ties broken toward the larger minimal element). Requires sign_rho = -1.
TowersPrediction towers_rank_bound(std::uint64_t q, unsigned n, int w, int sign_rho, unsigned excluded_count,
                                   ConductorData conductor = ConductorData());

/// C(2g-2, k-1) - C(2g-2, k-3) for odd 3 <= k <= g.
BigInt av2_conductor_exponent(unsigned g, unsigned k);

/// Parity of av2_conductor_exponent from the big-integer value.
bool av2_parity_direct(unsigned g, unsigned k);

/// Parity from Kummer's theorem: C(n, m) is odd iff m + (n - m) has no binary carries.
bool av2_parity_kummer(unsigned g, unsigned k);

/// Smallest g in [k, search_limit] with odd conductor exponent. Both parity
/// computations must agree at every step.
unsigned av2_find_g(unsigned k, unsigned search_limit = 10000);

}  // namespace towerlab

#endif  // TOWERLAB_ORBITS_HPP
