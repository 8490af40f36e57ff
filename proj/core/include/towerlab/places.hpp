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


#ifndef TOWERLAB_PLACES_HPP
#define TOWERLAB_PLACES_HPP

#include <functional>
#include <string>
#include <vector>

#include "towerlab/fq_poly.hpp"

namespace towerlab {

/// (1/m) sum_{e | m} mu(e) q^{m/e}: the number of monic irreducibles of degree m over F_q.
BigInt necklace_count(std::uint64_t q, unsigned m);

/// Monic irreducibles of degree exactly `deg`, in code order, passed to `fn`.
void for_each_monic_irreducible(const FieldPtr& field, int deg, const std::function<void(const FqPoly&)>& fn,
                                const Budget& budget);

/// Every monic irreducible of degree 1..max_deg, ordered by (degree, code order).
std::vector<FqPoly> monic_irreducibles(const FieldPtr& field, int max_deg, const Budget& budget);

/// A closed point of P^1 over F_q.
struct Place {
  bool infinite = false;
  FqPoly pi;  // unset at infinity
  int degree = 1;

  static Place finite(FqPoly pi);
  static Place infinity(const FieldPtr& field);

  BigInt residue_order() const;
  /// "inf" or the comma-separated coefficient codes of pi.
  std::string str() const;
};

/// Finite places of degree <= max_deg followed by infinity.
std::vector<Place> places_up_to(const FieldPtr& field, int max_deg, const Budget& budget);

/// F_q[t]/(pi); F_q itself when deg pi = 1.
FieldPtr residue_field(const Place& place);

/// Image of f in the residue field of a finite place.
FiniteField::Code reduce(const FqPoly& f, const Place& place, const FieldPtr& residue);

}  // namespace towerlab

#endif  // TOWERLAB_PLACES_HPP
