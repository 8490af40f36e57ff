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

#include "towerlab/places.hpp"

namespace towerlab {

BigInt necklace_count(std::uint64_t q, unsigned m) {
  if (m == 0) throw PreconditionError("degree must be positive");
  BigInt s = 0;
  for (unsigned e = 1; e <= m; ++e) {
    if (m % e != 0) continue;
    const int mu = mobius(e);
    if (mu != 0) s += mu * ipow(BigInt(q), m / e);
  }
  return s / m;
}

void for_each_monic_irreducible(const FieldPtr& field, int deg, const std::function<void(const FqPoly&)>& fn,
                                const Budget& budget) {
  if (deg < 1) throw PreconditionError("degree must be at least 1");
  if (deg > budget.max_place_degree) {
    throw BudgetError("place degree " + std::to_string(deg) + " exceeds the budget of " +
                      std::to_string(budget.max_place_degree));
  }
  const std::uint64_t q = field->order();
  budget.require(ipow(BigInt(q), static_cast<unsigned>(deg)), "monic polynomials of degree " + std::to_string(deg));
  const std::uint64_t count = ipow_u64(q, static_cast<unsigned>(deg));
  std::vector<FiniteField::Code> c(static_cast<std::size_t>(deg) + 1, 0);
  c[static_cast<std::size_t>(deg)] = 1;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t r = idx;
    for (int i = 0; i < deg; ++i) {
      c[static_cast<std::size_t>(i)] = static_cast<FiniteField::Code>(r % q);
      r /= q;
    }
    if (deg > 1 && c[0] == 0) continue;
    FqPoly f(field, c);
    if (deg == 1 || is_irreducible(f)) fn(f);
  }
}

std::vector<FqPoly> monic_irreducibles(const FieldPtr& field, int max_deg, const Budget& budget) {
  if (max_deg < 1) throw PreconditionError("max_deg must be at least 1");
  if (max_deg > budget.max_place_degree) {
    throw BudgetError("place degree " + std::to_string(max_deg) + " exceeds the budget of " +
                      std::to_string(budget.max_place_degree));
  }
  budget.require(ipow(BigInt(field->order()), static_cast<unsigned>(max_deg)), "place enumeration");
  std::vector<FqPoly> out;
  for (int d = 1; d <= max_deg; ++d) {
    for_each_monic_irreducible(field, d, [&](const FqPoly& f) { out.push_back(f); }, budget);
  }
  return out;
}

Place Place::finite(FqPoly pi) {
  if (pi.degree() < 1 || pi.leading() != 1) throw PreconditionError("a finite place needs a monic nonconstant pi");
  Place p;
  p.degree = pi.degree();
  p.pi = std::move(pi);
  return p;
}

Place Place::infinity(const FieldPtr& field) {
  Place p;
  p.infinite = true;
  p.pi = FqPoly(field);
  p.degree = 1;
  return p;
}

BigInt Place::residue_order() const {
  return ipow(BigInt(pi.field()->order()), static_cast<unsigned>(degree));
}

std::string Place::str() const { return infinite ? "inf" : pi.str(); }

std::vector<Place> places_up_to(const FieldPtr& field, int max_deg, const Budget& budget) {
  std::vector<Place> out;
  if (max_deg >= 1) {
    for (auto& f : monic_irreducibles(field, max_deg, budget)) out.push_back(Place::finite(std::move(f)));
  }
  out.push_back(Place::infinity(field));
  return out;
}

FieldPtr residue_field(const Place& place) {
  const FieldPtr& f = place.pi.field();
  if (place.infinite || place.degree == 1) return f;
  return FiniteField::extension(f, place.pi.coefficients(), true);
}

FiniteField::Code reduce(const FqPoly& f, const Place& place, const FieldPtr& residue) {
  if (place.infinite) throw PreconditionError("reduction at infinity needs the s = 1/t chart");
  if (place.degree == 1) return f.eval(f.field()->neg(place.pi.coeff(0)));
  const FqPoly r = f % place.pi;
  std::vector<FiniteField::Code> d(static_cast<std::size_t>(place.degree), 0);
  for (int i = 0; i <= r.degree(); ++i) d[static_cast<std::size_t>(i)] = r.coeff(static_cast<std::size_t>(i));
  return residue->from_digits(d);
}

}  // namespace towerlab
