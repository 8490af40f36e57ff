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


#include "towerlab/families.hpp"

#include <numeric>
#include <sstream>

namespace towerlab {

namespace {

std::string power(const char* var, std::uint64_t e) {
  if (e == 1) return var;
  return std::string(var) + "^" + std::to_string(e);
}

std::string u_term(std::uint64_t d) { return power("t", d); }

}  // namespace

std::vector<Monomial> family_monomials(int family_case, unsigned g) {
  if (g < 1) throw PreconditionError("genus must be at least 1");
  const unsigned a = 2 * g + 2, b = 2 * g + 1;
  switch (family_case) {
    case 1: return {{1, 0, 0, 2}, {-1, 0, a, 0}, {-1, 0, b, 0}, {-1, 1, 0, 0}};
    case 2: return {{1, 0, 0, 2}, {-1, 0, a, 0}, {-1, 0, b, 0}, {-1, 1, 1, 0}};
    case 3: return {{1, 0, 0, 2}, {-1, 0, b, 0}, {-1, 0, 2 * g, 0}, {-1, 1, 1, 0}};
    case 4: return {{1, 0, 0, 2}, {1, 0, 1, 1}, {-1, 0, b, 0}, {-1, 1, 1, 0}};
    default: throw PreconditionError("family case must be 1, 2, 3 or 4");
  }
}

FamilyModel family_model(int family_case, unsigned g, std::uint32_t p, std::uint64_t d) {
  if (family_case < 1 || family_case > 4) throw PreconditionError("family case must be 1, 2, 3 or 4");
  if (g < 1) throw PreconditionError("genus must be at least 1");
  if (!is_prime_u64(p)) throw PreconditionError("p must be prime");
  if (d < 1) throw PreconditionError("d must be positive");
  if (std::gcd<std::uint64_t>(d, p) != 1) throw PreconditionError("gcd(d, p) must be 1");
  const std::uint64_t a = 2ull * g + 2, b = 2ull * g + 1;
  switch (family_case) {
    case 1:
      if (p == 2 || (a * b) % p == 0) throw PreconditionError("case 1 needs p > 2 and p not dividing (2g+2)(2g+1)");
      break;
    case 2:
      if (p == 2 || a % p != 0) throw PreconditionError("case 2 needs p > 2 and p dividing 2g+2");
      break;
    case 3:
      if (p == 2 || b % p != 0) throw PreconditionError("case 3 needs p > 2 and p dividing 2g+1");
      break;
    default:
      if (p != 2) throw PreconditionError("case 4 needs p = 2");
  }

  FamilyModel m;
  m.family_case = family_case;
  m.genus = g;
  m.p = p;
  m.d = d;
  const FieldPtr F = FiniteField::prime(p);
  const std::string u = u_term(d);
  std::ostringstream eq;
  switch (family_case) {
    case 1:
      eq << "y^2 = " << power("x", a) << " + " << power("x", b) << " + " << u;
      break;
    case 2:
      eq << "y^2 = " << power("x", a) << " + " << power("x", b) << " + " << u << "*x";
      break;
    case 3:
      eq << "y^2 = " << power("x", b) << " + " << power("x", 2ull * g) << " + " << u << "*x";
      break;
    default:
      eq << "y^2 + x*y = " << power("x", b) << " + " << u << "*x";
  }
  m.equation = eq.str();
  m.shioda_monomials = family_monomials(family_case, g);

  if (family_case == 4) {
    m.everywhere_tame = false;
    m.conductor = {0, static_cast<int>(2 * g - 1), 0};
  } else {
    // The fibre over u has a double root exactly at u = u0: solve h = h' = 0 with x != 0.
    using Code = FiniteField::Code;
    Code u0 = 0;
    if (family_case == 1) {
      const Code x0 = F->neg(F->div(F->from_int(static_cast<std::int64_t>(b)), F->from_int(static_cast<std::int64_t>(a))));
      u0 = F->neg(F->add(F->pow(x0, a), F->pow(x0, b)));
    } else if (family_case == 2) {
      u0 = F->neg(F->mul(F->from_int(static_cast<std::int64_t>(b)), F->pow(F->from_int(-2), 2ull * g)));
    } else {
      u0 = F->pow(F->from_int(-2), 2ull * g - 1);
    }
    if (u0 == 0) throw InvariantError("critical value of the family collapsed to u = 0");
    m.critical_value = u0;
    m.conductor = {0, 0, 1};
  }

  if (family_case == 1 && g == 1 && p >= 5) {
    std::vector<FqPoly> c(5, FqPoly(F));
    c[0] = FqPoly::monomial(F, 1, d);
    c[3] = FqPoly::constant(F, 1);
    c[4] = FqPoly::constant(F, 1);
    m.weierstrass = quartic_to_weierstrass(c);
  }
  return m;
}

}  // namespace towerlab
