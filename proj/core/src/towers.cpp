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


#include "towerlab/towers.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace towerlab {

namespace {

std::vector<std::uint64_t> divisors(std::uint64_t d) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t e = 1; e <= d; ++e)
    if (d % e == 0) out.push_back(e);
  return out;
}

IntPoly family_l(int family_case, unsigned g, std::uint32_t p, std::uint64_t e, const Budget& budget) {
  const FamilyModel m = family_model(family_case, g, p, e);
  return l_function(*m.weierstrass, budget).poly;
}

}  // namespace

TowersVerification verify_towers(int family_case, unsigned g, std::uint32_t p, unsigned n, const Budget& budget) {
  if (n < 1) throw PreconditionError("n must be positive");
  TowersVerification v;
  v.n = n;
  v.q = p;
  v.d = ipow_u64(p, n) + 1;
  v.family = family_model(family_case, g, p, v.d);
  if (!v.family.weierstrass) throw PreconditionError("L-functions are computed for case 1 with g = 1 and p >= 5 only");
  const int w = v.family.weight;
  const int sign = v.family.sign_rho;

  v.prediction = towers_rank_bound(v.q, n, w, sign, 0, v.family.conductor);
  v.l = l_function(*v.family.weierstrass, budget);
  v.gos_consistent = v.l.poly.degree() == v.l.conductor_degree - 4 && v.l.degree == v.l.conductor_degree - 4;

  // L(E_e) = prod over e' | e of the order-e' parts, so mu inverts it.
  std::map<std::uint64_t, IntPoly> full;
  for (std::uint64_t e : divisors(v.d)) full[e] = e == v.d ? v.l.poly : family_l(family_case, g, p, e, budget);
  std::map<std::uint64_t, PrimitivePart> prim;
  for (std::uint64_t e : divisors(v.d)) {
    IntPoly num{1}, den{1};
    for (std::uint64_t f : divisors(e)) {
      const int mu = mobius(e / f);
      if (mu == 1) num = num * full[f];
      if (mu == -1) den = den * full[f];
    }
    PrimitivePart part;
    part.order = e;
    const auto q = exact_divide(num, den);
    part.exact = q.has_value();
    part.poly = q ? *q : IntPoly{};
    prim[e] = part;
    v.primitive_parts.push_back(part);
  }

  const int epsilon = -sign;
  std::map<std::uint64_t, std::vector<Orbit>> by_order;
  for (const auto& o : higher_self_dual_orbits(orbit_decomposition(v.d, v.q)))
    by_order[v.d / std::gcd(o.elements.front(), v.d)].push_back(o);

  IntPoly accepted_all{1};
  for (auto& [order, orbits] : by_order) {
    const PrimitivePart& part = prim[order];
    const bool single = orbits.size() == 1 && part.exact;
    IntPoly accepted_here{1};
    for (const auto& o : orbits) {
      OrbitVerdict verdict;
      verdict.orbit = o;
      verdict.character_order = order;
      verdict.factor = orbit_factor(v.q, w, epsilon, o.size());
      if (single) {
        verdict.method = "primitive-part";
        verdict.good = divisibility_check(part.poly, verdict.factor).divides;
      } else {
        verdict.method = "cumulative";
        const IntPoly& target = part.exact ? part.poly : v.l.poly;
        const IntPoly& base = part.exact ? accepted_here : accepted_all;
        verdict.good = divisibility_check(target, base * verdict.factor).divides;
      }
      if (verdict.good) {
        accepted_here = accepted_here * verdict.factor;
        accepted_all = accepted_all * verdict.factor;
      }
      v.verdicts.push_back(verdict);
    }
  }

  v.prediction.good_orbits.clear();
  v.prediction.excluded_orbits.clear();
  v.good_product = IntPoly{1};
  for (const auto& verdict : v.verdicts) {
    if (verdict.good) {
      v.prediction.good_orbits.push_back(verdict.orbit);
      v.good_product = v.good_product * verdict.factor;
      ++v.good_count;
      v.good_size_sum += static_cast<std::int64_t>(verdict.orbit.size());
    } else {
      v.prediction.excluded_orbits.push_back({verdict.orbit, "factor does not divide the computed L-function"});
    }
  }
  v.prediction.lower_bound_center = v.good_count;
  v.prediction.lower_bound_extended = v.good_size_sum;
  v.prediction.asymptotic_form = Rational(BigInt(v.d), BigInt(2 * n)) -
                                 static_cast<std::int64_t>(v.prediction.excluded_orbits.size());

  v.cumulative = divisibility_check(v.l.poly, v.good_product);
  v.rank = analytic_rank(v.l);
  v.extended = base_change(v.l, 2 * n);
  v.extended_rank = analytic_rank(v.extended);
  v.center_bound_holds = v.cumulative.divides && v.rank >= v.good_count;
  v.extended_bound_holds = v.extended_rank >= v.good_size_sum;
  return v;
}

}  // namespace towerlab
