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

#include "towerlab/lfunction.hpp"

#include <cmath>
#include <cstdio>

namespace towerlab {

namespace {

/// series <- series / factor mod T^{n}, factor(0) = 1.
void divide_series(std::vector<BigInt>& s, const IntPoly& factor) {
  std::vector<std::pair<std::size_t, BigInt>> terms;
  for (std::size_t i = 1; i < factor.coefficients().size(); ++i)
    if (factor.coefficients()[i] != 0) terms.emplace_back(i, factor.coefficients()[i]);
  if (terms.empty()) return;
  for (std::size_t j = 0; j < s.size(); ++j)
    for (const auto& [i, c] : terms)
      if (i <= j) s[j] -= c * s[j - i];
}

bool sign_works(const IntPoly& l, std::uint64_t q, int w, int D, int s) {
  const BigInt Q(q);
  for (int i = 0; i <= D; ++i) {
    const BigInt li = l.coeff(static_cast<std::size_t>(i));
    const BigInt lo = l.coeff(static_cast<std::size_t>(D - i));
    const int e2 = (w + 1) * (D - 2 * i);  // twice the exponent of q
    if (e2 >= 0) {
      if (lo != s * li * ipow(Q, static_cast<unsigned>(e2 / 2))) return false;
    } else {
      if (lo * ipow(Q, static_cast<unsigned>(-e2 / 2)) != s * li) return false;
    }
  }
  return true;
}

}  // namespace

int functional_equation_check(const IntPoly& poly, std::uint64_t q, int weight, int degree) {
  if (weight < 0) throw PreconditionError("weight must be nonnegative");
  if (poly.degree() > degree) throw InvariantError("functional equation violated: degree exceeds D");
  if (((weight + 1) * degree) % 2 != 0) throw PreconditionError("(w+1) D must be even for an integral check");
  for (int s : {1, -1})
    if (sign_works(poly, q, weight, degree, s)) return s;
  throw InvariantError("functional equation violated");
}

int functional_equation_check(const LSeries& l) {
  return functional_equation_check(l.poly, l.q, l.weight, l.degree);
}

int analytic_rank(const IntPoly& poly, std::uint64_t q, int weight) {
  if (weight % 2 == 0) throw PreconditionError("analytic rank needs odd weight");
  if (poly.is_zero()) throw PreconditionError("the zero polynomial has unbounded order");
  if (poly.degree() == 0) return 0;
  const BigInt c = ipow(BigInt(q), static_cast<unsigned>((weight + 1) / 2));
  return divisibility_multiplicity(poly, IntPoly{BigInt(1), -c});
}

int analytic_rank(const LSeries& l) { return analytic_rank(l.poly, l.q, l.weight); }

IntPoly base_change(const IntPoly& poly, unsigned k) {
  if (k < 1) throw PreconditionError("base change degree must be positive");
  if (poly.coeff(0) != 1) throw PreconditionError("base change needs constant term 1");
  if (k == 1 || poly.degree() <= 0) return poly;
  const auto D = static_cast<std::size_t>(poly.degree());
  const auto sums = inverse_root_power_sums(poly, k * D);
  std::vector<BigInt> picked;
  for (std::size_t i = 1; i <= D; ++i) picked.push_back(sums[k * i - 1]);
  return from_inverse_root_power_sums(picked, D);
}

LSeries base_change(const LSeries& l, unsigned k) {
  LSeries r = l;
  r.poly = base_change(l.poly, k);
  r.q = static_cast<std::uint64_t>(ipow(BigInt(l.q), k));
  r.sign = functional_equation_check(r);
  r.provenance = l.provenance + ";base_change=" + std::to_string(k);
  return r;
}

DivisibilityVerdict divisibility_check(const IntPoly& l, const IntPoly& predicted) {
  DivisibilityVerdict v;
  if (predicted.is_zero()) return v;
  if (l.is_zero()) {
    v.divides = true;
    return v;
  }
  if (auto q = exact_divide(l, predicted)) {
    v.divides = true;
    v.quotient = *q;
  }
  return v;
}

LSeries l_function(const WeierstrassModel& model, const Budget& budget, const LFunctionOptions& options) {
  const auto& F = model.field;
  if (F->characteristic() < 5) throw PreconditionError("L-functions need characteristic >= 5");
  if (model.isotrivial()) throw PreconditionError("model is isotrivial (constant j-invariant)");
  if (options.extra_degree < 0) throw PreconditionError("extra_degree must be nonnegative");
  const Conductor cond = conductor(model, budget);
  LSeries l;
  l.q = F->order();
  l.weight = 1;
  l.conductor_degree = cond.degree;
  for (const auto& [pl, e] : cond.divisor) l.conductor.emplace_back(pl.str(), e);
  l.degree = cond.degree - 4;
  l.provenance = model.str();
  if (l.degree < 0) throw InvariantError("conductor degree below 4 for a non-isotrivial model");
  const int D = l.degree;
  const int max_deg = D + options.extra_degree;
  std::vector<BigInt> series(static_cast<std::size_t>(D) + 1, 0);
  series[0] = 1;
  if (max_deg >= 1) {
    if (max_deg > budget.max_place_degree) {
      throw BudgetError("L-function needs places of degree " + std::to_string(max_deg) + " (budget " +
                        std::to_string(budget.max_place_degree) + ")");
    }
    budget.require(ipow(BigInt(l.q), static_cast<unsigned>(max_deg)), "places for the Euler product");
    for (int deg = 1; deg <= max_deg; ++deg) {
      for_each_monic_irreducible(
          F, deg,
          [&](const FqPoly& pi) { divide_series(series, local_data(model, Place::finite(pi), budget).poly); },
          budget);
    }
    divide_series(series, local_data(model, Place::infinity(F), budget).poly);
  }
  l.poly = IntPoly(std::move(series));
  if (l.poly.degree() != D) throw InvariantError("L-polynomial degree differs from deg n - 4");
  l.sign = functional_equation_check(l);
  return l;
}

RankBounds rank_bounds(int D, std::uint64_t q) {
  if (D < 0) throw PreconditionError("D must be nonnegative");
  if (q < 2) throw PreconditionError("q must be at least 2");
  RankBounds r;
  r.geometric = D;
  if (D < 2) return r;
  const long double v = static_cast<long double>(D) * std::log(static_cast<long double>(q)) /
                        (2.0L * std::log(static_cast<long double>(D)));
  const long long scaled = std::llround(v * 10000.0L);
  r.brumer_defined = true;
  r.brumer_main_term = Rational(BigInt(scaled), BigInt(10000));
  char buf[64];
  std::snprintf(buf, sizeof buf, "%lld.%04lld", scaled / 10000, scaled % 10000);
  r.brumer_decimal = buf;
  return r;
}

}  // namespace towerlab
