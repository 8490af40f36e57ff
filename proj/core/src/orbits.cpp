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

#include "towerlab/orbits.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace towerlab {

std::string to_string(OrderClass c) {
  switch (c) {
    case OrderClass::kTrivial:
      return "trivial";
    case OrderClass::kOrderTwo:
      return "order-two";
    case OrderClass::kHigher:
      break;
  }
  return "higher";
}

OrbitDecomposition orbit_decomposition(std::uint64_t d, std::uint64_t q) {
  if (d < 1) throw PreconditionError("d must be positive");
  if (q < 2) throw PreconditionError("q must be at least 2");
  if (std::gcd(q, d) != 1) throw PreconditionError("gcd(q, d) must be 1");
  if (d > (std::uint64_t{1} << 26)) throw BudgetError("d too large for explicit orbit enumeration");
  OrbitDecomposition dec;
  dec.d = d;
  dec.q = q;
  const std::uint64_t qm = q % d;
  std::vector<bool> seen(d, false);
  std::uint64_t b = 1;
  for (std::uint64_t start = 0; start < d; ++start) {
    if (seen[start]) continue;
    Orbit o;
    std::uint64_t x = start;
    do {
      seen[x] = true;
      o.elements.push_back(x);
      x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * qm % d);
    } while (x != start);
    std::sort(o.elements.begin(), o.elements.end());
    o.self_dual = std::all_of(o.elements.begin(), o.elements.end(), [&](std::uint64_t e) {
      return std::binary_search(o.elements.begin(), o.elements.end(), (d - e) % d);
    });
    const std::uint64_t order = d / std::gcd(start, d);
    o.order_class = order == 1 ? OrderClass::kTrivial : order == 2 ? OrderClass::kOrderTwo : OrderClass::kHigher;
    b = std::lcm(b, static_cast<std::uint64_t>(o.size()));
    dec.orbits.push_back(std::move(o));
  }
  dec.b = b;
  return dec;
}

std::vector<Orbit> higher_self_dual_orbits(const OrbitDecomposition& dec) {
  std::vector<Orbit> out;
  for (const auto& o : dec.orbits)
    if (o.self_dual && o.order_class == OrderClass::kHigher) out.push_back(o);
  return out;
}

SelfDualCount selfdual_higher_count(std::uint64_t q, unsigned n) {
  if (q < 2 || n < 1) throw PreconditionError("need q >= 2 and n >= 1");
  const std::uint64_t qn = ipow_u64(q, n);
  const auto dec = orbit_decomposition(qn + 1, q);
  SelfDualCount c;
  for (const auto& o : dec.orbits) {
    if (!o.self_dual) throw InvariantError("orbit not self-dual although q^n = -1 mod d");
    if (o.order_class == OrderClass::kHigher) ++c.actual;
  }
  c.floor_lower_bound = (qn - 1) / (2 * n);
  c.lower_bound = (qn - 1 + 2 * n - 1) / (2 * n);
  if (c.actual < c.floor_lower_bound) throw InvariantError("fewer self-dual orbits than the lower bound");
  return c;
}

IntPoly orbit_factor(std::uint64_t q, int w, int epsilon, std::size_t k) {
  if (epsilon != 1 && epsilon != -1) throw PreconditionError("epsilon must be +1 or -1");
  if (w < 0) throw PreconditionError("weight must be nonnegative");
  const std::uint64_t e2 = static_cast<std::uint64_t>(w + 1) * k;
  if (e2 % 2 != 0) throw PreconditionError("q^{(w+1)|o|/2} is not integral for this orbit");
  IntPoly f = IntPoly::monomial(-epsilon * ipow(BigInt(q), static_cast<unsigned>(e2 / 2)), k);
  f += IntPoly{1};
  return f;
}

IntPoly predicted_divisor(const OrbitDecomposition& dec, int w, int sign_rho, const std::vector<Orbit>& included) {
  if (sign_rho != 1 && sign_rho != -1) throw PreconditionError("sign must be +1 or -1");
  IntPoly p{1};
  for (const auto& o : included) {
    const bool member = std::find(dec.orbits.begin(), dec.orbits.end(), o) != dec.orbits.end();
    if (!member) throw PreconditionError("orbit is not part of the decomposition");
    const auto& known = *std::find(dec.orbits.begin(), dec.orbits.end(), o);
    if (!known.self_dual || known.order_class != OrderClass::kHigher) {
      throw PreconditionError("included orbit must be self-dual of higher order");
    }
    p = p * orbit_factor(dec.q, w, -sign_rho, o.size());
  }
  return p;
}

IntPoly predicted_divisor_excluding(const OrbitDecomposition& dec, int w, int sign_rho,
                                    const std::vector<Orbit>& excluded) {
  std::vector<Orbit> inc;
  for (auto& o : higher_self_dual_orbits(dec))
    if (std::find(excluded.begin(), excluded.end(), o) == excluded.end()) inc.push_back(o);
  return predicted_divisor(dec, w, sign_rho, inc);
}

TowersPrediction towers_rank_bound(std::uint64_t q, unsigned n, int w, int sign_rho, unsigned excluded_count,
                                   ConductorData conductor) {
  if (sign_rho != -1) throw PreconditionError("the central-point bound requires sign -1");
  if (n < 1) throw PreconditionError("n must be positive");
  TowersPrediction t;
  t.q = q;
  t.n = n;
  t.d = ipow_u64(q, n) + 1;
  t.w = w;
  t.sign_rho = sign_rho;
  t.epsilon = -sign_rho;
  t.swan_zero = conductor.swan_zero;
  t.swan_infinity = conductor.swan_infinity;
  t.deg_n_prime = conductor.deg_n_prime;
  const auto dec = orbit_decomposition(t.d, q);
  std::vector<Orbit> cand = higher_self_dual_orbits(dec);
  std::vector<std::size_t> order(cand.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (cand[x].size() != cand[y].size()) return cand[x].size() > cand[y].size();
    return cand[x].elements.front() > cand[y].elements.front();
  });
  std::vector<bool> drop(cand.size(), false);
  for (std::size_t i = 0; i < order.size() && i < excluded_count; ++i) drop[order[i]] = true;
  std::int64_t ext = 0;
  for (std::size_t i = 0; i < cand.size(); ++i) {
    if (drop[i]) {
      t.excluded_orbits.push_back({cand[i], "excluded by count"});
    } else {
      (void)orbit_factor(q, w, t.epsilon, cand[i].size());
      ext += static_cast<std::int64_t>(cand[i].size());
      t.good_orbits.push_back(cand[i]);
    }
  }
  t.lower_bound_center = static_cast<std::int64_t>(t.good_orbits.size());
  t.lower_bound_extended = ext;
  t.asymptotic_form = Rational(BigInt(t.d), BigInt(2 * n)) - excluded_count;
  t.provable_count = Rational(BigInt(t.d - 2), BigInt(2 * n));
  t.intro_count = Rational(BigInt(t.d - 1), BigInt(2 * n));
  return t;
}

namespace {

BigInt binom(unsigned n, int k) {
  if (k < 0 || static_cast<unsigned>(k) > n) return 0;
  BigInt r = 1;
  for (unsigned i = 1; i <= static_cast<unsigned>(k); ++i) r = r * (n - static_cast<unsigned>(k) + i) / i;
  return r;
}

bool binom_odd_kummer(unsigned n, int k) {
  if (k < 0 || static_cast<unsigned>(k) > n) return false;
  const unsigned m = static_cast<unsigned>(k);
  const int carries = std::popcount(m) + std::popcount(n - m) - std::popcount(n);
  return carries == 0;
}

void check_av2_domain(unsigned g, unsigned k) {
  if (k % 2 == 0) throw PreconditionError("k must be odd");
  if (k < 3) throw PreconditionError("k must be at least 3");
  if (k > g) throw PreconditionError("k must not exceed g");
}

}  // namespace

BigInt av2_conductor_exponent(unsigned g, unsigned k) {
  check_av2_domain(g, k);
  return binom(2 * g - 2, static_cast<int>(k) - 1) - binom(2 * g - 2, static_cast<int>(k) - 3);
}

bool av2_parity_direct(unsigned g, unsigned k) {
  const BigInt v = av2_conductor_exponent(g, k);
  return (v % 2) != 0;
}

bool av2_parity_kummer(unsigned g, unsigned k) {
  check_av2_domain(g, k);
  return binom_odd_kummer(2 * g - 2, static_cast<int>(k) - 1) != binom_odd_kummer(2 * g - 2, static_cast<int>(k) - 3);
}

unsigned av2_find_g(unsigned k, unsigned search_limit) {
  if (k % 2 == 0 || k < 3) throw PreconditionError("k must be odd and at least 3");
  for (unsigned g = k; g <= search_limit; ++g) {
    const bool direct = av2_parity_direct(g, k);
    if (direct != av2_parity_kummer(g, k)) throw InvariantError("carry parity disagrees with binomial parity");
    if (direct) return g;
  }
  throw PreconditionError("no g <= " + std::to_string(search_limit) + " gives an odd exponent");
}

}  // namespace towerlab
