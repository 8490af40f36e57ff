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

#include "towerlab/polynomial.hpp"

#include <sstream>

namespace towerlab {

IntPoly parse_int_poly(const std::string& text) {
  std::vector<BigInt> coeffs;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto b = tok.find_first_not_of(" \t");
    const auto e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) throw PreconditionError("empty coefficient in '" + text + "'");
    tok = tok.substr(b, e - b + 1);
    try {
      coeffs.emplace_back(tok);
    } catch (const std::exception&) {
      throw PreconditionError("malformed integer coefficient '" + tok + "'");
    }
  }
  return IntPoly(std::move(coeffs));
}

RatPoly to_rational(const IntPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.coefficients().size());
  for (const auto& v : p.coefficients()) c.emplace_back(v);
  return RatPoly(std::move(c));
}

std::optional<IntPoly> to_integer(const RatPoly& p) {
  std::vector<BigInt> c;
  c.reserve(p.coefficients().size());
  for (const auto& v : p.coefficients()) {
    if (boost::multiprecision::denominator(v) != 1) return std::nullopt;
    c.push_back(boost::multiprecision::numerator(v));
  }
  return IntPoly(std::move(c));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw PreconditionError("polynomial division by zero");
  if (a.degree() < b.degree()) return {RatPoly{}, a};
  std::vector<Rational> rem = a.coefficients();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<Rational> quo(rem.size() - db, Rational(0));
  const Rational lead = b.leading();
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i] == 0) continue;
    const Rational c = rem[i] / lead;
    quo[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= c * b.coefficients()[j];
  }
  rem.resize(db);
  return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

std::optional<IntPoly> exact_divide(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw PreconditionError("polynomial division by zero");
  if (a.is_zero()) return IntPoly{};
  auto [q, r] = divmod(to_rational(a), to_rational(b));
  if (!r.is_zero()) return std::nullopt;
  return to_integer(q);
}

int divisibility_multiplicity(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) throw PreconditionError("multiplicity in the zero polynomial is unbounded");
  if (b.degree() < 1) throw PreconditionError("multiplicity requires a nonconstant divisor");
  int m = 0;
  IntPoly cur = a;
  while (auto q = exact_divide(cur, b)) {
    cur = std::move(*q);
    ++m;
  }
  return m;
}

std::vector<BigInt> inverse_root_power_sums(const IntPoly& p, std::size_t n) {
  if (p.coeff(0) != 1) throw PreconditionError("power sums need p(0) = 1");
  std::vector<BigInt> s(n + 1, 0);
  for (std::size_t k = 1; k <= n; ++k) {
    BigInt v = -BigInt(static_cast<long long>(k)) * p.coeff(k);
    for (std::size_t i = 1; i < k; ++i) v -= p.coeff(i) * s[k - i];
    s[k] = v;
  }
  return {s.begin() + 1, s.end()};
}

IntPoly from_inverse_root_power_sums(const std::vector<BigInt>& sums, std::size_t deg) {
  if (sums.size() < deg) throw PreconditionError("not enough power sums");
  std::vector<BigInt> b(deg + 1, 0);
  b[0] = 1;
  for (std::size_t k = 1; k <= deg; ++k) {
    BigInt acc = sums[k - 1];
    for (std::size_t i = 1; i < k; ++i) acc += b[i] * sums[k - i - 1];
    const BigInt kk(static_cast<long long>(k));
    if (acc % kk != 0) {
      throw InvariantError("Newton reconstruction is not integral at degree " + std::to_string(k));
    }
    b[k] = -acc / kk;
  }
  return IntPoly(std::move(b));
}

}  // namespace towerlab
