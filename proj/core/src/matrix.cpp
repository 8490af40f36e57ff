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

#include "towerlab/matrix.hpp"

#include <utility>

namespace towerlab {

namespace {

using u64 = std::uint64_t;

u64 mul_mod(u64 a, u64 b, u64 l) { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % l); }
u64 add_mod(u64 a, u64 b, u64 l) {
  u64 s = a + b;
  return s >= l ? s - l : s;
}
u64 sub_mod(u64 a, u64 b, u64 l) { return a >= b ? a - b : a + l - b; }
u64 pow_mod(u64 a, u64 e, u64 l) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mul_mod(r, a, l);
    a = mul_mod(a, a, l);
    e >>= 1;
  }
  return r;
}

std::vector<u64> hessenberg_char_poly(std::vector<u64> h, std::size_t n, u64 l) {
  auto at = [&](std::size_t i, std::size_t j) -> u64& { return h[i * n + j]; };
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && at(piv, j) == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      for (std::size_t k = 0; k < n; ++k) std::swap(at(piv, k), at(j + 1, k));
      for (std::size_t k = 0; k < n; ++k) std::swap(at(k, piv), at(k, j + 1));
    }
    const u64 inv = pow_mod(at(j + 1, j), l - 2, l);
    for (std::size_t r = j + 2; r < n; ++r) {
      const u64 u = mul_mod(at(r, j), inv, l);
      if (u == 0) continue;
      for (std::size_t k = 0; k < n; ++k) at(r, k) = sub_mod(at(r, k), mul_mod(u, at(j + 1, k), l), l);
      for (std::size_t k = 0; k < n; ++k) at(k, j + 1) = add_mod(at(k, j + 1), mul_mod(u, at(k, r), l), l);
    }
  }
  // p[m] is the characteristic polynomial of the leading m x m block.
  std::vector<std::vector<u64>> p(n + 1);
  p[0] = {1};
  auto hh = [&](std::size_t i, std::size_t j) { return at(i - 1, j - 1); };
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<u64> cur(m + 1, 0);
    const u64 d = hh(m, m);
    for (std::size_t k = 0; k < m; ++k) {
      cur[k + 1] = add_mod(cur[k + 1], p[m - 1][k], l);
      cur[k] = sub_mod(cur[k], mul_mod(d, p[m - 1][k], l), l);
    }
    u64 t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t = mul_mod(t, hh(m - i + 1, m - i), l);
      if (t == 0) break;
      const u64 c = mul_mod(t, hh(m - i, m), l);
      if (c == 0) continue;
      const auto& q = p[m - i - 1];
      for (std::size_t k = 0; k < q.size(); ++k) cur[k] = sub_mod(cur[k], mul_mod(c, q[k], l), l);
    }
    p[m] = std::move(cur);
  }
  return p[n];
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

Rational determinant(const RatMatrix& m) {
  if (!m.square()) throw PreconditionError("determinant of a non-square matrix");
  RatMatrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a(piv, k), a(c, k));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c) == 0) continue;
      const Rational f = a(r, c) / a(c, c);
      for (std::size_t k = c; k < n; ++k) a(r, k) -= f * a(c, k);
    }
  }
  return det;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (!m.square()) throw PreconditionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix a = m, inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c) == 0) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != c) {
      for (std::size_t k = 0; k < n; ++k) {
        std::swap(a(piv, k), a(c, k));
        std::swap(inv(piv, k), inv(c, k));
      }
    }
    const Rational s = 1 / a(c, c);
    for (std::size_t k = 0; k < n; ++k) {
      a(c, k) *= s;
      inv(c, k) *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      const Rational f = a(r, c);
      for (std::size_t k = 0; k < n; ++k) {
        a(r, k) -= f * a(c, k);
        inv(r, k) -= f * inv(c, k);
      }
    }
  }
  return inv;
}

IntPoly integer_char_poly(const IntMatrix& m) {
  if (!m.square()) throw PreconditionError("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return IntPoly{1};
  BigInt amax = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) amax = std::max(amax, BigInt(abs(m(i, j))));
  BigInt bound = 1;
  const BigInt a2 = amax * amax;
  for (unsigned j = 1; j <= n; ++j) {
    const BigInt b = binomial(static_cast<unsigned>(n), j) * ipow(a2 * j, (j + 1) / 2);
    if (b > bound) bound = b;
  }
  const BigInt need = 2 * bound + 1;

  std::vector<BigInt> residue(n + 1, 0);
  BigInt modulus = 1;
  u64 l = (u64{1} << 62) - 57;
  std::vector<u64> h(n * n);
  while (modulus < need) {
    while (!is_prime_u64(l)) l -= 2;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        BigInt r = m(i, j) % l;
        if (r < 0) r += l;
        h[i * n + j] = static_cast<u64>(r);
      }
    const auto cp = hessenberg_char_poly(h, n, l);
    const u64 mod_l = static_cast<u64>(modulus % l);
    const u64 inv = pow_mod(mod_l, l - 2, l);
    for (std::size_t k = 0; k <= n; ++k) {
      const u64 x_l = static_cast<u64>(residue[k] % l);
      const u64 t = mul_mod(sub_mod(cp[k], x_l, l), inv, l);
      residue[k] += modulus * t;
    }
    modulus *= l;
    l -= 2;
  }
  const BigInt half = modulus / 2;
  for (auto& r : residue)
    if (r > half) r -= modulus;
  return IntPoly(std::move(residue));
}

RatPoly reversed_char_poly(const RatMatrix& m) {
  if (!m.square()) throw PreconditionError("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  BigInt delta = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const BigInt den = boost::multiprecision::denominator(m(i, j));
      delta = delta / boost::multiprecision::gcd(delta, den) * den;
    }
  IntMatrix im(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational v = m(i, j) * delta;
      im(i, j) = boost::multiprecision::numerator(v);
    }
  const IntPoly cp = integer_char_poly(im);
  std::vector<Rational> out(n + 1);
  BigInt dpow = 1;
  for (std::size_t j = 0; j <= n; ++j) {
    out[j] = Rational(cp.coeff(n - j), dpow);
    dpow *= delta;
  }
  return RatPoly(std::move(out));
}

}  // namespace towerlab
