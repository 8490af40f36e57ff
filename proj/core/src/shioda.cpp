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

#include "towerlab/shioda.hpp"

#include <set>
#include <sstream>
#include <tuple>

namespace towerlab {

namespace {

BigInt det_int(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  BigInt s = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    const BigInt term = m(0, j) * det_int(minor);
    s += (j % 2 == 0) ? term : BigInt(-term);
  }
  return s;
}

}  // namespace

std::vector<Monomial> parse_monomials(const std::string& text) {
  std::vector<Monomial> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw PreconditionError("monomial '" + item + "' must read c:u,x,y");
    Monomial m;
    try {
      m.c = std::stoll(item.substr(0, colon));
      std::stringstream es(item.substr(colon + 1));
      std::string tok;
      std::vector<long long> e;
      while (std::getline(es, tok, ',')) e.push_back(std::stoll(tok));
      if (e.size() != 3) throw PreconditionError("monomial '" + item + "' needs three exponents");
      for (auto v : e)
        if (v < 0) throw PreconditionError("exponents must be nonnegative");
      m.u = static_cast<unsigned>(e[0]);
      m.x = static_cast<unsigned>(e[1]);
      m.y = static_cast<unsigned>(e[2]);
    } catch (const std::logic_error&) {
      throw PreconditionError("malformed monomial '" + item + "'");
    }
    out.push_back(m);
  }
  return out;
}

std::string format_monomials(const std::vector<Monomial>& ms) {
  std::ostringstream os;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    os << (i ? ";" : "") << ms[i].c << ":" << ms[i].u << "," << ms[i].x << "," << ms[i].y;
  }
  return os.str();
}

ShiodaDatum shioda_check(const std::vector<Monomial>& monomials, std::uint32_t p) {
  if (!is_prime_u64(p)) throw PreconditionError("p must be prime");
  std::set<std::tuple<unsigned, unsigned, unsigned>> seen;
  std::size_t nonzero = 0;
  for (const auto& m : monomials) {
    if (m.c % static_cast<std::int64_t>(p) == 0) continue;
    ++nonzero;
    if (!seen.insert({m.u, m.x, m.y}).second) throw PreconditionError("repeated monomial exponents");
  }
  if (nonzero != 4 || monomials.size() != 4) {
    throw PreconditionError("exactly four monomials nonzero mod p are required, got " + std::to_string(nonzero));
  }
  ShiodaDatum d;
  d.monomials = monomials;
  d.p = p;
  d.a = IntMatrix(4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& m = monomials[i];
    d.a(i, 0) = 1 - static_cast<long long>(m.u) - static_cast<long long>(m.x) - static_cast<long long>(m.y);
    d.a(i, 1) = m.u;
    d.a(i, 2) = m.x;
    d.a(i, 3) = m.y;
  }
  d.det = det_int(d.a);
  if (d.det == 0) {
    d.failure = "det A = 0";
    return d;
  }
  // adj(A)_{ji} = (-1)^{i+j} det(minor_{ij}); delta = |det| / gcd(|det|, entries of adj).
  BigInt g = abs(d.det);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      IntMatrix minor(3, 3);
      for (std::size_t r = 0, rr = 0; r < 4; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, cc = 0; c < 4; ++c)
          if (c != j) minor(rr, cc++) = d.a(r, c);
        ++rr;
      }
      g = boost::multiprecision::gcd(g, BigInt(abs(det_int(minor))));
    }
  d.delta = abs(d.det) / g;
  if (*d.delta % p == 0) {
    d.failure = "p divides delta";
    return d;
  }
  d.passes = true;
  return d;
}

}  // namespace towerlab
