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

#include "towerlab/common.hpp"

#include <cstdlib>
#include <sstream>

namespace towerlab {

void Budget::require(const BigInt& count, const std::string& what) const {
  if (count > max_enumeration) {
    throw BudgetError(what + " needs " + to_string(count) + " enumerations, budget is " +
                      std::to_string(max_enumeration));
  }
}

Budget Budget::parse(const std::string& text, Budget base) {
  auto parse_u64 = [&](const std::string& s) -> std::uint64_t {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(s, &pos);
    } catch (const std::exception&) {
      throw PreconditionError("malformed budget value '" + s + "'");
    }
    if (pos != s.size()) throw PreconditionError("malformed budget value '" + s + "'");
    return v;
  };
  if (text.find('=') == std::string::npos) {
    base.max_enumeration = parse_u64(text);
    return base;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw PreconditionError("malformed budget item '" + item + "'");
    const std::string key = item.substr(0, eq);
    const std::uint64_t v = parse_u64(item.substr(eq + 1));
    if (key == "enum" || key == "field") {
      base.max_enumeration = v;
    } else if (key == "degree") {
      base.max_place_degree = static_cast<int>(v);
    } else {
      throw PreconditionError("unknown budget key '" + key + "'");
    }
  }
  return base;
}

Budget Budget::from_environment() {
  if (const char* env = std::getenv("TOWERLAB_BUDGET"); env != nullptr && *env != '\0') {
    return parse(env);
  }
  return {};
}

unsigned default_threads() {
  const unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

BigInt ipow(const BigInt& base, unsigned exponent) {
  BigInt result = 1;
  BigInt b = base;
  while (exponent) {
    if (exponent & 1u) result *= b;
    exponent >>= 1;
    if (exponent) b *= b;
  }
  return result;
}

std::uint64_t ipow_u64(std::uint64_t base, unsigned exponent) {
  std::uint64_t result = 1;
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

namespace {

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t s : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % s == 0) return n == s;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::pair<std::uint32_t, unsigned> prime_power(std::uint64_t q) {
  if (q < 2) throw PreconditionError("field order must be at least 2");
  const auto fs = prime_factors(q);
  if (fs.size() != 1) throw PreconditionError("field order " + std::to_string(q) + " is not a prime power");
  unsigned k = 0;
  std::uint64_t r = q;
  while (r % fs[0] == 0) {
    r /= fs[0];
    ++k;
  }
  if (fs[0] > 0xFFFFFFFFull) throw PreconditionError("characteristic too large");
  return {static_cast<std::uint32_t>(fs[0]), k};
}

int mobius(std::uint64_t n) {
  int sign = 1;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      n /= f;
      if (n % f == 0) return 0;
      sign = -sign;
    }
  }
  if (n > 1) sign = -sign;
  return sign;
}

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const Rational& v) {
  const BigInt num = boost::multiprecision::numerator(v);
  const BigInt den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace towerlab
