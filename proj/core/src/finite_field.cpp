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

#include "towerlab/finite_field.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "towerlab/fq_poly.hpp"

namespace towerlab {

namespace {

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::string, FieldPtr>& cache() {
  static std::map<std::string, FieldPtr> c;
  return c;
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

}  // namespace

FiniteField::FiniteField(Private, std::uint32_t p, FieldPtr base, std::vector<Code> modulus)
    : p_(p), base_(std::move(base)), modulus_(std::move(modulus)) {
  if (!base_) {
    q_ = p_;
    k_ = 1;
    abs_k_ = 1;
    base_q_ = p_;
    place_ = {1};
  } else {
    k_ = static_cast<unsigned>(modulus_.size() - 1);
    abs_k_ = k_ * base_->absolute_degree();
    base_q_ = base_->order();
    std::uint64_t q = 1;
    place_.clear();
    for (unsigned i = 0; i < k_; ++i) {
      place_.push_back(static_cast<Code>(q));
      q *= base_q_;
      if (q >= (std::uint64_t{1} << 32)) throw PreconditionError("field order exceeds 2^32");
    }
    q_ = q;
  }
  if (q_ <= kTableLimit) build_tables();
}

FieldPtr FiniteField::prime(std::uint32_t p) {
  if (!is_prime_u64(p)) throw PreconditionError("characteristic " + std::to_string(p) + " is not prime");
  const std::string key = "p=" + std::to_string(p);
  {
    std::lock_guard lock(cache_mutex());
    auto it = cache().find(key);
    if (it != cache().end()) return it->second;
  }
  auto f = std::make_shared<const FiniteField>(Private{}, p, nullptr, std::vector<Code>{});
  std::lock_guard lock(cache_mutex());
  return cache().emplace(key, f).first->second;
}

FieldPtr FiniteField::over_prime(std::uint32_t p, const std::vector<std::int64_t>& modulus) {
  auto fp = prime(p);
  std::vector<Code> m;
  m.reserve(modulus.size());
  for (auto v : modulus) m.push_back(fp->from_int(v));
  return extension(fp, std::move(m));
}

FieldPtr FiniteField::extension(FieldPtr base, std::vector<Code> modulus, bool trusted) {
  if (!base) throw PreconditionError("extension of a null field");
  while (!modulus.empty() && modulus.back() == 0) modulus.pop_back();
  if (modulus.size() < 2) throw PreconditionError("extension modulus must have degree >= 1");
  if (modulus.back() != 1) throw PreconditionError("extension modulus must be monic");
  for (auto c : modulus) {
    if (c >= base->order()) throw PreconditionError("modulus coefficient outside the base field");
  }
  if (!trusted && !is_irreducible(FqPoly(base, modulus))) {
    throw PreconditionError("extension modulus is reducible");
  }
  return std::make_shared<const FiniteField>(Private{}, base->characteristic(), std::move(base),
                                             std::move(modulus));
}

FieldPtr FiniteField::standard_extension(const FieldPtr& base, unsigned m) {
  if (m == 0) throw PreconditionError("extension degree must be positive");
  if (m == 1) return base;
  const std::string key = base->str() + "#" + std::to_string(m);
  {
    std::lock_guard lock(cache_mutex());
    auto it = cache().find(key);
    if (it != cache().end()) return it->second;
  }
  const std::uint64_t bq = base->order();
  BigInt total = ipow(BigInt(bq), m);
  if (total >= (BigInt(1) << 32)) throw PreconditionError("field order exceeds 2^32");
  const std::uint64_t count = static_cast<std::uint64_t>(total);
  FieldPtr found;
  std::vector<Code> c(m + 1, 0);
  c[m] = 1;
  for (std::uint64_t idx = 1; idx < count && !found; ++idx) {
    std::uint64_t r = idx;
    for (unsigned i = 0; i < m; ++i) {
      c[i] = static_cast<Code>(r % bq);
      r /= bq;
    }
    if (c[0] == 0) continue;
    FqPoly f(base, c);
    if (is_irreducible(f) && has_primitive_root_z(f)) found = extension(base, c, true);
  }
  if (!found) throw InvariantError("no primitive modulus found");
  std::lock_guard lock(cache_mutex());
  return cache().emplace(key, found).first->second;
}

FieldPtr FiniteField::of_order(std::uint64_t q) {
  auto [p, k] = prime_power(q);
  auto fp = prime(p);
  return standard_extension(fp, k);
}

FieldPtr FiniteField::parse(const std::string& text) {
  std::stringstream ss(text);
  std::string part;
  FieldPtr field;
  while (std::getline(ss, part, ';')) {
    if (part.rfind("p=", 0) == 0) {
      if (field) throw PreconditionError("field string '" + text + "' repeats p=");
      try {
        field = prime(static_cast<std::uint32_t>(std::stoul(part.substr(2))));
      } catch (const std::logic_error&) {
        throw PreconditionError("malformed characteristic in '" + text + "'");
      }
    } else if (part.rfind("m=", 0) == 0) {
      if (!field) throw PreconditionError("field string '" + text + "' must start with p=");
      std::vector<Code> mod;
      std::stringstream ms(part.substr(2));
      std::string tok;
      while (std::getline(ms, tok, ',')) {
        long long v = 0;
        try {
          v = std::stoll(tok);
        } catch (const std::logic_error&) {
          throw PreconditionError("malformed modulus coefficient '" + tok + "'");
        }
        if (field->is_prime_field()) {
          mod.push_back(field->from_int(v));
        } else {
          if (v < 0 || static_cast<std::uint64_t>(v) >= field->order()) {
            throw PreconditionError("modulus code '" + tok + "' outside the base field");
          }
          mod.push_back(static_cast<Code>(v));
        }
      }
      field = extension(field, std::move(mod));
    } else {
      throw PreconditionError("unrecognised field string component '" + part + "'");
    }
  }
  if (!field) throw PreconditionError("empty field string");
  return field;
}

FiniteField::Code FiniteField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Code>(r);
}

std::vector<FiniteField::Code> FiniteField::digits(Code a) const {
  if (!base_) return {a};
  std::vector<Code> d(k_);
  for (unsigned i = 0; i < k_; ++i) {
    d[i] = static_cast<Code>(a % base_q_);
    a = static_cast<Code>(a / base_q_);
  }
  return d;
}

FiniteField::Code FiniteField::from_digits(std::span<const Code> d) const {
  if (!base_) return d.empty() ? 0 : d[0];
  std::uint64_t c = 0;
  for (std::size_t i = 0; i < d.size() && i < k_; ++i) c += std::uint64_t{d[i]} * place_[i];
  return static_cast<Code>(c);
}

std::vector<std::uint32_t> FiniteField::prime_coordinates(Code a) const {
  std::vector<std::uint32_t> out(abs_k_);
  for (unsigned i = 0; i < abs_k_; ++i) {
    out[i] = a % p_;
    a /= p_;
  }
  return out;
}

FiniteField::Code FiniteField::slow_add(Code a, Code b) const {
  if (!base_) {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Code>(s >= p_ ? s - p_ : s);
  }
  std::uint64_t out = 0;
  for (unsigned i = 0; i < k_; ++i) {
    Code da = static_cast<Code>(a % base_q_), db = static_cast<Code>(b % base_q_);
    a = static_cast<Code>(a / base_q_);
    b = static_cast<Code>(b / base_q_);
    out += std::uint64_t{base_->add(da, db)} * place_[i];
  }
  return static_cast<Code>(out);
}

FiniteField::Code FiniteField::add(Code a, Code b) const {
  if (!base_) return slow_add(a, b);
  if (a == 0) return b;
  if (b == 0) return a;
  if (exp_.empty()) return slow_add(a, b);
  const std::uint64_t n = q_ - 1;
  const Code la = log_[a], lb = log_[b];
  const Code d = lb >= la ? lb - la : static_cast<Code>(lb + n - la);
  const Code z = zech_[d];
  if (z == kNoLog) return 0;
  return exp_[(std::uint64_t{la} + z) % n];
}

FiniteField::Code FiniteField::neg(Code a) const {
  if (a == 0) return 0;
  if (!base_) return p_ - a;
  if (p_ == 2) return a;
  if (!exp_.empty()) return exp_[(std::uint64_t{log_[a]} + (q_ - 1) / 2) % (q_ - 1)];
  std::uint64_t out = 0;
  for (unsigned i = 0; i < k_; ++i) {
    out += std::uint64_t{base_->neg(static_cast<Code>(a % base_q_))} * place_[i];
    a = static_cast<Code>(a / base_q_);
  }
  return static_cast<Code>(out);
}

FiniteField::Code FiniteField::slow_mul(Code a, Code b) const {
  if (!base_) return static_cast<Code>(mulmod_u64(a, b, p_));
  auto da = digits(a), db = digits(b);
  std::vector<Code> prod(2 * k_ - 1, 0);
  for (unsigned i = 0; i < k_; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < k_; ++j) {
      if (db[j] == 0) continue;
      prod[i + j] = base_->add(prod[i + j], base_->mul(da[i], db[j]));
    }
  }
  for (std::size_t i = prod.size(); i-- > k_;) {
    const Code c = prod[i];
    if (c == 0) continue;
    for (unsigned j = 0; j < k_; ++j) {
      prod[i - k_ + j] = base_->sub(prod[i - k_ + j], base_->mul(c, modulus_[j]));
    }
  }
  return from_digits(std::span<const Code>(prod.data(), k_));
}

FiniteField::Code FiniteField::mul_by_z(Code a) const {
  auto d = digits(a);
  const Code top = d[k_ - 1];
  for (unsigned i = k_ - 1; i > 0; --i) d[i] = d[i - 1];
  d[0] = 0;
  if (top != 0) {
    for (unsigned j = 0; j < k_; ++j) d[j] = base_->sub(d[j], base_->mul(top, modulus_[j]));
  }
  return from_digits(d);
}

FiniteField::Code FiniteField::mul(Code a, Code b) const {
  if (a == 0 || b == 0) return 0;
  if (!base_) return static_cast<Code>(mulmod_u64(a, b, p_));
  if (!exp_.empty()) {
    const std::uint64_t s = std::uint64_t{log_[a]} + log_[b];
    return exp_[s >= q_ - 1 ? s - (q_ - 1) : s];
  }
  return slow_mul(a, b);
}

FiniteField::Code FiniteField::pow(Code a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  if (!exp_.empty()) return exp_[mulmod_u64(log_[a], e % (q_ - 1), q_ - 1)];
  Code result = 1, b = a;
  while (e) {
    if (e & 1) result = mul(result, b);
    e >>= 1;
    if (e) b = mul(b, b);
  }
  return result;
}

FiniteField::Code FiniteField::pow(Code a, const BigInt& e) const {
  if (e < 0) {
    if (a == 0) throw PreconditionError("zero has no inverse");
    return pow(inv(a), -e);
  }
  const BigInt r = e % BigInt(q_ - 1);
  if (e != 0 && r == 0) return a == 0 ? 0 : 1;
  return pow(a, static_cast<std::uint64_t>(r));
}

FiniteField::Code FiniteField::inv(Code a) const {
  if (a == 0) throw PreconditionError("zero has no inverse");
  if (!exp_.empty()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  return pow(a, q_ - 2);
}

int FiniteField::quadratic_character(Code a) const {
  if (p_ == 2) throw PreconditionError("quadratic character needs odd characteristic");
  if (a == 0) return 0;
  if (!exp_.empty()) return (log_[a] & 1) ? -1 : 1;
  return pow(a, (q_ - 1) / 2) == 1 ? 1 : -1;
}

FiniteField::Code FiniteField::absolute_trace(Code a) const {
  Code acc = 0, cur = a;
  for (unsigned i = 0; i < abs_k_; ++i) {
    acc = add(acc, cur);
    cur = pow(cur, p_);
  }
  if (acc >= p_) throw InvariantError("trace left the prime subfield");
  return acc;
}

FiniteField::Code FiniteField::pth_root(Code a) const { return pow(a, q_ / p_); }

void FiniteField::build_tables() {
  const std::uint64_t n = q_ - 1;
  if (n == 0) return;
  const auto factors = prime_factors(n);
  auto order_is_full = [&](Code g) {
    for (auto r : factors) {
      if (pow(g, n / r) == 1) return false;
    }
    return true;
  };
  Code g = 0;
  const bool z_candidate = base_ && k_ > 0;
  if (z_candidate && order_is_full(static_cast<Code>(base_q_))) {
    g = static_cast<Code>(base_q_);
  } else {
    for (std::uint64_t c = 1; c < q_; ++c) {
      if (order_is_full(static_cast<Code>(c))) {
        g = static_cast<Code>(c);
        break;
      }
    }
  }
  if (g == 0) throw InvariantError("no multiplicative generator");
  std::vector<Code> e(n), l(q_, kNoLog);
  Code cur = 1;
  const bool by_z = base_ && g == base_q_;
  for (std::uint64_t i = 0; i < n; ++i) {
    e[i] = cur;
    l[cur] = static_cast<Code>(i);
    cur = by_z ? mul_by_z(cur) : slow_mul(cur, g);
  }
  if (cur != 1) throw InvariantError("generator order mismatch");
  std::vector<Code> z(n);
  const Code one_in_base = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    const Code x = e[i];
    Code s;
    if (!base_) {
      s = x + 1 == p_ ? 0 : x + 1;
    } else {
      const Code d0 = static_cast<Code>(x % base_q_);
      s = x - d0 + base_->add(d0, one_in_base);
    }
    z[i] = s == 0 ? kNoLog : l[s];
  }
  generator_ = g;
  exp_ = std::move(e);
  log_ = std::move(l);
  zech_ = std::move(z);
}

std::string FiniteField::str() const {
  if (!base_) return "p=" + std::to_string(p_);
  std::ostringstream os;
  os << base_->str() << ";m=";
  for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
  return os.str();
}

FieldElement::FieldElement(FieldPtr field, Code code) : field_(std::move(field)), code_(code) {
  if (!field_) throw PreconditionError("element of a null field");
  if (code_ >= field_->order()) throw PreconditionError("element code outside the field");
}

FieldElement FieldElement::from_prime_coordinates(FieldPtr field, const std::vector<std::int64_t>& c) {
  if (c.size() > field->absolute_degree()) throw PreconditionError("too many coordinates");
  std::uint64_t code = 0, place = 1;
  for (auto v : c) {
    code += std::uint64_t{field->from_int(v)} * place;
    place *= field->characteristic();
  }
  return {std::move(field), static_cast<Code>(code)};
}

void FieldElement::check_same(const FieldElement& o) const {
  if (!field_->same(*o.field_)) throw PreconditionError("elements of different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->add(code_, o.code_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->sub(code_, o.code_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->mul(code_, o.code_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->div(code_, o.code_)};
}
bool FieldElement::operator==(const FieldElement& o) const {
  return code_ == o.code_ && field_->same(*o.field_);
}

int quadratic_character(const FieldElement& x) { return x.field()->quadratic_character(x.code()); }
std::uint32_t absolute_trace(const FieldElement& x) { return x.field()->absolute_trace(x.code()); }

}  // namespace towerlab
