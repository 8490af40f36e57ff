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

#include "towerlab/fq_poly.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace towerlab {

namespace {

const FieldPtr& common_field(const FqPoly& a, const FqPoly& b) {
  if (!a.field() || !b.field()) throw PreconditionError("polynomial without a field");
  if (a.field() != b.field() && !a.field()->same(*b.field())) {
    throw PreconditionError("polynomials over different fields");
  }
  return a.field();
}

}  // namespace

FqPoly::FqPoly(FieldPtr field, std::vector<Code> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  if (!field_) throw PreconditionError("polynomial without a field");
  for (auto c : c_) {
    if (c >= field_->order()) throw PreconditionError("coefficient code outside the field");
  }
  trim();
}

FqPoly FqPoly::constant(FieldPtr field, Code c) { return FqPoly(std::move(field), {c}); }

FqPoly FqPoly::monomial(FieldPtr field, Code c, std::size_t deg) {
  std::vector<Code> v(deg + 1, 0);
  v[deg] = c;
  return FqPoly(std::move(field), std::move(v));
}

FqPoly FqPoly::from_ints(FieldPtr field, const std::vector<std::int64_t>& coeffs) {
  std::vector<Code> v;
  v.reserve(coeffs.size());
  for (auto c : coeffs) v.push_back(field->from_int(c));
  return FqPoly(std::move(field), std::move(v));
}

void FqPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FqPoly FqPoly::operator+(const FqPoly& o) const {
  const auto& f = common_field(*this, o);
  std::vector<Code> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = f->add(coeff(i), o.coeff(i));
  return FqPoly(f, std::move(r));
}

FqPoly FqPoly::operator-(const FqPoly& o) const {
  const auto& f = common_field(*this, o);
  std::vector<Code> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = f->sub(coeff(i), o.coeff(i));
  return FqPoly(f, std::move(r));
}

FqPoly FqPoly::operator-() const {
  FqPoly r = *this;
  for (auto& c : r.c_) c = field_->neg(c);
  return r;
}

FqPoly FqPoly::operator*(const FqPoly& o) const {
  const auto& f = common_field(*this, o);
  if (is_zero() || o.is_zero()) return FqPoly(f);
  std::vector<Code> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      r[i + j] = f->add(r[i + j], f->mul(c_[i], o.c_[j]));
    }
  }
  return FqPoly(f, std::move(r));
}

FqPoly FqPoly::scaled(Code s) const {
  FqPoly r = *this;
  for (auto& c : r.c_) c = field_->mul(c, s);
  r.trim();
  return r;
}

FqPoly::Code FqPoly::eval(Code x) const {
  Code acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, x), c_[i]);
  return acc;
}

FqPoly FqPoly::derivative() const {
  if (c_.size() <= 1) return FqPoly(field_);
  std::vector<Code> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) {
    r[i - 1] = field_->mul(field_->from_int(static_cast<std::int64_t>(i % field_->characteristic())), c_[i]);
  }
  return FqPoly(field_, std::move(r));
}

FqPoly FqPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(field_->inv(leading()));
}

FqPoly FqPoly::substitute_power(unsigned d) const {
  if (d == 0) throw PreconditionError("substitution power must be positive");
  if (is_zero() || d == 1) return *this;
  std::vector<Code> r((c_.size() - 1) * d + 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r[i * d] = c_[i];
  return FqPoly(field_, std::move(r));
}

FqPoly FqPoly::pth_root() const {
  const std::uint32_t p = field_->characteristic();
  std::vector<Code> r;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i % p != 0) {
      if (c_[i] != 0) throw PreconditionError("polynomial is not a p-th power");
      continue;
    }
    r.push_back(field_->pth_root(c_[i]));
  }
  return FqPoly(field_, std::move(r));
}

std::string FqPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
  return os.str();
}

std::pair<FqPoly, FqPoly> divmod(const FqPoly& a, const FqPoly& b) {
  const auto& f = common_field(a, b);
  if (b.is_zero()) throw PreconditionError("polynomial division by zero");
  if (a.degree() < b.degree()) return {FqPoly(f), a};
  std::vector<FqPoly::Code> rem = a.coefficients();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  const auto& bc = b.coefficients();
  std::vector<FqPoly::Code> quo(rem.size() - db, 0);
  const FqPoly::Code linv = f->inv(b.leading());
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i] == 0) continue;
    const FqPoly::Code c = f->mul(rem[i], linv);
    quo[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) {
      if (bc[j] != 0) rem[i - db + j] = f->sub(rem[i - db + j], f->mul(c, bc[j]));
    }
  }
  rem.resize(db);
  return {FqPoly(f, std::move(quo)), FqPoly(f, std::move(rem))};
}

FqPoly operator%(const FqPoly& a, const FqPoly& b) { return divmod(a, b).second; }
FqPoly operator/(const FqPoly& a, const FqPoly& b) { return divmod(a, b).first; }

FqPoly gcd(const FqPoly& a, const FqPoly& b) {
  FqPoly x = a, y = b;
  while (!y.is_zero()) {
    FqPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

FqPoly mulmod(const FqPoly& a, const FqPoly& b, const FqPoly& m) { return (a * b) % m; }

FqPoly powmod(const FqPoly& base, const BigInt& e, const FqPoly& m) {
  if (e < 0) throw PreconditionError("negative exponent");
  FqPoly result = FqPoly::constant(m.field(), 1) % m;
  FqPoly b = base % m;
  const unsigned bits = e == 0 ? 0 : static_cast<unsigned>(boost::multiprecision::msb(e)) + 1;
  for (unsigned i = bits; i-- > 0;) {
    result = mulmod(result, result, m);
    if (boost::multiprecision::bit_test(e, i)) result = mulmod(result, b, m);
  }
  return result;
}

bool is_irreducible(const FqPoly& f) {
  const int n = f.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  const FqPoly g = f.monic();
  const FqPoly x = FqPoly::x(f.field());
  const BigInt q(f.field()->order());
  FqPoly h = x % g;
  for (int i = 1; i <= n / 2; ++i) {
    h = powmod(h, q, g);
    if (!gcd(g, h - x).is_one()) return false;
  }
  return true;
}

bool has_primitive_root_z(const FqPoly& f) {
  const int m = f.degree();
  if (m < 1) throw PreconditionError("primitive test needs a nonconstant modulus");
  const BigInt n = ipow(BigInt(f.field()->order()), static_cast<unsigned>(m)) - 1;
  if (n >= (BigInt(1) << 63)) throw BudgetError("multiplicative order too large to factor");
  const FqPoly g = f.monic();
  const FqPoly x = FqPoly::x(f.field());
  if (m == 1) {
    const FqPoly::Code root = f.field()->neg(g.coeff(0));
    if (root == 0) return false;
    for (auto r : prime_factors(static_cast<std::uint64_t>(n))) {
      if (f.field()->pow(root, static_cast<std::uint64_t>(n) / r) == 1) return false;
    }
    return true;
  }
  for (auto r : prime_factors(static_cast<std::uint64_t>(n))) {
    if (powmod(x, n / r, g).is_one()) return false;
  }
  return true;
}

int valuation(const FqPoly& f, const FqPoly& pi) {
  if (f.is_zero()) throw PreconditionError("valuation of zero");
  if (pi.degree() < 1) throw PreconditionError("valuation needs a nonconstant polynomial");
  int e = 0;
  FqPoly cur = f;
  for (;;) {
    auto [q, r] = divmod(cur, pi);
    if (!r.is_zero()) return e;
    cur = std::move(q);
    ++e;
  }
}

bool code_order_less(const FqPoly& a, const FqPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    const auto ca = a.coeff(static_cast<std::size_t>(i)), cb = b.coeff(static_cast<std::size_t>(i));
    if (ca != cb) return ca < cb;
  }
  return false;
}

namespace {

std::vector<std::pair<FqPoly, int>> squarefree(const FqPoly& f) {
  std::vector<std::pair<FqPoly, int>> out;
  if (f.degree() < 1) return out;
  const int p = static_cast<int>(f.field()->characteristic());
  FqPoly c = gcd(f, f.derivative());
  FqPoly w = f.monic() / c;
  int i = 1;
  while (!w.is_one()) {
    FqPoly y = gcd(w, c);
    FqPoly fac = w / y;
    if (fac.degree() > 0) out.emplace_back(fac.monic(), i);
    w = std::move(y);
    c = c / w;
    ++i;
  }
  if (c.degree() > 0) {
    for (auto& [g, e] : squarefree(c.monic().pth_root())) out.emplace_back(g, e * p);
  }
  return out;
}

FqPoly random_poly(const FieldPtr& field, int deg, std::mt19937_64& rng) {
  std::vector<FqPoly::Code> c(static_cast<std::size_t>(deg));
  for (auto& v : c) v = static_cast<FqPoly::Code>(rng() % field->order());
  return FqPoly(field, std::move(c));
}

void equal_degree(const FqPoly& g, int d, std::mt19937_64& rng, std::vector<FqPoly>& out) {
  if (g.degree() == d) {
    out.push_back(g);
    return;
  }
  const auto& field = g.field();
  const BigInt q(field->order());
  for (;;) {
    FqPoly a = random_poly(field, g.degree(), rng);
    if (a.degree() < 1) continue;
    FqPoly b(field);
    if (field->characteristic() == 2) {
      const unsigned steps = field->absolute_degree() * static_cast<unsigned>(d);
      FqPoly t = a;
      b = a;
      for (unsigned i = 1; i < steps; ++i) {
        t = mulmod(t, t, g);
        b = b + t;
      }
    } else {
      b = powmod(a, (ipow(q, static_cast<unsigned>(d)) - 1) / 2, g) - FqPoly::constant(field, 1);
    }
    FqPoly h = gcd(g, b);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      equal_degree(h, d, rng, out);
      equal_degree((g / h).monic(), d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<FqPoly, int>> factor(const FqPoly& f) {
  if (f.is_zero()) throw PreconditionError("factorization of zero");
  std::vector<std::pair<FqPoly, int>> out;
  std::mt19937_64 rng(0x7f4a7c15u);
  const FqPoly x = FqPoly::x(f.field());
  const BigInt q(f.field()->order());
  for (auto& [sf, e] : squarefree(f)) {
    FqPoly g = sf;
    FqPoly h = x % g;
    for (int d = 1; g.degree() >= 2 * d; ++d) {
      h = powmod(h, q, g);
      FqPoly fac = gcd(g, h - x);
      if (fac.degree() > 0) {
        std::vector<FqPoly> parts;
        equal_degree(fac, d, rng, parts);
        for (auto& p : parts) out.emplace_back(p, e);
        g = (g / fac).monic();
        h = h % g;
      }
    }
    if (g.degree() > 0) out.emplace_back(g, e);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return code_order_less(a.first, b.first); });
  return out;
}

FqPoly parse_fq_poly(const FieldPtr& field, const std::string& text) {
  std::vector<FqPoly::Code> c;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    long long v = 0;
    std::size_t used = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::logic_error&) {
      throw PreconditionError("malformed coefficient '" + tok + "'");
    }
    if (tok.find_first_not_of(" \t", used) != std::string::npos) {
      throw PreconditionError("malformed coefficient '" + tok + "'");
    }
    if (field->is_prime_field()) {
      c.push_back(field->from_int(v));
    } else {
      if (v < 0 || static_cast<std::uint64_t>(v) >= field->order()) {
        throw PreconditionError("coefficient code '" + tok + "' outside the field");
      }
      c.push_back(static_cast<FqPoly::Code>(v));
    }
  }
  if (c.empty()) throw PreconditionError("empty polynomial");
  return FqPoly(field, std::move(c));
}

}  // namespace towerlab
