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

#ifndef TOWERLAB_POLYNOMIAL_HPP
#define TOWERLAB_POLYNOMIAL_HPP

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "towerlab/common.hpp"

namespace towerlab {

/**
 * Dense univariate polynomial over an exact ring R (BigInt or Rational),
 * little-endian: coefficient i multiplies T^i. The zero polynomial has no
 * stored coefficients and degree -1; otherwise the leading coefficient is
 * nonzero.
 */
template <class R>
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<R> coeffs) : c_(coeffs) { trim(); }
  explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(R v) { return Poly(std::vector<R>{std::move(v)}); }
  static Poly monomial(R v, std::size_t deg) {
    std::vector<R> c(deg + 1, R(0));
    c[deg] = std::move(v);
    return Poly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  R coeff(std::size_t i) const { return i < c_.size() ? c_[i] : R(0); }
  R leading() const { return c_.empty() ? R(0) : c_.back(); }
  const std::vector<R>& coefficients() const { return c_; }

  void set(std::size_t i, R v) {
    if (i >= c_.size()) c_.resize(i + 1, R(0));
    c_[i] = std::move(v);
    trim();
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const R& s) {
    for (auto& v : c_) v *= s;
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend Poly operator*(Poly a, const R& s) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<R> r(a.c_.size() + b.c_.size() - 1, R(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  R eval(const R& x) const {
    R acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  /// p(T^k).
  Poly substitute_power(unsigned k) const {
    if (is_zero() || k == 1) return *this;
    std::vector<R> r((c_.size() - 1) * k + 1, R(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i * k] = c_[i];
    return Poly(std::move(r));
  }

  /// T^n p(1/T); requires n >= degree().
  Poly reversed(std::size_t n) const {
    std::vector<R> r(n + 1, R(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[n - i] = c_[i];
    return Poly(std::move(r));
  }

  /// p mod T^n.
  Poly truncated(std::size_t n) const {
    if (c_.size() <= n) return *this;
    return Poly(std::vector<R>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(n)));
  }

  /// Comma-separated little-endian coefficients, "1,0,3" = 1 + 3T^2; zero is "0".
  std::string str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<R> c_;
};

using IntPoly = Poly<BigInt>;
using RatPoly = Poly<Rational>;

IntPoly parse_int_poly(const std::string& text);

RatPoly to_rational(const IntPoly& p);

/// Succeeds iff every coefficient is an integer.
std::optional<IntPoly> to_integer(const RatPoly& p);

/// Euclidean division over Q: a = q*b + r with deg r < deg b. Throws on b = 0.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);

/// Quotient a/b when b divides a in Z[T]; nullopt otherwise.
std::optional<IntPoly> exact_divide(const IntPoly& a, const IntPoly& b);

/// Largest m with b^m | a (a nonzero, b nonconstant).
int divisibility_multiplicity(const IntPoly& a, const IntPoly& b);

/// Power sums s_1..s_n of the inverse roots of p (p(0) = 1), via Newton's identities.
std::vector<BigInt> inverse_root_power_sums(const IntPoly& p, std::size_t n);

/// The degree-`deg` polynomial with p(0) = 1 whose inverse roots have power sums s_1..s_deg.
/// Throws InvariantError if the reconstruction is not integral.
IntPoly from_inverse_root_power_sums(const std::vector<BigInt>& sums, std::size_t deg);

}  // namespace towerlab

#endif  // TOWERLAB_POLYNOMIAL_HPP
