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

#ifndef TOWERLAB_FQ_POLY_HPP
#define TOWERLAB_FQ_POLY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "towerlab/finite_field.hpp"

namespace towerlab {

/// Dense univariate polynomial over a FiniteField, little-endian codes.
class FqPoly {
 public:
  using Code = FiniteField::Code;

  FqPoly() = default;
  explicit FqPoly(FieldPtr field) : field_(std::move(field)) {}
  FqPoly(FieldPtr field, std::vector<Code> coeffs);

  static FqPoly constant(FieldPtr field, Code c);
  static FqPoly monomial(FieldPtr field, Code c, std::size_t deg);
  static FqPoly x(FieldPtr field) { return monomial(std::move(field), 1, 1); }
  /// From signed integers reduced into the prime subfield.
  static FqPoly from_ints(FieldPtr field, const std::vector<std::int64_t>& coeffs);

  const FieldPtr& field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  Code coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  Code leading() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<Code>& coefficients() const { return c_; }

  FqPoly operator+(const FqPoly& o) const;
  FqPoly operator-(const FqPoly& o) const;
  FqPoly operator-() const;
  FqPoly operator*(const FqPoly& o) const;
  FqPoly scaled(Code s) const;
  bool operator==(const FqPoly& o) const { return c_ == o.c_; }
  bool operator!=(const FqPoly& o) const { return c_ != o.c_; }

  Code eval(Code x) const;
  FqPoly derivative() const;
  FqPoly monic() const;
  /// p(t^d).
  FqPoly substitute_power(unsigned d) const;
  /// Polynomial with each coefficient replaced by its p-th root; requires only
  /// exponents divisible by p and returns sum c_{pi}^{1/p} t^i.
  FqPoly pth_root() const;

  /// "1,0,3"; coefficients are element codes.
  std::string str() const;

 private:
  void trim();

  FieldPtr field_;
  std::vector<Code> c_;
};

/// a = q*b + r, deg r < deg b.
std::pair<FqPoly, FqPoly> divmod(const FqPoly& a, const FqPoly& b);
FqPoly operator%(const FqPoly& a, const FqPoly& b);
FqPoly operator/(const FqPoly& a, const FqPoly& b);

/// Monic gcd (zero if both are zero).
FqPoly gcd(const FqPoly& a, const FqPoly& b);

FqPoly mulmod(const FqPoly& a, const FqPoly& b, const FqPoly& m);
FqPoly powmod(const FqPoly& base, const BigInt& e, const FqPoly& m);

/// Deterministic irreducibility test: gcd(x^{Q^i} - x, f) = 1 for i <= deg/2.
bool is_irreducible(const FqPoly& f);

/// Whether z is a primitive element of field[z]/(f) for irreducible f.
bool has_primitive_root_z(const FqPoly& f);

/// Largest e with pi^e | f; f nonzero.
int valuation(const FqPoly& f, const FqPoly& pi);

/// Monic irreducible factors with multiplicity, sorted by (degree, code order).
std::vector<std::pair<FqPoly, int>> factor(const FqPoly& f);

/// Index of a monic polynomial in (code order) used for deterministic sorting.
bool code_order_less(const FqPoly& a, const FqPoly& b);

/// Parses comma-separated coefficients. Tokens are signed integers reduced into the
/// prime subfield when the field is prime, and element codes otherwise.
FqPoly parse_fq_poly(const FieldPtr& field, const std::string& text);

}  // namespace towerlab

#endif  // TOWERLAB_FQ_POLY_HPP
