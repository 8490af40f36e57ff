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

#ifndef TOWERLAB_FINITE_FIELD_HPP
#define TOWERLAB_FINITE_FIELD_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "towerlab/common.hpp"

namespace towerlab {

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

/**
 * A finite field presented as a quotient ring: either the prime field F_p,
 * or base[z]/(m(z)) for a monic irreducible m over another FiniteField.
 * F_p[x]/(m(x)) is the one-level case; residue fields F_q[t]/(pi(t)) of
 * places are the two-level case and are never rewritten over F_p.
 *
 * Elements are 32-bit codes. For base[z]/(m) of degree k, the code of
 * d_0 + d_1 z + ... + d_{k-1} z^{k-1} is sum d_i * |base|^i, where d_i are
 * base codes. The prime subfield therefore occupies codes 0..p-1 at every
 * level and an element of the base has the same code in the extension.
 *
 * Up to kTableLimit elements the constructor fixes a generator and builds
 * exponent, logarithm and Zech tables, making multiplication, addition of
 * nonzero elements and the quadratic character O(1) lookups. Larger fields
 * fall back to polynomial arithmetic. Instances are immutable once built.
 */
class FiniteField {
 public:
  using Code = std::uint32_t;
  static constexpr Code kNoLog = 0xFFFFFFFFu;
  static constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 22;

  static FieldPtr prime(std::uint32_t p);

  /// F_p[x]/(modulus); modulus little-endian over F_p, monic, irreducible (checked).
  static FieldPtr over_prime(std::uint32_t p, const std::vector<std::int64_t>& modulus);

  /// base[z]/(modulus); modulus little-endian base codes, monic, irreducible (checked
  /// unless `trusted`).
  static FieldPtr extension(FieldPtr base, std::vector<Code> modulus, bool trusted = false);

  /// Degree-m extension of `base` by the first modulus (in code order) that is irreducible
  /// and has z as a primitive element. Cached per (base, m).
  static FieldPtr standard_extension(const FieldPtr& base, unsigned m);

  /// F_q as the prime field or the standard extension of F_p.
  static FieldPtr of_order(std::uint64_t q);

  /// "p=5" or "p=5;m=2,3,1" (modulus little-endian). Repeated ";m=" fields nest.
  static FieldPtr parse(const std::string& text);

  std::uint32_t characteristic() const { return p_; }
  std::uint64_t order() const { return q_; }
  unsigned degree() const { return k_; }
  unsigned absolute_degree() const { return abs_k_; }
  const FieldPtr& base() const { return base_; }
  bool is_prime_field() const { return base_ == nullptr; }
  const std::vector<Code>& modulus() const { return modulus_; }
  bool has_tables() const { return !exp_.empty(); }

  /// Generator of the multiplicative group (only when tables exist).
  Code generator() const { return generator_; }

  Code add(Code a, Code b) const;
  Code sub(Code a, Code b) const { return add(a, neg(b)); }
  Code neg(Code a) const;
  Code mul(Code a, Code b) const;
  Code inv(Code a) const;
  Code div(Code a, Code b) const { return mul(a, inv(b)); }
  Code pow(Code a, std::uint64_t e) const;
  Code pow(Code a, const BigInt& e) const;

  /// Image of an integer in the prime subfield.
  Code from_int(std::int64_t v) const;

  /// 0 for zero, 1 for nonzero squares, -1 otherwise. Requires odd characteristic.
  int quadratic_character(Code a) const;

  /// a + a^p + ... + a^{p^{n-1}}, n the absolute degree; returned as a code in 0..p-1.
  Code absolute_trace(Code a) const;

  /// a^{1/p}.
  Code pth_root(Code a) const;

  /// Coordinates over the immediate base (length degree()).
  std::vector<Code> digits(Code a) const;
  Code from_digits(std::span<const Code> d) const;

  /// Coordinates over F_p after flattening every level, little-endian.
  std::vector<std::uint32_t> prime_coordinates(Code a) const;

  /// Logarithm to the table generator; kNoLog for zero. Requires tables.
  Code log(Code a) const { return log_[a]; }
  Code exp(std::uint64_t n) const { return exp_[n % (q_ - 1)]; }

  std::string str() const;

  bool same(const FiniteField& o) const { return this == &o || str() == o.str(); }

  /// Bytes held by lookup tables (reporting only).
  std::size_t table_bytes() const {
    return (exp_.size() + log_.size() + zech_.size()) * sizeof(Code);
  }

 private:
  struct Private {};

 public:
  FiniteField(Private, std::uint32_t p, FieldPtr base, std::vector<Code> modulus);

 private:
  Code slow_mul(Code a, Code b) const;
  Code slow_add(Code a, Code b) const;
  Code mul_by_z(Code a) const;
  void build_tables();

  std::uint32_t p_ = 0;
  std::uint64_t q_ = 0;
  unsigned k_ = 1;
  unsigned abs_k_ = 1;
  std::uint64_t base_q_ = 0;
  FieldPtr base_;
  std::vector<Code> modulus_;
  std::vector<Code> place_;  // base_q_^i

  Code generator_ = 0;
  std::vector<Code> exp_;
  std::vector<Code> log_;
  std::vector<Code> zech_;
};

/// An element together with the field that owns it.
class FieldElement {
 public:
  using Code = FiniteField::Code;

  FieldElement(FieldPtr field, Code code);
  static FieldElement from_prime_coordinates(FieldPtr field, const std::vector<std::int64_t>& c);

  const FieldPtr& field() const { return field_; }
  Code code() const { return code_; }
  bool is_zero() const { return code_ == 0; }
  std::vector<std::uint32_t> coefficients() const { return field_->prime_coordinates(code_); }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const { return {field_, field_->neg(code_)}; }
  FieldElement pow(std::uint64_t e) const { return {field_, field_->pow(code_, e)}; }
  bool operator==(const FieldElement& o) const;

 private:
  void check_same(const FieldElement& o) const;

  FieldPtr field_;
  Code code_;
};

int quadratic_character(const FieldElement& x);
std::uint32_t absolute_trace(const FieldElement& x);

}  // namespace towerlab

#endif  // TOWERLAB_FINITE_FIELD_HPP
