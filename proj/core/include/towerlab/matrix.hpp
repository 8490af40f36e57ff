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


#ifndef TOWERLAB_MATRIX_HPP
#define TOWERLAB_MATRIX_HPP

#include <optional>
#include <vector>

#include "towerlab/common.hpp"
#include "towerlab/polynomial.hpp"

namespace towerlab {

/// Dense row-major matrix over an exact ring.
template <class R>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols, R(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = R(1);
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  bool square() const { return r_ == c_; }

  R& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  Matrix transpose() const {
    Matrix t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  bool is_zero() const {
    for (const auto& v : a_)
      if (v != 0) return false;
    return true;
  }

  Matrix scaled(const R& s) const {
    Matrix m = *this;
    for (auto& v : m.a_) v *= s;
    return m;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    require_shape(a, b);
    for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] += b.a_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    require_shape(a, b);
    for (std::size_t i = 0; i < a.a_.size(); ++i) a.a_[i] -= b.a_[i];
    return a;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.c_ != b.r_) throw PreconditionError("matrix shapes do not compose");
    Matrix m(a.r_, b.c_);
    for (std::size_t i = 0; i < a.r_; ++i)
      for (std::size_t k = 0; k < a.c_; ++k) {
        const R& x = a(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.c_; ++j)
          if (b(k, j) != 0) m(i, j) += x * b(k, j);
      }
    return m;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  static void require_shape(const Matrix& a, const Matrix& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) throw PreconditionError("matrix shapes differ");
  }

  std::size_t r_ = 0, c_ = 0;
  std::vector<R> a_;
};

using RatMatrix = Matrix<Rational>;
using IntMatrix = Matrix<BigInt>;

Rational determinant(const RatMatrix& m);

/// nullopt when singular.
std::optional<RatMatrix> inverse(const RatMatrix& m);

/// det(x I - M) for an integer matrix, by Hessenberg reduction modulo word-size
/// primes and Chinese remaindering against a Hadamard-type coefficient bound.
IntPoly integer_char_poly(const IntMatrix& m);

/// det(1 - T M) over Q. The constant term is 1.
RatPoly reversed_char_poly(const RatMatrix& m);

}  // namespace towerlab

#endif  // TOWERLAB_MATRIX_HPP
