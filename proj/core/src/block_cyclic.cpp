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

#include "towerlab/block_cyclic.hpp"

#include <random>

namespace towerlab {

namespace {

int wrap(int i, int a) { return ((i % a) + a) % a; }

RatMatrix random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng) {
  RatMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<long long>(rng() % 19) - 9;
  return m;
}

/// Invertible n x n draw; a singular draw is retried from a sub-seed derived
/// from (seed, slot, attempt).
RatMatrix random_invertible(std::size_t n, std::uint64_t seed, std::uint64_t slot) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    std::seed_seq seq{seed & 0xFFFFFFFFu, seed >> 32, slot, attempt};
    std::mt19937_64 rng(seq);
    RatMatrix m = random_matrix(n, n, rng);
    if (determinant(m) != 0) return m;
  }
}

RatMatrix must_invert(const RatMatrix& m) {
  auto inv = inverse(m);
  if (!inv) throw InvariantError("expected an invertible block");
  return *inv;
}

bool is_symmetric(const RatMatrix& m) { return m == m.transpose(); }

RatPoly one() { return RatPoly{Rational(1)}; }

RatPoly one_minus_monomial(const Rational& c, std::size_t deg) {
  RatPoly p = RatPoly::monomial(-c, deg);
  p += one();
  return p;
}

DivisibilityReport divisibility(const RatPoly& cp, RatPoly predicted) {
  DivisibilityReport r;
  r.charpoly = cp;
  r.predicted_factor = std::move(predicted);
  auto [q, rem] = divmod(cp, r.predicted_factor);
  r.divides = rem.is_zero();
  if (r.divides) r.quotient = q;
  return r;
}

std::optional<std::string> structural_failure(const BlockCyclicOperator& op, bool need_invertible) {
  if (op.a < 1 || op.block_dims.size() != static_cast<std::size_t>(op.a)) return "block count equals a";
  if (!op.phi.square() || op.phi.rows() != op.dim()) return "phi is a square matrix on V";
  for (int i = 0; i < op.a; ++i) {
    const std::size_t ri = op.offset(wrap(i + 1, op.a)), ci = op.offset(i);
    for (std::size_t r = 0; r < op.dim(); ++r)
      for (std::size_t c = ci; c < ci + op.block_dims[i]; ++c) {
        const bool inside = r >= ri && r < ri + op.block_dims[wrap(i + 1, op.a)];
        if (!inside && op.phi(r, c) != 0) return "phi maps W_i into W_{i+1}";
      }
  }
  if (need_invertible) {
    for (std::size_t d : op.block_dims)
      if (d != op.block_dims[0]) return "all blocks have equal dimension";
    for (int i = 0; i < op.a; ++i)
      if (determinant(op.map_block(i)) == 0) return "phi is invertible";
  }
  return std::nullopt;
}

bool form_is_invariant(const BlockCyclicOperator& op) {
  return op.phi.transpose() * op.gram * op.phi == op.gram.scaled(op.weight_twist);
}

}  // namespace

std::size_t BlockCyclicOperator::dim() const {
  std::size_t s = 0;
  for (auto d : block_dims) s += d;
  return s;
}

std::size_t BlockCyclicOperator::offset(int i) const {
  std::size_t s = 0;
  for (int k = 0; k < i; ++k) s += block_dims[k];
  return s;
}

RatMatrix BlockCyclicOperator::map_block(int i) const {
  const int j = wrap(i + 1, a);
  return phi.block(offset(j), offset(i), block_dims[j], block_dims[i]);
}

RatMatrix BlockCyclicOperator::gram_block(int i, int j) const {
  i = wrap(i, a);
  j = wrap(j, a);
  return gram.block(offset(i), offset(j), block_dims[i], block_dims[j]);
}

RatMatrix BlockCyclicOperator::phi_a_on_w0() const {
  RatMatrix m = RatMatrix::identity(block_dims[0]);
  for (int i = 0; i < a; ++i) m = map_block(i) * m;
  return m;
}

BlockCyclicOperator make_block_cyclic(const std::vector<std::size_t>& dims, const std::vector<RatMatrix>& maps,
                                      RatMatrix gram, int epsilon) {
  if (dims.empty()) throw PreconditionError("at least one block is required");
  if (maps.size() != dims.size()) throw PreconditionError("one map per block is required");
  if (epsilon != 1 && epsilon != -1) throw PreconditionError("epsilon must be +1 or -1");
  BlockCyclicOperator op;
  op.a = static_cast<int>(dims.size());
  op.block_dims = dims;
  op.epsilon = epsilon;
  const std::size_t n = op.dim();
  op.phi = RatMatrix(n, n);
  for (int k = 1; k <= op.a; ++k) {
    const int src = k - 1, dst = wrap(k, op.a);
    const RatMatrix& m = maps[static_cast<std::size_t>(k - 1)];
    if (m.rows() != dims[dst] || m.cols() != dims[src]) throw PreconditionError("map shape does not match blocks");
    op.phi.set_block(op.offset(dst), op.offset(src), m);
  }
  op.gram = gram.rows() == 0 && n != 0 ? RatMatrix(n, n) : std::move(gram);
  if (op.gram.rows() != n || op.gram.cols() != n) throw PreconditionError("gram shape does not match V");
  return op;
}

RatPoly char_poly(const BlockCyclicOperator& op) { return reversed_char_poly(op.phi); }

bool verify_cyclic_identity(const BlockCyclicOperator& op) {
  if (auto f = structural_failure(op, false)) throw HypothesisError(*f);
  const RatPoly lhs = char_poly(op);
  const RatPoly rhs = reversed_char_poly(op.phi_a_on_w0()).substitute_power(static_cast<unsigned>(op.a));
  return lhs == rhs;
}

BlockCyclicOperator build_paired_instance(int a, std::size_t n, int epsilon, std::uint64_t seed) {
  if (a < 2 || a % 2 != 0) throw PreconditionError("a must be even and at least 2");
  if (n < 1) throw PreconditionError("N must be at least 1");
  if (epsilon != 1 && epsilon != -1) throw PreconditionError("epsilon must be +1 or -1");
  const int h = a / 2;
  // maps[k-1] : W_{k-1} -> W_k for k = 1..a-1; maps[a-1] : W_{a-1} -> W_0.
  std::vector<RatMatrix> maps(static_cast<std::size_t>(a));
  for (int k = 1; k < a; ++k) maps[k - 1] = random_invertible(n, seed, static_cast<std::uint64_t>(k));
  const RatMatrix g0 = random_invertible(n, seed, static_cast<std::uint64_t>(a));

  RatMatrix lower = RatMatrix::identity(n);  // W_0 -> W_h
  for (int k = 1; k <= h; ++k) lower = maps[k - 1] * lower;
  RatMatrix upper = RatMatrix::identity(n);  // W_h -> W_{a-1}
  for (int k = h + 1; k < a; ++k) upper = maps[k - 1] * upper;
  // The closing map W_h -> W_0 is forced by invariance of the W_0 x W_h pairing.
  const RatMatrix g0_inv = must_invert(g0);
  const RatMatrix closing =
      (g0_inv.transpose() * must_invert(lower).transpose() * g0).scaled(Rational(epsilon));
  maps[a - 1] = closing * must_invert(upper);

  const std::vector<std::size_t> dims(static_cast<std::size_t>(a), n);
  BlockCyclicOperator op = make_block_cyclic(dims, maps, RatMatrix(), epsilon);
  RatMatrix pair = g0;
  for (int i = 0; i < h; ++i) {
    if (i > 0) {
      pair = must_invert(maps[i - 1]).transpose() * pair * must_invert(maps[i + h - 1]);
    }
    op.gram.set_block(op.offset(i), op.offset(i + h), pair);
    op.gram.set_block(op.offset(i + h), op.offset(i), pair.transpose().scaled(Rational(epsilon)));
  }
  if (!form_is_invariant(op)) throw InvariantError("constructed form is not phi-invariant");
  if (op.gram.transpose() != op.gram.scaled(Rational(epsilon))) {
    throw InvariantError("constructed form has the wrong symmetry");
  }
  return op;
}

BlockCyclicOperator build_instance(int a, std::size_t n, int epsilon, std::uint64_t seed) {
  if (n % 2 == 0) throw PreconditionError("N must be odd");
  BlockCyclicOperator op = build_paired_instance(a, n, epsilon, seed);
  if (auto f = prop_la_failure(op)) throw InvariantError("constructed instance fails: " + *f);
  return op;
}

std::optional<std::string> prop_la_failure(const BlockCyclicOperator& op) {
  if (auto f = structural_failure(op, true)) return f;
  if (op.a % 2 != 0) return std::string("a is even");
  if (op.n() % 2 == 0) return std::string("N is odd");
  if (op.epsilon != 1 && op.epsilon != -1) return std::string("epsilon is +1 or -1");
  if (op.gram.transpose() != op.gram.scaled(Rational(op.epsilon))) {
    return std::string("form is symmetric (epsilon=1) or skew-symmetric (epsilon=-1)");
  }
  if (op.weight_twist != 1 || !form_is_invariant(op)) return std::string("form is phi-invariant");
  for (int i = 0; i < op.a; ++i) {
    bool any = false;
    for (int j = 0; j < op.a; ++j) any = any || !op.gram_block(i, j).is_zero();
    if (!any) return std::string("form is non-degenerate");
  }
  if (determinant(op.gram_block(op.a / 2, 0)) == 0) return std::string("form induces W_{a/2} = W_0^*");
  if (determinant(op.gram) == 0) return std::string("form is non-degenerate");
  return std::nullopt;
}

DivisibilityReport verify_prop_la(const BlockCyclicOperator& op) {
  if (auto f = prop_la_failure(op)) throw HypothesisError(*f);
  return divisibility(char_poly(op), one_minus_monomial(Rational(op.epsilon), static_cast<std::size_t>(op.a)));
}

bool spectrum_inversion_closed(const RatMatrix& m) {
  const std::size_t n = m.rows();
  const RatPoly rev = reversed_char_poly(m);  // det(1 - T M) = T^N p(1/T)
  const RatPoly p = rev.reversed(n);          // det(T - M)
  return rev == p * p.coeff(0);
}

std::pair<bool, bool> verify_eigen_and_det_lemmas(const BlockCyclicOperator& op) {
  if (auto f = prop_la_failure(op)) throw HypothesisError(*f);
  const RatMatrix phia = op.phi_a_on_w0();
  const Rational expected = (op.n() % 2 == 1 && op.epsilon == -1) ? Rational(-1) : Rational(1);
  return {spectrum_inversion_closed(phia), determinant(phia) == expected};
}

bool verify_asymmetry(const BlockCyclicOperator& op) {
  if (auto f = prop_la_failure(op)) throw HypothesisError(*f);
  const RatMatrix m = op.phi_a_on_w0().scaled(Rational(op.epsilon));
  return determinant(m) == 1 && spectrum_inversion_closed(m);
}

BlockCyclicOperator build_la_variant_instance(int a, std::size_t n, int det_sign, std::uint64_t seed) {
  if (a < 1) throw PreconditionError("a must be at least 1");
  if (n < 1) throw PreconditionError("N must be at least 1");
  if (det_sign != 1 && det_sign != -1) throw PreconditionError("determinant sign must be +1 or -1");
  std::vector<RatMatrix> maps(static_cast<std::size_t>(a));
  for (int k = 1; k < a; ++k) maps[k - 1] = random_invertible(n, seed, static_cast<std::uint64_t>(k));

  std::seed_seq seq{seed & 0xFFFFFFFFu, seed >> 32, std::uint64_t{0x5f}};
  std::mt19937_64 rng(seq);
  RatMatrix g0;
  for (;;) {
    RatMatrix s = random_matrix(n, n, rng);
    g0 = s + s.transpose();
    if (determinant(g0) != 0) break;
  }
  // Reflections x -> x - 2 <v,x>/<v,v> v, an odd number exactly when det_sign = -1.
  std::size_t reflections = 1 + rng() % n;
  if ((reflections % 2 == 1) != (det_sign == -1)) ++reflections;
  RatMatrix orth = RatMatrix::identity(n);
  for (std::size_t r = 0; r < reflections; ++r) {
    RatMatrix v;
    Rational vv;
    for (;;) {
      v = random_matrix(n, 1, rng);
      vv = (v.transpose() * g0 * v)(0, 0);
      if (vv != 0) break;
    }
    const RatMatrix refl = RatMatrix::identity(n) - (v * v.transpose() * g0).scaled(Rational(2) / vv);
    orth = refl * orth;
  }
  RatMatrix chain = RatMatrix::identity(n);
  for (int k = 1; k < a; ++k) chain = maps[k - 1] * chain;
  maps[a - 1] = orth * must_invert(chain);

  const std::vector<std::size_t> dims(static_cast<std::size_t>(a), n);
  BlockCyclicOperator op = make_block_cyclic(dims, maps, RatMatrix(), 1);
  RatMatrix g = g0;
  for (int i = 0; i < a; ++i) {
    if (i > 0) {
      const RatMatrix inv = must_invert(maps[i - 1]);
      g = inv.transpose() * g * inv;
    }
    op.gram.set_block(op.offset(i), op.offset(i), g);
  }
  op.epsilon = n % 2 == 1 ? det_sign : 1;
  if (!form_is_invariant(op)) throw InvariantError("constructed form is not phi-invariant");
  if (auto f = la_variant_failure(op)) throw InvariantError("constructed instance fails: " + *f);
  return op;
}

std::optional<std::string> la_variant_failure(const BlockCyclicOperator& op) {
  if (auto f = structural_failure(op, true)) return f;
  if (op.weight_twist != 1 || !form_is_invariant(op)) return std::string("form is phi-invariant");
  const RatMatrix g0 = op.gram_block(0, 0);
  if (!is_symmetric(g0)) return std::string("form restricted to W_0 is symmetric");
  if (determinant(g0) == 0) return std::string("form restricted to W_0 is non-degenerate");
  if (op.n() % 2 == 0 && determinant(op.phi_a_on_w0()) != -1) {
    return std::string("det(phi^a | W_0) = -1 when N is even");
  }
  return std::nullopt;
}

DivisibilityReport verify_la_variant(const BlockCyclicOperator& op) {
  if (auto f = la_variant_failure(op)) throw HypothesisError(*f);
  const auto a = static_cast<std::size_t>(op.a);
  if (op.n() % 2 == 1) {
    const Rational eps = determinant(op.phi_a_on_w0());
    return divisibility(char_poly(op), one_minus_monomial(eps, a));
  }
  return divisibility(char_poly(op), one_minus_monomial(Rational(1), 2 * a));
}

std::optional<std::pair<std::uint64_t, BlockCyclicOperator>> find_even_n_counterexample(
    int a, std::size_t n, int epsilon, std::uint64_t first, std::uint64_t count) {
  if (n % 2 != 0) throw PreconditionError("the negative control needs even N");
  for (std::uint64_t s = first; s < first + count; ++s) {
    BlockCyclicOperator op = build_paired_instance(a, n, epsilon, s);
    auto rep = divisibility(char_poly(op), one_minus_monomial(Rational(epsilon), static_cast<std::size_t>(a)));
    if (!rep.divides) return std::make_pair(s, std::move(op));
  }
  return std::nullopt;
}

}  // namespace towerlab
