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


#ifndef TOWERLAB_BLOCK_CYCLIC_HPP
#define TOWERLAB_BLOCK_CYCLIC_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "towerlab/matrix.hpp"
#include "towerlab/polynomial.hpp"

namespace towerlab {

/// Raised when an operator does not satisfy the hypotheses of a divisibility check.
/// The message names the failing hypothesis.
class HypothesisError : public PreconditionError {
 public:
  explicit HypothesisError(const std::string& hypothesis)
      : PreconditionError("hypotheses not met: " + hypothesis), hypothesis_(hypothesis) {}
  const std::string& hypothesis() const { return hypothesis_; }

 private:
  std::string hypothesis_;
};

/**
 * V = W_0 + ... + W_{a-1} with phi(W_i) inside W_{i+1 mod a}, plus a bilinear
 * form with gram^T = epsilon * gram. Basis vectors of W_i occupy the
 * contiguous index range starting at offset(i).
 */
struct BlockCyclicOperator {
  int a = 1;
  std::vector<std::size_t> block_dims;
  RatMatrix phi;
  RatMatrix gram;
  int epsilon = 1;
  Rational weight_twist = 1;

  std::size_t dim() const;
  std::size_t offset(int i) const;
  std::size_t n() const { return block_dims.empty() ? 0 : block_dims[0]; }

  /// The block of phi mapping W_i to W_{i+1}.
  RatMatrix map_block(int i) const;
  /// The block of gram pairing W_i (rows) with W_j (columns).
  RatMatrix gram_block(int i, int j) const;
  /// phi^a restricted to W_0.
  RatMatrix phi_a_on_w0() const;
};

struct DivisibilityReport {
  RatPoly charpoly;
  RatPoly predicted_factor;
  bool divides = false;
  std::optional<RatPoly> quotient;
};

/// Assembles an operator from the maps W_{i-1} -> W_i (i = 1..a-1) followed by
/// W_{a-1} -> W_0. Zero block dimensions and singular maps are allowed.
BlockCyclicOperator make_block_cyclic(const std::vector<std::size_t>& dims, const std::vector<RatMatrix>& maps,
                                      RatMatrix gram, int epsilon);

/// det(1 - phi T | V).
RatPoly char_poly(const BlockCyclicOperator& op);

/// det(1 - phi T | V) == det(1 - phi^a T^a | W_0).
bool verify_cyclic_identity(const BlockCyclicOperator& op);

/// Seeded instance satisfying every hypothesis of the 1 - epsilon T^a divisibility
/// statement (a even, N odd). Throws PreconditionError for other shapes.
BlockCyclicOperator build_instance(int a, std::size_t n, int epsilon, std::uint64_t seed);

/// Same construction without the parity restriction on N.
BlockCyclicOperator build_paired_instance(int a, std::size_t n, int epsilon, std::uint64_t seed);

/// Empty when the hypotheses hold, otherwise the name of the first failing one.
std::optional<std::string> prop_la_failure(const BlockCyclicOperator& op);

DivisibilityReport verify_prop_la(const BlockCyclicOperator& op);

/// (inversion-closed spectrum of phi^a | W_0, det(phi^a | W_0) == epsilon^N).
std::pair<bool, bool> verify_eigen_and_det_lemmas(const BlockCyclicOperator& op);

/// det(epsilon phi^a | W_0) == 1 and its spectrum is closed under inversion.
bool verify_asymmetry(const BlockCyclicOperator& op);

/// Seeded instance with a phi-invariant form that is block diagonal and symmetric
/// nondegenerate on W_0; phi^a | W_0 is a product of reflections with the given
/// determinant sign.
BlockCyclicOperator build_la_variant_instance(int a, std::size_t n, int det_sign, std::uint64_t seed);

std::optional<std::string> la_variant_failure(const BlockCyclicOperator& op);

DivisibilityReport verify_la_variant(const BlockCyclicOperator& op);

/// First seed in [first, first + count) whose even-N paired instance is not divisible
/// by 1 - epsilon T^a.
std::optional<std::pair<std::uint64_t, BlockCyclicOperator>> find_even_n_counterexample(
    int a, std::size_t n, int epsilon, std::uint64_t first, std::uint64_t count);

/// T^N p(1/T) == p(0) p(T) for p(T) = det(T - M);
/// this is the spectrum-closed-under-inversion test for invertible M.
bool spectrum_inversion_closed(const RatMatrix& m);

}  // namespace towerlab

#endif  // TOWERLAB_BLOCK_CYCLIC_HPP
