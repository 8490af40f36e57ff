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

#ifndef TOWERLAB_COMMON_HPP
#define TOWERLAB_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace towerlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr const char* kVersion = "1.0.0";

/// Base of every error the library raises. `kind()` maps onto CLI exit codes.
class Error : public std::runtime_error {
 public:
  enum class Kind { kPrecondition, kBudget, kInvariant };

  Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Input outside an operation's domain.
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what) : Error(Kind::kPrecondition, what) {}
};

/// The requested computation exceeds the configured enumeration budget.
class BudgetError : public Error {
 public:
  explicit BudgetError(const std::string& what) : Error(Kind::kBudget, what) {}
};

/// An internal consistency gate failed; the result would have been wrong.
class InvariantError : public Error {
 public:
  explicit InvariantError(const std::string& what) : Error(Kind::kInvariant, what) {}
};

/// Caps enforced before any enumeration starts.
struct Budget {
  std::uint64_t max_enumeration = 20'000'000;  // elements visited by one count
  int max_place_degree = 12;

  /// Throws BudgetError if `count` enumerations would exceed the cap.
  void require(const BigInt& count, const std::string& what) const;

  /// Default budget, overridden by TOWERLAB_BUDGET ("N" or "enum=N,degree=M").
  static Budget from_environment();
  static Budget parse(const std::string& text, Budget base);
  static Budget parse(const std::string& text) { return parse(text, Budget()); }
};

/// Splits [0, n) into contiguous chunks and sums `fn(begin, end)` over them.
/// The merge is an integer sum, so the result does not depend on scheduling.
template <class Fn>
std::int64_t parallel_sum(std::uint64_t n, unsigned threads, Fn&& fn) {
  if (threads <= 1 || n < 4096) return fn(std::uint64_t{0}, n);
  const std::uint64_t chunks = std::min<std::uint64_t>(threads, n);
  std::vector<std::int64_t> partial(chunks, 0);
  std::vector<std::thread> workers;
  workers.reserve(chunks);
  for (std::uint64_t c = 0; c < chunks; ++c) {
    const std::uint64_t begin = n * c / chunks;
    const std::uint64_t end = n * (c + 1) / chunks;
    workers.emplace_back([&, c, begin, end] { partial[c] = fn(begin, end); });
  }
  for (auto& w : workers) w.join();
  std::int64_t total = 0;
  for (auto v : partial) total += v;
  return total;
}

/// Number of workers requested by `--threads 0` (machine parallelism).
unsigned default_threads();

BigInt ipow(const BigInt& base, unsigned exponent);
std::uint64_t ipow_u64(std::uint64_t base, unsigned exponent);

/// Deterministic primality test for 64-bit integers.
bool is_prime_u64(std::uint64_t n);

/// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Returns (p, k) with q = p^k, or throws PreconditionError if q is not a prime power.
std::pair<std::uint32_t, unsigned> prime_power(std::uint64_t q);

/// Mobius function.
int mobius(std::uint64_t n);

std::string to_string(const BigInt& v);
std::string to_string(const Rational& v);

}  // namespace towerlab

#endif  // TOWERLAB_COMMON_HPP
