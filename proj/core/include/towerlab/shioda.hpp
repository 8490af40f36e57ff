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


#ifndef TOWERLAB_SHIODA_HPP
#define TOWERLAB_SHIODA_HPP

#include <optional>
#include <string>
#include <vector>

#include "towerlab/matrix.hpp"

namespace towerlab {

/// c u^u x^x y^y.
struct Monomial {
  std::int64_t c = 1;
  unsigned u = 0, x = 0, y = 0;
};

struct ShiodaDatum {
  std::vector<Monomial> monomials;
  IntMatrix a;  // rows (1 - u - x - y, u, x, y)
  BigInt det;
  std::optional<BigInt> delta;  // minimal delta > 0 with delta A^{-1} integral
  std::uint32_t p = 0;
  bool passes = false;
  std::string failure;  // empty when passes
};

/// "c:u,x,y;c:u,x,y;..." exponents in (u, x, y).
std::vector<Monomial> parse_monomials(const std::string& text);
std::string format_monomials(const std::vector<Monomial>& m);

ShiodaDatum shioda_check(const std::vector<Monomial>& monomials, std::uint32_t p);

}  // namespace towerlab

#endif  // TOWERLAB_SHIODA_HPP
