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

#include "towerlab/weierstrass.hpp"

#include <limits>
#include <sstream>

namespace towerlab {

namespace {

using Code = FiniteField::Code;

FqPoly k(const FieldPtr& f, std::int64_t v) { return FqPoly::constant(f, f->from_int(v)); }

constexpr int kInfinite = std::numeric_limits<int>::max();

int val(const FqPoly& f, const FqPoly& pi) { return f.is_zero() ? kInfinite : valuation(f, pi); }

FqPoly pow_poly(const FqPoly& f, int e) {
  FqPoly r = FqPoly::constant(f.field(), 1);
  for (int i = 0; i < e; ++i) r = r * f;
  return r;
}

/// s^n f(1/s).
FqPoly chart_at_infinity(const FqPoly& f, int n) {
  if (f.is_zero()) return f;
  std::vector<Code> c(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 0; i <= f.degree(); ++i) c[static_cast<std::size_t>(n - i)] = f.coeff(static_cast<std::size_t>(i));
  return FqPoly(f.field(), std::move(c));
}

FqPoly short_discriminant(const FqPoly& a, const FqPoly& b) {
  const auto& F = a.field();
  return (k(F, 4) * a * a * a + k(F, 27) * b * b).scaled(F->from_int(-16));
}

}  // namespace

std::string to_string(Reduction r) {
  switch (r) {
    case Reduction::kGood:
      return "good";
    case Reduction::kSplitMultiplicative:
      return "multiplicative-split";
    case Reduction::kNonsplitMultiplicative:
      return "multiplicative-nonsplit";
    case Reduction::kAdditive:
      break;
  }
  return "additive";
}

WeierstrassModel WeierstrassModel::make(FqPoly a2, FqPoly a4, FqPoly a6) {
  const FieldPtr F = a2.field() ? a2.field() : a4.field() ? a4.field() : a6.field();
  if (!F) throw PreconditionError("model without a field");
  if (F->characteristic() < 5) throw PreconditionError("Weierstrass models need characteristic >= 5");
  WeierstrassModel m;
  m.field = F;
  m.a2 = a2.field() ? std::move(a2) : FqPoly(F);
  m.a4 = a4.field() ? std::move(a4) : FqPoly(F);
  m.a6 = a6.field() ? std::move(a6) : FqPoly(F);
  const FqPoly& A2 = m.a2;
  const FqPoly& A4 = m.a4;
  const FqPoly& A6 = m.a6;
  m.c4 = k(F, 16) * A2 * A2 - k(F, 48) * A4;
  m.c6 = k(F, -64) * A2 * A2 * A2 + k(F, 288) * A2 * A4 - k(F, 864) * A6;
  m.delta = k(F, -16) * A2 * A2 * (k(F, 4) * A2 * A6 - A4 * A4) - k(F, 64) * A4 * A4 * A4 - k(F, 432) * A6 * A6 +
            k(F, 288) * A2 * A4 * A6;
  if (m.delta.is_zero()) throw PreconditionError("the generic fiber is singular (discriminant 0)");
  if (m.c4 * m.c4 * m.c4 - m.c6 * m.c6 != k(F, 1728) * m.delta) throw InvariantError("c4^3 - c6^2 != 1728 delta");
  return m;
}

bool WeierstrassModel::isotrivial() const {
  if (c4.is_zero()) return true;
  const FqPoly c43 = c4 * c4 * c4;
  return c43.scaled(delta.leading()) == delta.scaled(c43.leading());
}

std::string WeierstrassModel::str() const {
  std::ostringstream os;
  os << field->str() << ";a2=" << a2.str() << ";a4=" << a4.str() << ";a6=" << a6.str();
  return os.str();
}

LocalMinimalModel minimal_model(const WeierstrassModel& model, const Place& place) {
  const auto& F = model.field;
  FqPoly a = model.c4.scaled(F->from_int(-27));
  FqPoly b = model.c6.scaled(F->from_int(-54));
  LocalMinimalModel m;
  if (place.infinite) {
    int n = 0;
    while (4 * n < a.degree() || 6 * n < b.degree()) ++n;
    a = chart_at_infinity(a, 4 * n);
    b = chart_at_infinity(b, 6 * n);
    m.local_place = Place::finite(FqPoly::x(F));
  } else {
    m.local_place = place;
  }
  const FqPoly& pi = m.local_place.pi;
  const int va = val(a, pi), vb = val(b, pi);
  const int e = std::min(va == kInfinite ? kInfinite : va / 4, vb == kInfinite ? kInfinite : vb / 6);
  if (e > 0) {
    if (!a.is_zero()) a = a / pow_poly(pi, 4 * e);
    if (!b.is_zero()) b = b / pow_poly(pi, 6 * e);
  }
  m.a = a;
  m.b = b;
  m.v_a = a.is_zero() ? -1 : valuation(a, pi);
  m.v_b = b.is_zero() ? -1 : valuation(b, pi);
  const FqPoly disc = short_discriminant(a, b);
  if (disc.is_zero()) throw InvariantError("minimal model lost its discriminant");
  m.v_delta = valuation(disc, pi);
  return m;
}

int conductor_exponent(const LocalMinimalModel& m) {
  if (m.v_delta == 0) return 0;
  if (m.v_a == 0) return 1;
  return 2;
}

std::int64_t count_cubic(const FieldPtr& F, Code a, Code b) {
  std::int64_t total = 1;
  const std::uint64_t q = F->order();
  for (std::uint64_t xi = 0; xi < q; ++xi) {
    const Code x = static_cast<Code>(xi);
    const Code v = F->add(F->mul(F->add(F->mul(x, x), a), x), b);
    total += 1 + F->quadratic_character(v);
  }
  return total;
}

std::int64_t count_quartic(const FieldPtr& F, const std::vector<Code>& c) {
  if (c.size() != 5) throw PreconditionError("a quartic needs five coefficients");
  const FqPoly f(F, c);
  if (f.degree() < 3) throw PreconditionError("quartic count needs degree 3 or 4");
  std::int64_t total = f.degree() == 4 ? 1 + F->quadratic_character(c[4]) : 1;
  for (std::uint64_t xi = 0; xi < F->order(); ++xi) total += 1 + F->quadratic_character(f.eval(static_cast<Code>(xi)));
  return total;
}

LocalFactor local_data(const WeierstrassModel& model, const Place& place, const Budget& budget) {
  if (model.field->characteristic() < 5) throw PreconditionError("local data needs characteristic >= 5");
  const LocalMinimalModel mm = minimal_model(model, place);
  LocalFactor lf;
  lf.place = place;
  lf.cond_exponent = conductor_exponent(mm);
  const int deg = place.degree;
  const BigInt qv = place.infinite ? BigInt(model.field->order()) : place.residue_order();
  budget.require(qv, "residue field enumeration");
  const FieldPtr R = residue_field(mm.local_place);
  const Code a = reduce(mm.a, mm.local_place, R);
  const Code b = reduce(mm.b, mm.local_place, R);
  const std::int64_t count = count_cubic(R, a, b);
  const std::int64_t q_v = static_cast<std::int64_t>(R->order());
  const auto m = static_cast<std::size_t>(deg);
  switch (lf.cond_exponent) {
    case 0: {
      lf.reduction = Reduction::kGood;
      lf.a_v = q_v + 1 - count;
      if (BigInt(lf.a_v) * lf.a_v > 4 * BigInt(q_v)) throw InvariantError("a_v violates the Hasse bound");
      lf.poly = IntPoly::monomial(BigInt(q_v), 2 * m) + IntPoly::monomial(BigInt(-lf.a_v), m) + IntPoly{1};
      break;
    }
    case 1: {
      if (count == q_v) {
        lf.reduction = Reduction::kSplitMultiplicative;
        lf.a_v = 1;
      } else if (count == q_v + 2) {
        lf.reduction = Reduction::kNonsplitMultiplicative;
        lf.a_v = -1;
      } else {
        throw InvariantError("nodal cubic has an impossible point count");
      }
      lf.poly = IntPoly::monomial(BigInt(-lf.a_v), m) + IntPoly{1};
      break;
    }
    default: {
      if (count != q_v + 1) throw InvariantError("cuspidal cubic has an impossible point count");
      lf.reduction = Reduction::kAdditive;
      lf.a_v = 0;
      lf.poly = IntPoly{1};
      break;
    }
  }
  return lf;
}

Conductor conductor(const WeierstrassModel& model, const Budget& budget) {
  (void)budget;
  if (model.field->characteristic() < 5) throw PreconditionError("conductor needs characteristic >= 5");
  Conductor c;
  for (const auto& [pi, mult] : factor(model.delta)) {
    (void)mult;
    const Place pl = Place::finite(pi);
    const int e = conductor_exponent(minimal_model(model, pl));
    if (e > 0) {
      c.divisor.emplace_back(pl, e);
      c.degree += e * pl.degree;
    }
  }
  const Place inf = Place::infinity(model.field);
  const int e = conductor_exponent(minimal_model(model, inf));
  if (e > 0) {
    c.divisor.emplace_back(inf, e);
    c.degree += e;
  }
  return c;
}

WeierstrassModel quartic_to_weierstrass(const std::vector<FqPoly>& coeffs) {
  if (coeffs.size() != 5) throw PreconditionError("a quartic needs five coefficients c0..c4");
  const FieldPtr F = coeffs[4].field();
  if (!F) throw PreconditionError("quartic without a field");
  if (F->characteristic() < 5) throw PreconditionError("quartic conversion needs characteristic >= 5");
  const FqPoly& a = coeffs[4];
  if (a.degree() != 0) throw PreconditionError("leading coefficient must be a nonzero constant");
  if (F->quadratic_character(a.coeff(0)) != 1) {
    throw PreconditionError("leading coefficient must be a square in F_q");
  }
  const FqPoly& b = coeffs[3];
  const FqPoly& c = coeffs[2];
  const FqPoly& d = coeffs[1];
  const FqPoly& e = coeffs[0];
  const FqPoly I = k(F, 12) * a * e - k(F, 3) * b * d + c * c;
  const FqPoly J = k(F, 72) * a * c * e + k(F, 9) * b * c * d - k(F, 27) * a * d * d - k(F, 27) * e * b * b -
                   k(F, 2) * c * c * c;
  return WeierstrassModel::make(FqPoly(F), I.scaled(F->from_int(-27)), J.scaled(F->from_int(-27)));
}

}  // namespace towerlab
