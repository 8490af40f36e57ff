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

#include "towerlab/curves.hpp"

#include <sstream>

namespace towerlab {

namespace {

using Code = FiniteField::Code;

/// Evaluates a polynomial at x = g^L for consecutive L using one running
/// exponent per nonzero term, so each step costs one table lookup per term
/// plus the Zech additions.
class SparseEvaluator {
 public:
  SparseEvaluator(const FieldPtr& field, const FqPoly& f) : field_(field) {
    for (std::size_t i = 0; i < f.coefficients().size(); ++i) {
      const Code c = f.coefficients()[i];
      if (c == 0) continue;
      log_c_.push_back(field->log(c));
      exps_.push_back(i);
    }
    n_ = field->order() - 1;
    running_.resize(exps_.size());
  }

  void seek(std::uint64_t l) {
    for (std::size_t t = 0; t < exps_.size(); ++t) {
      const auto e = static_cast<std::uint64_t>(static_cast<unsigned __int128>(exps_[t] % n_) * (l % n_) % n_);
      running_[t] = (log_c_[t] + e) % n_;
    }
  }

  /// Value at the current exponent, then advance to the next one.
  Code next() {
    Code acc = 0;
    for (std::size_t t = 0; t < exps_.size(); ++t) {
      acc = field_->add(acc, field_->exp(running_[t]));
      running_[t] += exps_[t] % n_;
      if (running_[t] >= n_) running_[t] -= n_;
    }
    return acc;
  }

 private:
  const FieldPtr& field_;
  std::vector<std::uint64_t> log_c_, exps_, running_;
  std::uint64_t n_ = 1;
};

/// Tr(x) as an F_p-linear function of the prime coordinates of x.
class TraceMap {
 public:
  explicit TraceMap(const FieldPtr& field) : field_(field) {
    std::uint64_t code = 1;
    for (unsigned i = 0; i < field->absolute_degree(); ++i) {
      images_.push_back(field->absolute_trace(static_cast<Code>(code)));
      code *= field->characteristic();
    }
  }

  std::uint32_t operator()(Code x) const {
    const std::uint32_t p = field_->characteristic();
    if (p == 2) {
      std::uint32_t acc = 0;
      for (std::size_t i = 0; x != 0; ++i, x >>= 1)
        if (x & 1) acc ^= images_[i];
      return acc;
    }
    std::uint64_t acc = 0;
    for (std::size_t i = 0; x != 0; ++i, x /= p) acc += std::uint64_t{x % p} * images_[i];
    return static_cast<std::uint32_t>(acc % p);
  }

 private:
  const FieldPtr& field_;
  std::vector<std::uint32_t> images_;
};

FqPoly lift(const FqPoly& f, const FieldPtr& field) { return FqPoly(field, f.coefficients()); }

std::int64_t points_at_infinity(const HyperellipticModel& m, const FieldPtr& ext) {
  if (m.field->characteristic() == 2) return 1;
  if (m.f.degree() % 2 == 1) return 1;
  return 1 + ext->quadratic_character(m.f.leading());
}

std::int64_t affine_odd(const FieldPtr& F, const FqPoly& f, unsigned threads) {
  const std::uint64_t q = F->order();
  std::int64_t chi_sum = F->quadratic_character(f.coeff(0));
  if (F->has_tables()) {
    chi_sum += parallel_sum(q - 1, threads, [&](std::uint64_t begin, std::uint64_t end) {
      SparseEvaluator ev(F, f);
      ev.seek(begin);
      std::int64_t s = 0;
      for (std::uint64_t l = begin; l < end; ++l) s += F->quadratic_character(ev.next());
      return s;
    });
  } else {
    chi_sum += parallel_sum(q - 1, threads, [&](std::uint64_t begin, std::uint64_t end) {
      std::int64_t s = 0;
      for (std::uint64_t x = begin + 1; x <= end; ++x) s += F->quadratic_character(f.eval(static_cast<Code>(x)));
      return s;
    });
  }
  return static_cast<std::int64_t>(q) + chi_sum;
}

std::int64_t affine_char2(const FieldPtr& F, const FqPoly& h, const FqPoly& f, unsigned threads) {
  const std::uint64_t q = F->order();
  const TraceMap tr(F);
  auto point_count = [&](Code hx, Code fx) -> std::int64_t {
    if (hx == 0) return 1;
    if (fx == 0) return 2;
    const Code v = F->div(fx, F->mul(hx, hx));
    return tr(v) == 0 ? 2 : 0;
  };
  std::int64_t total = point_count(h.coeff(0), f.coeff(0));
  if (F->has_tables()) {
    total += parallel_sum(q - 1, threads, [&](std::uint64_t begin, std::uint64_t end) {
      SparseEvaluator eh(F, h), ef(F, f);
      eh.seek(begin);
      ef.seek(begin);
      std::int64_t s = 0;
      for (std::uint64_t l = begin; l < end; ++l) {
        const Code hx = eh.next();
        s += point_count(hx, ef.next());
      }
      return s;
    });
  } else {
    total += parallel_sum(q - 1, threads, [&](std::uint64_t begin, std::uint64_t end) {
      std::int64_t s = 0;
      for (std::uint64_t x = begin + 1; x <= end; ++x) {
        s += point_count(h.eval(static_cast<Code>(x)), f.eval(static_cast<Code>(x)));
      }
      return s;
    });
  }
  return total;
}

}  // namespace

HyperellipticModel HyperellipticModel::odd(FqPoly f) {
  if (!f.field()) throw PreconditionError("model without a field");
  if (f.field()->characteristic() == 2) throw PreconditionError("y^2 = f(x) needs odd characteristic");
  if (f.degree() < 1) throw PreconditionError("f must be nonconstant");
  if (!gcd(f, f.derivative()).is_one()) throw PreconditionError("f must be squarefree");
  HyperellipticModel m;
  m.field = f.field();
  m.genus = (f.degree() - 1) / 2;
  m.h = FqPoly(m.field);
  m.f = std::move(f);
  return m;
}

int artin_schreier_reduced_degree(const FqPoly& f) {
  if (f.field()->characteristic() != 2) throw PreconditionError("Artin-Schreier reduction needs characteristic 2");
  FqPoly g = f;
  const auto& F = f.field();
  while (g.degree() > 0 && g.degree() % 2 == 0) {
    const auto k = static_cast<std::size_t>(g.degree() / 2);
    const Code c = g.leading();
    const Code r = F->pth_root(c);
    g = g + FqPoly::monomial(F, c, 2 * k) + FqPoly::monomial(F, r, k);
  }
  return g.degree();
}

HyperellipticModel HyperellipticModel::char2(FqPoly h, FqPoly f) {
  if (!f.field() || !h.field()) throw PreconditionError("model without a field");
  if (f.field()->characteristic() != 2) throw PreconditionError("y^2 + h y = f needs characteristic 2");
  HyperellipticModel m;
  m.field = f.field();
  if (h.degree() == 0) {
    const int e = artin_schreier_reduced_degree(f);
    if (e < 1) throw PreconditionError("y^2 + y = f needs f of positive reduced degree");
    m.genus = (e - 1) / 2;
  } else {
    if (f.degree() < 1 || f.degree() % 2 == 0) throw PreconditionError("f must have odd degree 2g+1");
    const int g = (f.degree() - 1) / 2;
    if (h.is_zero() || h.degree() > g) throw PreconditionError("h must be nonzero of degree at most g");
    const FqPoly dh = h.derivative(), df = f.derivative();
    if (!gcd(h, dh * dh * f - df * df).is_one()) throw PreconditionError("model is singular");
    m.genus = g;
  }
  m.h = std::move(h);
  m.f = std::move(f);
  return m;
}

std::string HyperellipticModel::str() const {
  std::ostringstream os;
  os << field->str() << ";f=" << f.str();
  if (field->characteristic() == 2) os << ";h=" << h.str();
  return os.str();
}

std::int64_t count_points(const HyperellipticModel& model, unsigned m, const Budget& budget, unsigned threads) {
  if (m < 1) throw PreconditionError("extension degree must be positive");
  budget.require(ipow(BigInt(model.field->order()), m), "point count over degree-" + std::to_string(m) + " extension");
  const FieldPtr ext = FiniteField::standard_extension(model.field, m);
  const std::int64_t inf = points_at_infinity(model, ext);
  if (model.field->characteristic() == 2) {
    return affine_char2(ext, lift(model.h, ext), lift(model.f, ext), threads) + inf;
  }
  return affine_odd(ext, lift(model.f, ext), threads) + inf;
}

bool satisfies_functional_equation(const IntPoly& p, std::uint64_t q, int genus) {
  if (p.degree() > 2 * genus) return false;
  for (int i = 0; i <= 2 * genus; ++i) {
    const BigInt lhs = p.coeff(static_cast<std::size_t>(2 * genus - i));
    const int e = genus - i;
    // b_{2g-i} = q^{g-i} b_i, read as b_{2g-i} q^{i-g} = b_i when i > g.
    if (e >= 0) {
      if (lhs != ipow(BigInt(q), static_cast<unsigned>(e)) * p.coeff(static_cast<std::size_t>(i))) return false;
    } else {
      if (lhs * ipow(BigInt(q), static_cast<unsigned>(-e)) != p.coeff(static_cast<std::size_t>(i))) return false;
    }
  }
  return true;
}

ZetaNumerator zeta_from_counts(std::uint64_t q, int genus, const std::vector<std::int64_t>& counts) {
  if (genus < 0) throw PreconditionError("genus must be nonnegative");
  if (counts.size() < static_cast<std::size_t>(genus)) throw PreconditionError("need N_1..N_g");
  ZetaNumerator z;
  z.q = q;
  z.genus = genus;
  z.counts.assign(counts.begin(), counts.begin() + genus);
  if (genus == 0) {
    z.poly = IntPoly{1};
    return z;
  }
  std::vector<BigInt> sums;
  for (int m = 1; m <= genus; ++m) {
    sums.push_back(ipow(BigInt(q), static_cast<unsigned>(m)) + 1 - counts[static_cast<std::size_t>(m - 1)]);
  }
  const IntPoly low = from_inverse_root_power_sums(sums, static_cast<std::size_t>(genus));
  std::vector<BigInt> b(static_cast<std::size_t>(2 * genus) + 1, 0);
  for (int i = 0; i <= genus; ++i) b[static_cast<std::size_t>(i)] = low.coeff(static_cast<std::size_t>(i));
  for (int i = 0; i < genus; ++i) {
    b[static_cast<std::size_t>(2 * genus - i)] = ipow(BigInt(q), static_cast<unsigned>(genus - i)) * b[static_cast<std::size_t>(i)];
  }
  z.poly = IntPoly(std::move(b));
  const BigInt b1 = z.poly.coeff(1);
  if (b1 * b1 > BigInt(4) * genus * genus * q) throw InvariantError("b_1 violates the Weil bound");
  if (!satisfies_functional_equation(z.poly, q, genus)) throw InvariantError("zeta numerator violates the functional equation");
  if (z.poly.degree() != 2 * genus) throw InvariantError("zeta numerator has the wrong degree");
  if (z.poly.eval(BigInt(1)) <= 0) throw InvariantError("P(1) must be positive");
  return z;
}

ZetaNumerator zeta_numerator(const HyperellipticModel& model, const Budget& budget, unsigned threads) {
  if (model.genus > 0) {
    budget.require(ipow(BigInt(model.field->order()), static_cast<unsigned>(model.genus)), "zeta numerator counts");
  }
  std::vector<std::int64_t> counts;
  for (int m = 1; m <= model.genus; ++m) counts.push_back(count_points(model, static_cast<unsigned>(m), budget, threads));
  return zeta_from_counts(model.field->order(), model.genus, counts);
}

std::vector<BigInt> counts_from_zeta(const ZetaNumerator& z, unsigned m_max) {
  std::vector<BigInt> out;
  const auto sums = inverse_root_power_sums(z.poly, m_max);
  for (unsigned m = 1; m <= m_max; ++m) out.push_back(ipow(BigInt(z.q), m) + 1 - sums[m - 1]);
  return out;
}

int hyperelliptic_genus_riemann_hurwitz(int degree) {
  if (degree < 1) throw PreconditionError("degree must be positive");
  const int branch = degree + (degree % 2);
  return branch / 2 - 1;
}

HyperellipticModel kummer_pullback(const FqPoly& base_f, unsigned d) {
  const auto& F = base_f.field();
  if (d < 1) throw PreconditionError("d must be positive");
  if (d % F->characteristic() == 0) throw PreconditionError("p must not divide d");
  if (base_f.coeff(0) == 0) throw PreconditionError("base polynomial must not vanish at 0");
  HyperellipticModel m = HyperellipticModel::odd(base_f.substitute_power(d));
  const int rh = hyperelliptic_genus_riemann_hurwitz(m.f.degree());
  if (rh != m.genus) throw InvariantError("Riemann-Hurwitz genus disagrees with the model genus");
  return m;
}

HyperellipticModel artin_schreier_pullback(const FqPoly& base_f, unsigned d) {
  const auto& F = base_f.field();
  if (F->characteristic() != 2) throw PreconditionError("Artin-Schreier pullback needs characteristic 2");
  if (d < 1 || d % 2 == 0) throw PreconditionError("d must be odd");
  const FqPoly pulled = base_f.substitute_power(d);
  HyperellipticModel m = HyperellipticModel::char2(FqPoly::constant(F, 1), pulled);
  // Each pole order c at infinity contributes its break; the single break of
  // the pulled-back polynomial is d times the base break.
  const int base_break = artin_schreier_reduced_degree(base_f);
  if (base_break < 1 || (static_cast<int>(d) * base_break - 1) / 2 != m.genus) {
    throw InvariantError("Artin-Schreier conductor genus disagrees with the model genus");
  }
  return m;
}

WeilPolynomial WeilPolynomial::from_trace(std::uint32_t p, int a) {
  WeilPolynomial w;
  w.p = p;
  if (a == 0) {
    w.label = "zeta4";
  } else if (p == 3 && (a == 3 || a == -3)) {
    w.label = "zeta12";
  } else if (p == 2 && (a == 2 || a == -2)) {
    w.label = "zeta8";
  } else {
    throw PreconditionError("trace " + std::to_string(a) + " is not a supported supersingular value for p = " +
                            std::to_string(p));
  }
  w.poly = IntPoly{BigInt(1), BigInt(-a), BigInt(p)};
  if (BigInt(a) * a - 4 * BigInt(p) >= 0) throw InvariantError("Weil polynomial roots are not complex conjugate");
  return w;
}

int weil_multiplicity(const ZetaNumerator& zeta, const WeilPolynomial& w) {
  if (zeta.q != w.p) throw PreconditionError("multiplicity is taken over the prime field F_p");
  if (zeta.poly.degree() < 1) return 0;
  return divisibility_multiplicity(zeta.poly, w.poly);
}

void check_twist_selection(std::uint32_t p, int a_p, unsigned n) {
  if (!is_prime_u64(p)) throw PreconditionError("p must be prime");
  if (a_p == 0) {
    if (n % 2 == 0) throw PreconditionError("a_p = 0 needs n odd");
    return;
  }
  if (p == 3 && (a_p == 3 || a_p == -3)) {
    if (n % 6 != 3) throw PreconditionError("p = 3 with a_p = +-3 needs n = 3 mod 6");
    return;
  }
  if (p == 2 && (a_p == 2 || a_p == -2)) {
    if (n % 4 != 2) throw PreconditionError("p = 2 with a_p = +-2 needs n = 2 mod 4");
    return;
  }
  throw PreconditionError("a_p = " + std::to_string(a_p) + " is outside the supported selection rules for p = " +
                          std::to_string(p));
}

TwistRankResult twist_rank(int a_p, std::uint32_t p, const FqPoly& base_f, unsigned n, const Budget& budget,
                           unsigned threads) {
  check_twist_selection(p, a_p, n);
  if (base_f.field()->order() != p) throw PreconditionError("base polynomial must be over F_p");
  if (n < 1) throw PreconditionError("n must be positive");
  TwistRankResult r;
  const BigInt d = ipow(BigInt(p), n) + 1;
  if (d > BigInt(1) << 31) throw BudgetError("d = p^n + 1 is too large");
  r.d = static_cast<std::uint64_t>(d);
  r.weil = WeilPolynomial::from_trace(p, a_p);
  r.model = p == 2 ? artin_schreier_pullback(base_f, static_cast<unsigned>(r.d))
                   : kummer_pullback(base_f, static_cast<unsigned>(r.d));
  r.zeta = zeta_numerator(r.model, budget, threads);
  r.multiplicity = weil_multiplicity(r.zeta, r.weil);
  r.rank = 2 * r.multiplicity;
  return r;
}

std::uint64_t count_bivariate_zeros(const FieldPtr& field, const BivariatePoly& g, const Budget& budget) {
  const std::uint64_t q = field->order();
  budget.require(BigInt(q) * q, "bivariate enumeration");
  unsigned max_e = 0;
  for (const auto& t : g) max_e = std::max({max_e, t.i, t.j});
  // powers[e][x] = x^e
  std::vector<std::vector<Code>> powers(max_e + 1, std::vector<Code>(q));
  for (std::uint64_t x = 0; x < q; ++x) {
    Code v = 1;
    for (unsigned e = 0; e <= max_e; ++e) {
      powers[e][x] = v;
      v = field->mul(v, static_cast<Code>(x));
    }
  }
  std::uint64_t zeros = 0;
  for (std::uint64_t x = 0; x < q; ++x)
    for (std::uint64_t y = 0; y < q; ++y) {
      Code acc = 0;
      for (const auto& t : g) acc = field->add(acc, field->mul(t.c, field->mul(powers[t.i][x], powers[t.j][y])));
      if (acc == 0) ++zeros;
    }
  return zeros;
}

BivariatePoly case1_pair_polynomial(const FieldPtr& field, unsigned g) {
  const Code minus_one = field->neg(1);
  return {{1, 2 * g + 2, 0}, {1, 2 * g + 1, 0}, {minus_one, 0, 2 * g + 2}, {minus_one, 0, 2 * g + 1}};
}

}  // namespace towerlab
