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


#include "towerlab/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <memory>
#include <sstream>

#include "towerlab/block_cyclic.hpp"
#include "towerlab/curves.hpp"
#include "towerlab/families.hpp"
#include "towerlab/lfunction.hpp"
#include "towerlab/orbits.hpp"
#include "towerlab/shioda.hpp"
#include "towerlab/towers.hpp"
#include "towerlab/verify.hpp"

namespace towerlab::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Report {
  Json doc;
  Table table;
  int exit_code = 0;
};

struct Globals {
  unsigned threads = default_threads();
  std::string config;
  std::string output = "json";
  std::string out;
  bool timings = false;
  bool json = false;
};

Json big(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return to_string(v);
}

Json rat(const Rational& v) {
  if (denominator(v) == 1) return big(numerator(v));
  return to_string(v);
}

Json poly(const IntPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coefficients()) a.push_back(big(c));
  return a;
}

Json poly(const RatPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coefficients()) a.push_back(rat(c));
  return a;
}

std::string join(const std::vector<std::uint64_t>& v, const char* sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

Json header(const std::string& command, const std::string& theorem, Json params) {
  Json d;
  d["tool"] = "towerlab";
  d["version"] = kVersion;
  d["command"] = command;
  d["theorem"] = theorem;
  d["params"] = std::move(params);
  return d;
}

std::string yes(bool b) { return b ? "true" : "false"; }

// ---- formats -------------------------------------------------------------

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string render(const Report& r, const std::string& format) {
  std::ostringstream os;
  if (format == "json") {
    os << r.doc.dump(2) << "\n";
  } else if (format == "csv") {
    for (std::size_t i = 0; i < r.table.header.size(); ++i) os << (i ? "," : "") << csv_cell(r.table.header[i]);
    os << "\n";
    for (const auto& row : r.table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
      os << "\n";
    }
  } else {
    for (const auto& [k, v] : r.doc.items()) {
      if (v.is_structured()) continue;
      os << k << ": " << scalar_text(v) << "\n";
    }
    for (const auto& [k, v] : r.doc["params"].items()) os << "param " << k << ": " << scalar_text(v) << "\n";
    if (!r.table.header.empty()) {
      std::vector<std::size_t> w(r.table.header.size());
      for (std::size_t i = 0; i < w.size(); ++i) w[i] = r.table.header[i].size();
      for (const auto& row : r.table.rows)
        for (std::size_t i = 0; i < row.size() && i < w.size(); ++i) w[i] = std::max(w[i], row[i].size());
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
          os << (i ? "  " : "") << std::left << std::setw(static_cast<int>(i + 1 < cells.size() ? w[i] : 0)) << cells[i];
        }
        os << "\n";
      };
      os << "\n";
      line(r.table.header);
      for (const auto& row : r.table.rows) line(row);
    }
  }
  return os.str();
}

// ---- configuration file ----------------------------------------------------

std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot read config file '" + path + "'");
  std::map<std::string, std::string> kv;
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw PreconditionError("config line " + std::to_string(n) + " must read key=value");
    auto trim = [](std::string s) {
      const auto l = s.find_first_not_of(" \t\r");
      const auto r = s.find_last_not_of(" \t\r");
      return l == std::string::npos ? std::string() : s.substr(l, r - l + 1);
    };
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

// ---- commands ----------------------------------------------------------------

template <class T>
void need(const std::optional<T>& v, const char* name) {
  if (!v) throw PreconditionError(std::string("missing required option --") + name);
}

struct LaOpts {
  int trials = 10;
  std::uint64_t seed = 1;
  bool variant = false;
};

Report run_la(const LaOpts& o) {
  if (o.trials < 1) throw PreconditionError("--trials must be positive");
  Report r;
  r.doc = header("la selftest", o.variant ? "restricted-form divisibility" : "block-cyclic divisibility",
                 {{"trials", o.trials}, {"seed", o.seed}, {"variant", o.variant}});
  r.table.header = {"trial", "a", "n", "sign", "seed", "divides"};
  Json recs = Json::array();
  bool all = true;
  for (int i = 0; i < o.trials; ++i) {
    const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(i);
    Json rec;
    rec["trial"] = i;
    int a = 0, sign = 0;
    std::size_t n = 0;
    DivisibilityReport rep;
    if (!o.variant) {
      static const int as[] = {2, 4, 6};
      static const std::size_t ns[] = {1, 3, 5};
      const int combo = i % 18;
      a = as[combo / 6];
      n = ns[(combo / 2) % 3];
      sign = combo % 2 ? -1 : 1;
      const auto op = build_instance(a, n, sign, seed);
      rep = verify_prop_la(op);
      const auto [inv, det] = verify_eigen_and_det_lemmas(op);
      rec["a"] = a;
      rec["n"] = n;
      rec["epsilon"] = sign;
      rec["seed"] = seed;
      rec["dim"] = op.dim();
      rec["charpoly"] = poly(rep.charpoly);
      rec["predicted_factor"] = poly(rep.predicted_factor);
      rec["hypotheses"] = "met";
      rec["divides"] = rep.divides;
      rec["quotient"] = rep.quotient ? poly(*rep.quotient) : Json(nullptr);
      rec["cyclic_identity"] = verify_cyclic_identity(op);
      rec["eigen_lemma"] = inv;
      rec["det_lemma"] = det;
      all &= rep.divides && rec["cyclic_identity"].get<bool>() && inv && det;
    } else {
      static const std::pair<std::size_t, int> cases[] = {{1, 1}, {3, -1}, {2, -1}, {4, -1}};
      a = 1 + static_cast<int>(seed % 3);
      n = cases[i % 4].first;
      sign = cases[i % 4].second;
      const auto op = build_la_variant_instance(a, n, sign, seed);
      rep = verify_la_variant(op);
      rec["a"] = a;
      rec["n"] = n;
      rec["det_sign"] = sign;
      rec["seed"] = seed;
      rec["dim"] = op.dim();
      rec["charpoly"] = poly(rep.charpoly);
      rec["predicted_factor"] = poly(rep.predicted_factor);
      rec["hypotheses"] = "met";
      rec["divides"] = rep.divides;
      rec["quotient"] = rep.quotient ? poly(*rep.quotient) : Json(nullptr);
      all &= rep.divides;
    }
    r.table.rows.push_back({std::to_string(i), std::to_string(a), std::to_string(n), std::to_string(sign),
                            std::to_string(seed), yes(rep.divides)});
    recs.push_back(std::move(rec));
  }
  r.doc["all_divide"] = all;
  r.doc["records"] = std::move(recs);
  r.exit_code = all ? 0 : 4;
  return r;
}

Report run_orbits(std::optional<std::uint64_t> d, std::optional<std::uint64_t> q) {
  need(d, "d");
  need(q, "q");
  const auto dec = orbit_decomposition(*d, *q);
  Report r;
  r.doc = header("orbits", "self-dual orbits of multiplication by q", {{"d", *d}, {"q", *q}});
  r.doc["b"] = dec.b;
  r.doc["orbit_count"] = dec.orbits.size();
  r.doc["higher_self_dual"] = higher_self_dual_orbits(dec).size();
  Json arr = Json::array();
  r.table.header = {"elements", "size", "self_dual", "order_class", "character_order"};
  for (const auto& o : dec.orbits) {
    const std::uint64_t order = *d / std::gcd(o.elements.front(), *d);
    arr.push_back({{"elements", o.elements}, {"size", o.size()}, {"self_dual", o.self_dual},
                   {"order_class", to_string(o.order_class)}, {"character_order", order}});
    r.table.rows.push_back({join(o.elements, " "), std::to_string(o.size()), yes(o.self_dual),
                            to_string(o.order_class), std::to_string(order)});
  }
  r.doc["orbits"] = std::move(arr);
  return r;
}

struct PredictOpts {
  std::optional<std::uint64_t> q;
  std::optional<unsigned> n;
  int w = 1;
  int sign = -1;
  unsigned excluded = 0;
  int swan0 = 0, swan_inf = 0, deg_n = 0;
  std::optional<int> family_case;
  unsigned g = 1;
};

Json orbit_json(const Orbit& o) { return Json(o.elements); }

Report run_predict(const PredictOpts& o) {
  need(o.q, "q");
  need(o.n, "n");
  ConductorData cd{o.swan0, o.swan_inf, o.deg_n};
  int w = o.w, sign = o.sign;
  Json params = {{"q", *o.q}, {"n", *o.n}, {"w", o.w}, {"sign", o.sign}, {"excluded", o.excluded}};
  std::string equation;
  if (o.family_case) {
    if (!is_prime_u64(*o.q)) throw PreconditionError("--case needs q prime");
    const auto fam = family_model(*o.family_case, o.g, static_cast<std::uint32_t>(*o.q), ipow_u64(*o.q, *o.n) + 1);
    cd = fam.conductor;
    w = fam.weight;
    sign = fam.sign_rho;
    equation = fam.equation;
    params["case"] = *o.family_case;
    params["g"] = o.g;
  } else {
    params["swan0"] = o.swan0;
    params["swan_inf"] = o.swan_inf;
    params["deg_n_prime"] = o.deg_n;
  }
  const auto t = towers_rank_bound(*o.q, *o.n, w, sign, o.excluded, cd);
  Report r;
  r.doc = header("towers-predict", "central vanishing in Kummer towers", params);
  if (!equation.empty()) r.doc["equation"] = equation;
  r.doc["d"] = t.d;
  r.doc["w"] = t.w;
  r.doc["sign_rho"] = t.sign_rho;
  r.doc["epsilon"] = t.epsilon;
  r.doc["swan_zero"] = t.swan_zero;
  r.doc["swan_infinity"] = t.swan_infinity;
  r.doc["deg_n_prime"] = t.deg_n_prime;
  const int parity = t.swan_zero + t.swan_infinity + t.deg_n_prime;
  r.doc["conductor_parity_odd"] = parity % 2 == 1;
  r.doc["lower_bound_center"] = t.lower_bound_center;
  r.doc["lower_bound_extended"] = t.lower_bound_extended;
  r.doc["asymptotic_form"] = rat(t.asymptotic_form);
  r.doc["provable_count"] = rat(t.provable_count);
  r.doc["intro_count"] = rat(t.intro_count);
  Json good = Json::array(), bad = Json::array();
  r.table.header = {"orbit", "size", "factor", "status"};
  const int eps = t.epsilon;
  for (const auto& g : t.good_orbits) {
    const auto f = orbit_factor(t.q, t.w, eps, g.size());
    good.push_back({{"orbit", orbit_json(g)}, {"size", g.size()}, {"factor", poly(f)}});
    r.table.rows.push_back({join(g.elements, " "), std::to_string(g.size()), f.str(), "included"});
  }
  for (const auto& e : t.excluded_orbits) {
    bad.push_back({{"orbit", orbit_json(e.orbit)}, {"size", e.orbit.size()}, {"reason", e.reason}});
    r.table.rows.push_back({join(e.orbit.elements, " "), std::to_string(e.orbit.size()), "", "excluded"});
  }
  r.doc["good_orbits"] = std::move(good);
  r.doc["excluded_orbits"] = std::move(bad);
  return r;
}

Report run_av2(std::optional<unsigned> k, std::optional<unsigned> g, unsigned limit) {
  need(k, "k");
  Report r;
  Json params = {{"k", *k}, {"limit", limit}};
  if (g) params["g"] = *g;
  r.doc = header("av2", "odd conductor exponents of primitive cohomology", params);
  const unsigned found = av2_find_g(*k, limit);
  r.doc["g_found"] = found;
  r.table.header = {"k", "g", "exponent", "parity_direct", "parity_kummer"};
  const unsigned gg = g ? *g : found;
  const BigInt e = av2_conductor_exponent(gg, *k);
  const bool direct = av2_parity_direct(gg, *k), kummer = av2_parity_kummer(gg, *k);
  r.doc["g"] = gg;
  r.doc["conductor_exponent"] = big(e);
  r.doc["parity_direct"] = direct;
  r.doc["parity_kummer"] = kummer;
  r.table.rows.push_back({std::to_string(*k), std::to_string(gg), to_string(e), yes(direct), yes(kummer)});
  return r;
}

FieldPtr field_from(const std::string& text, std::optional<std::uint64_t> q) {
  if (!text.empty()) return FiniteField::parse(text);
  if (!q) throw PreconditionError("missing required option --q or --field");
  return FiniteField::of_order(*q);
}

struct ZetaOpts {
  std::string field;
  std::optional<std::uint64_t> q;
  std::string model;
  std::optional<std::string> f;
  std::string h;
};

Report run_zeta(ZetaOpts o, const Budget& budget, unsigned threads) {
  if (!o.model.empty()) {
    std::stringstream ss(o.model);
    std::string item;
    while (std::getline(ss, item, ';')) {
      if (item.rfind("f=", 0) == 0) {
        o.f = item.substr(2);
      } else if (item.rfind("h=", 0) == 0) {
        o.h = item.substr(2);
      } else if (!item.empty()) {
        throw PreconditionError("model entry '" + item + "' must be f=... or h=...");
      }
    }
  }
  need(o.f, "f");
  const FieldPtr F = field_from(o.field, o.q);
  const FqPoly f = parse_fq_poly(F, *o.f);
  HyperellipticModel m = F->characteristic() == 2
                             ? HyperellipticModel::char2(o.h.empty() ? FqPoly::constant(F, 1) : parse_fq_poly(F, o.h), f)
                             : HyperellipticModel::odd(f);
  if (F->characteristic() != 2 && !o.h.empty()) throw PreconditionError("--h is only used in characteristic 2");
  const auto z = zeta_numerator(m, budget, threads);
  Report r;
  Json params = {{"field", F->str()}, {"f", *o.f}};
  if (!o.h.empty()) params["h"] = o.h;
  r.doc = header("zeta", "Weil functional equation for curves", params);
  r.doc["model"] = m.str();
  r.doc["q"] = z.q;
  r.doc["genus"] = z.genus;
  r.doc["counts"] = z.counts;
  r.doc["numerator"] = poly(z.poly);
  r.doc["functional_equation"] = satisfies_functional_equation(z.poly, z.q, z.genus);
  r.table.header = {"m", "N_m"};
  for (std::size_t i = 0; i < z.counts.size(); ++i) r.table.rows.push_back({std::to_string(i + 1), std::to_string(z.counts[i])});
  return r;
}

struct TwistOpts {
  std::optional<std::uint32_t> p;
  std::optional<int> ap;
  std::optional<std::string> base;
  std::optional<unsigned> n;
};

Report run_twist(const TwistOpts& o, const Budget& budget, unsigned threads) {
  need(o.p, "p");
  need(o.ap, "ap");
  need(o.base, "base");
  need(o.n, "n");
  std::string coeffs = *o.base;
  if (coeffs.rfind("f=", 0) == 0) coeffs = coeffs.substr(2);
  const FieldPtr F = FiniteField::prime(*o.p);
  const auto res = twist_rank(*o.ap, *o.p, parse_fq_poly(F, coeffs), *o.n, budget, threads);
  Report r;
  r.doc = header("twist-rank", "ranks of quadratic twists of a supersingular curve",
                 {{"p", *o.p}, {"ap", *o.ap}, {"base", *o.base}, {"n", *o.n}});
  r.doc["d"] = res.d;
  r.doc["model"] = res.model.str();
  r.doc["genus"] = res.model.genus;
  r.doc["counts"] = res.zeta.counts;
  r.doc["zeta_numerator"] = poly(res.zeta.poly);
  r.doc["weil_polynomial"] = poly(res.weil.poly);
  r.doc["weil_label"] = res.weil.label;
  r.doc["multiplicity"] = res.multiplicity;
  r.doc["rank"] = res.rank;
  r.table.header = {"p", "ap", "n", "d", "genus", "multiplicity", "rank"};
  r.table.rows.push_back({std::to_string(*o.p), std::to_string(*o.ap), std::to_string(*o.n), std::to_string(res.d),
                          std::to_string(res.model.genus), std::to_string(res.multiplicity), std::to_string(res.rank)});
  return r;
}

WeierstrassModel parse_model(const FieldPtr& F, const std::string& text) {
  std::map<std::string, FqPoly> c;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.find_first_not_of(" ") == std::string::npos) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw PreconditionError("model entry '" + item + "' must read key=coefficients");
    const std::string key = item.substr(0, eq), val = item.substr(eq + 1);
    static const char* keys[] = {"a2", "a4", "a6", "c0", "c1", "c2", "c3", "c4"};
    if (std::find(std::begin(keys), std::end(keys), key) == std::end(keys))
      throw PreconditionError("unknown model key '" + key + "'");
    c[key] = val.empty() ? FqPoly(F) : parse_fq_poly(F, val);
  }
  auto get = [&](const char* k) { return c.count(k) ? c[k] : FqPoly(F); };
  const bool quartic = c.count("c0") || c.count("c1") || c.count("c2") || c.count("c3") || c.count("c4");
  const bool weier = c.count("a2") || c.count("a4") || c.count("a6");
  if (quartic == weier) throw PreconditionError("model needs either a2/a4/a6 or c0..c4 keys");
  if (quartic) return quartic_to_weierstrass({get("c0"), get("c1"), get("c2"), get("c3"), get("c4")});
  return WeierstrassModel::make(get("a2"), get("a4"), get("a6"));
}

Json l_json(const LSeries& l) {
  Json j;
  j["coeffs"] = poly(l.poly);
  j["D"] = l.degree;
  j["conductor_degree"] = l.conductor_degree;
  Json cond = Json::array();
  for (const auto& [p, e] : l.conductor) cond.push_back(Json::array({p, e}));
  j["conductor"] = std::move(cond);
  j["sign"] = l.sign;
  j["rank"] = analytic_rank(l);
  return j;
}

Report run_lfun(std::optional<std::uint64_t> q, const std::string& field, std::optional<std::string> model,
                int extra, const Budget& budget) {
  need(model, "model");
  const FieldPtr F = field_from(field, q);
  const auto E = parse_model(F, *model);
  LFunctionOptions opt;
  opt.extra_degree = extra;
  const auto l = l_function(E, budget, opt);
  Report r;
  r.doc = header("lfun", "L-functions over F_q(t) and their functional equation",
                 {{"field", F->str()}, {"model", *model}, {"extra_degree", extra}});
  r.doc["weierstrass"] = E.str();
  const Json lj = l_json(l);
  for (auto& [k, v] : lj.items()) r.doc[k] = v;
  r.table.header = {"place", "exponent"};
  for (const auto& [p, e] : l.conductor) r.table.rows.push_back({p, std::to_string(e)});
  return r;
}

struct TowersOpts {
  std::optional<int> family_case;
  unsigned g = 1;
  std::optional<std::uint32_t> p;
  std::optional<unsigned> n;
};

Report run_verify_towers(const TowersOpts& o, const Budget& budget) {
  need(o.family_case, "case");
  need(o.p, "p");
  need(o.n, "n");
  const auto v = verify_towers(*o.family_case, o.g, *o.p, *o.n, budget);
  Report r;
  r.doc = header("verify-towers", "central vanishing in Kummer towers",
                 {{"case", *o.family_case}, {"g", o.g}, {"p", *o.p}, {"n", *o.n}});
  r.doc["equation"] = v.family.equation;
  r.doc["d"] = v.d;
  r.doc["q"] = v.q;
  r.doc["weight"] = v.family.weight;
  r.doc["sign_rho"] = v.family.sign_rho;
  r.doc["swan_zero"] = v.family.conductor.swan_zero;
  r.doc["swan_infinity"] = v.family.conductor.swan_infinity;
  r.doc["deg_n_prime"] = v.family.conductor.deg_n_prime;
  r.doc["weierstrass"] = v.family.weierstrass->str();
  r.doc["L"] = l_json(v.l);
  r.doc["gos_consistent"] = v.gos_consistent;
  Json parts = Json::array();
  for (const auto& p : v.primitive_parts)
    parts.push_back({{"order", p.order}, {"exact", p.exact}, {"poly", poly(p.poly)}});
  r.doc["primitive_parts"] = std::move(parts);
  Json verdicts = Json::array();
  r.table.header = {"orbit", "size", "character_order", "factor", "verdict", "method"};
  for (const auto& ov : v.verdicts) {
    verdicts.push_back({{"orbit", orbit_json(ov.orbit)},
                        {"size", ov.orbit.size()},
                        {"character_order", ov.character_order},
                        {"factor", poly(ov.factor)},
                        {"verdict", ov.good ? "good" : "bad"},
                        {"method", ov.method}});
    r.table.rows.push_back({join(ov.orbit.elements, " "), std::to_string(ov.orbit.size()),
                            std::to_string(ov.character_order), ov.factor.str(), ov.good ? "good" : "bad", ov.method});
  }
  r.doc["verdicts"] = std::move(verdicts);
  r.doc["good_product"] = poly(v.good_product);
  r.doc["good_product_divides"] = v.cumulative.divides;
  r.doc["quotient"] = poly(v.cumulative.quotient);
  r.doc["lower_bound_center"] = v.good_count;
  r.doc["rank"] = v.rank;
  r.doc["center_bound_holds"] = v.center_bound_holds;
  r.doc["extended_q"] = v.extended.q;
  r.doc["lower_bound_extended"] = v.good_size_sum;
  r.doc["extended_rank"] = v.extended_rank;
  r.doc["extended_bound_holds"] = v.extended_bound_holds;
  r.doc["asymptotic_form"] = rat(v.prediction.asymptotic_form);
  return r;
}

struct ShiodaOpts {
  std::optional<std::uint32_t> p;
  std::string poly;
  std::optional<int> family_case;
  unsigned g = 1;
};

Report run_shioda(const ShiodaOpts& o) {
  need(o.p, "p");
  if (o.poly.empty() == !o.family_case) throw PreconditionError("give exactly one of --poly and --case");
  const auto mons = o.family_case ? family_monomials(*o.family_case, o.g) : parse_monomials(o.poly);
  const auto s = shioda_check(mons, *o.p);
  Report r;
  Json params = {{"p", *o.p}};
  if (o.family_case) {
    params["case"] = *o.family_case;
    params["g"] = o.g;
  } else {
    params["poly"] = o.poly;
  }
  r.doc = header("shioda", "four-monomial surfaces dominated by Fermat surfaces", params);
  r.doc["monomials"] = format_monomials(s.monomials);
  Json rows = Json::array();
  for (std::size_t i = 0; i < s.a.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < s.a.cols(); ++j) row.push_back(big(s.a(i, j)));
    rows.push_back(std::move(row));
  }
  r.doc["matrix"] = std::move(rows);
  r.doc["det"] = big(s.det);
  r.doc["delta"] = s.delta ? big(*s.delta) : Json(nullptr);
  r.doc["passes"] = s.passes;
  r.doc["failure"] = s.failure;
  r.table.header = {"det", "delta", "passes", "failure"};
  r.table.rows.push_back({to_string(s.det), s.delta ? to_string(*s.delta) : "", yes(s.passes), s.failure});
  return r;
}

Report run_bounds(std::optional<int> D, std::optional<std::uint64_t> q) {
  need(D, "D");
  need(q, "q");
  const auto b = rank_bounds(*D, *q);
  Report r;
  r.doc = header("bounds", "geometric and arithmetic rank bounds", {{"D", *D}, {"q", *q}});
  r.doc["geometric"] = b.geometric;
  r.doc["brumer_defined"] = b.brumer_defined;
  r.doc["brumer_main_term"] = b.brumer_defined ? Json(b.brumer_decimal) : Json(nullptr);
  r.doc["brumer_note"] = b.brumer_defined ? "main term only" : "log_q D = 0, term undefined";
  r.table.header = {"D", "q", "geometric", "brumer_main_term"};
  r.table.rows.push_back({std::to_string(*D), std::to_string(*q), std::to_string(b.geometric),
                          b.brumer_defined ? b.brumer_decimal : ""});
  return r;
}

Report run_verify_all(std::optional<std::string> profile, const Globals& g, const Budget& budget) {
  need(profile, "profile");
  if (profile->empty()) throw PreconditionError("--profile must be quick or full");
  const auto rep = verify_all(*profile, budget, g.threads);
  Report r;
  r.doc = header("verify-all", "acceptance suite", {{"profile", *profile}});
  Json arr = Json::array();
  r.table.header = {"criterion", "result", "name"};
  for (const auto& c : rep.criteria) {
    Json j = {{"id", c.id}, {"name", c.name}, {"passed", c.passed}, {"partial", c.skipped}, {"details", c.details}};
    if (g.timings) j["seconds"] = c.seconds;
    arr.push_back(std::move(j));
    r.table.rows.push_back({std::to_string(c.id), c.passed ? "PASS" : "FAIL", c.name});
  }
  r.doc["criteria"] = std::move(arr);
  r.doc["all_passed"] = rep.all_passed();
  r.exit_code = rep.all_passed() ? 0 : 1;
  return r;
}

int exit_for(const Error& e) {
  switch (e.kind()) {
    case Error::Kind::kPrecondition: return 2;
    case Error::Kind::kBudget: return 3;
    default: return 4;
  }
}

const char* kind_name(const Error& e) {
  switch (e.kind()) {
    case Error::Kind::kPrecondition: return "precondition";
    case Error::Kind::kBudget: return "budget";
    default: return "invariant";
  }
}

}  // namespace

RunResult run(const std::vector<std::string>& args) {
  RunResult result;
  CLI::App app{"Exact L-functions, zeta functions and rank bounds over F_q(t)", "towerlab"};
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);
  Globals g;
  app.add_option("--threads", g.threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--config", g.config, "key=value file of option defaults");
  app.add_option("--output", g.output, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", g.out, "write the report to a file");
  app.add_flag("--timings", g.timings, "include wall-clock timings in JSON");
  app.add_flag("--json", g.json, "same as --output json");
  app.fallthrough();

  std::function<Report(const Budget&)> chosen;

  auto* la = app.add_subcommand("la", "block-cyclic operator checks");
  la->require_subcommand(1);
  auto* self = la->add_subcommand("selftest", "seeded divisibility suite");
  LaOpts la_o;
  self->add_option("--trials", la_o.trials);
  self->add_option("--seed", la_o.seed);
  self->add_flag("--variant", la_o.variant, "restricted-form instances");
  self->callback([&] { chosen = [&](const Budget&) { return run_la(la_o); }; });

  auto* orb = app.add_subcommand("orbits", "orbits of multiplication by q on Z/dZ");
  std::optional<std::uint64_t> orb_d, orb_q;
  orb->add_option("--d", orb_d);
  orb->add_option("--q", orb_q);
  orb->callback([&] { chosen = [&](const Budget&) { return run_orbits(orb_d, orb_q); }; });

  auto* pred = app.add_subcommand("towers-predict", "predicted central vanishing in a Kummer tower");
  PredictOpts po;
  pred->add_option("--q", po.q);
  pred->add_option("--n", po.n);
  pred->add_option("--w", po.w);
  pred->add_option("--sign", po.sign);
  pred->add_option("--excluded", po.excluded);
  pred->add_option("--swan0", po.swan0);
  pred->add_option("--swan-inf", po.swan_inf);
  pred->add_option("--deg-n-prime", po.deg_n);
  pred->add_option("--case", po.family_case);
  pred->add_option("--g", po.g);
  pred->callback([&] { chosen = [&](const Budget&) { return run_predict(po); }; });

  auto* av2 = app.add_subcommand("av2", "binomial conductor exponents");
  std::optional<unsigned> av_k, av_g;
  unsigned av_limit = 10000;
  av2->add_option("--k", av_k);
  av2->add_option("--g", av_g);
  av2->add_option("--limit", av_limit);
  bool av_find = false;
  av2->add_flag("--find-g", av_find, "search for the smallest admissible g (always reported)");
  av2->callback([&] { chosen = [&](const Budget&) { return run_av2(av_k, av_g, av_limit); }; });

  auto* zeta = app.add_subcommand("zeta", "zeta numerator of a hyperelliptic curve");
  ZetaOpts zo;
  zeta->add_option("--field", zo.field, "p=5 or p=2;m=1,1,1");
  zeta->add_option("--q", zo.q);
  zeta->add_option("--p", zo.q, "prime field F_p");
  zeta->add_option("--model", zo.model, "f=c0,c1,...;h=...");
  zeta->add_option("--f", zo.f);
  zeta->add_option("--h", zo.h);
  zeta->callback([&] { chosen = [&](const Budget& b) { return run_zeta(zo, b, g.threads); }; });

  auto* tw = app.add_subcommand("twist-rank", "rank of quadratic twists in a Kummer tower");
  TwistOpts to;
  tw->add_option("--p", to.p);
  tw->add_option("--ap", to.ap);
  tw->add_option("--base", to.base, "f=c0,c1,...");
  tw->add_option("--n", to.n);
  tw->callback([&] { chosen = [&](const Budget& b) { return run_twist(to, b, g.threads); }; });

  auto* lf = app.add_subcommand("lfun", "L-function of an elliptic curve over F_q(t)");
  std::optional<std::uint64_t> lf_q;
  std::string lf_field;
  std::optional<std::string> lf_model;
  int lf_extra = 0;
  lf->add_option("--q", lf_q);
  lf->add_option("--field", lf_field);
  lf->add_option("--model", lf_model, "a2=..;a4=..;a6=.. or c0=..;..;c4=..");
  lf->add_option("--extra-degree", lf_extra)->check(CLI::NonNegativeNumber);
  lf->callback([&] { chosen = [&](const Budget& b) { return run_lfun(lf_q, lf_field, lf_model, lf_extra, b); }; });

  auto* vt = app.add_subcommand("verify-towers", "orbit-by-orbit check of the predicted factors");
  TowersOpts vo;
  vt->add_option("--case", vo.family_case);
  vt->add_option("--g", vo.g);
  vt->add_option("--p", vo.p);
  vt->add_option("--n", vo.n);
  vt->callback([&] { chosen = [&](const Budget& b) { return run_verify_towers(vo, b); }; });

  auto* sh = app.add_subcommand("shioda", "Shioda's conditions for a four-monomial surface");
  ShiodaOpts so;
  sh->add_option("--p", so.p);
  sh->add_option("--poly", so.poly, "c:u,x,y;...");
  sh->add_option("--case", so.family_case);
  sh->add_option("--g", so.g);
  sh->callback([&] { chosen = [&](const Budget&) { return run_shioda(so); }; });

  auto* bd = app.add_subcommand("bounds", "geometric and Brumer-type rank bounds");
  std::optional<int> bd_D;
  std::optional<std::uint64_t> bd_q;
  bd->add_option("--D", bd_D);
  bd->add_option("--q", bd_q);
  bd->callback([&] { chosen = [&](const Budget&) { return run_bounds(bd_D, bd_q); }; });

  auto* va = app.add_subcommand("verify-all", "acceptance suite");
  std::optional<std::string> va_profile;
  va->add_option("--profile", va_profile, "quick or full");
  va->callback([&] { chosen = [&](const Budget& b) { return run_verify_all(va_profile, g, b); }; });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::Success& e) {
    std::ostringstream os;
    (void)app.exit(e, os, os);
    result.output = os.str();
    return result;
  } catch (const CLI::ParseError& e) {
    result.exit_code = 2;
    result.error = "error: usage: " + std::string(e.what()) + "\n";
    return result;
  } catch (const Error& e) {
    result.exit_code = exit_for(e);
    result.error = std::string("error: ") + kind_name(e) + ": " + e.what() + "\n";
    return result;
  }

  try {
    if (!g.config.empty()) {
      CLI::App* leaf = &app;
      while (!leaf->get_subcommands().empty()) leaf = leaf->get_subcommands().front();
      for (const auto& [key, value] : read_config(g.config)) {
        CLI::Option* opt = leaf->get_option_no_throw("--" + key);
        if (opt == nullptr) opt = app.get_option_no_throw("--" + key);
        if (opt == nullptr) throw PreconditionError("config key '" + key + "' is not an option of this command");
        if (opt->count() > 0) continue;  // command line wins
        opt->add_result(value);
        opt->run_callback();
      }
    }
    if (g.json) g.output = "json";
    if (!chosen) throw PreconditionError("no command given");
    const Budget budget = Budget::from_environment();
    const auto t0 = std::chrono::steady_clock::now();
    Report report = chosen(budget);
    if (g.timings) {
      report.doc["timings"] = {
          {"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()},
          {"threads", g.threads}};
    }
    result.output = render(report, g.output);
    result.exit_code = report.exit_code;
    if (!g.out.empty()) {
      std::ofstream out(g.out, std::ios::binary);
      if (!out) throw PreconditionError("cannot write '" + g.out + "'");
      out << result.output;
      result.output.clear();
    }
  } catch (const CLI::ParseError& e) {
    result.exit_code = 2;
    result.error = "error: usage: " + std::string(e.what()) + "\n";
  } catch (const Error& e) {
    result.exit_code = exit_for(e);
    result.error = std::string("error: ") + kind_name(e) + ": " + e.what() + "\n";
  } catch (const std::exception& e) {
    result.exit_code = 4;
    result.error = std::string("error: invariant: ") + e.what() + "\n";
  }
  return result;
}

}  // namespace towerlab::cli
