#pragma once

/// @file relations.hpp
/// @brief The product of all x_1 + e_1 x_2 + ... + e_n x_{n+1} over d-th
/// roots of unity e_i: expansion, integrality, membership in the ideal
/// power, symmetry and the induced kernel element of x(x_1+...+x_{n+1}).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "exact.hpp"
#include "graded_poly.hpp"
#include "ideal.hpp"
#include "parallel.hpp"
#include "serialize.hpp"
#include "series.hpp"

namespace idealpower {

struct CycloForm {
  std::size_t nvars = 0;  // n+1
  int d = 0;
  GradedPoly<CycloInt> form{0};
  std::size_t factors = 0;
};

/// Expands the product over all d^n root-of-unity combinations with a
/// balanced product tree.
inline CycloForm build_F(std::size_t nvars, int d, const ResourceGuard& guard = {}) {
  if (nvars < 2 || d < 1) throw std::invalid_argument("need n+1 >= 2 and d >= 1");
  const int n = static_cast<int>(nvars) - 1;
  const BigInt count = ipow(d, n);
  if (count > 4096) throw GuardExceeded("too many linear factors: " + count.str());
  const std::size_t nfactors = static_cast<std::size_t>(count);
  check_basis_guard(binomial_u64(static_cast<long long>(nfactors) + n, n), guard, "cyclotomic product");

  std::vector<GradedPoly<CycloInt>> level;
  level.reserve(nfactors);
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  for (std::size_t f = 0; f < nfactors; ++f) {
    std::size_t code = f;
    for (int i = 0; i < n; ++i) {
      e[static_cast<std::size_t>(i)] = static_cast<int>(code % static_cast<std::size_t>(d));
      code /= static_cast<std::size_t>(d);
    }
    std::vector<CycloInt> coeffs{CycloInt(BigInt(1), d)};
    for (int i = 0; i < n; ++i) coeffs.push_back(CycloInt::root_power(e[static_cast<std::size_t>(i)], d));
    level.push_back(GradedPoly<CycloInt>::linear_form(coeffs));
  }
  while (level.size() > 1) {
    std::vector<GradedPoly<CycloInt>> next;
    next.reserve((level.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < level.size(); i += 2) next.push_back(multiply(level[i], level[i + 1]));
    if (level.size() % 2) next.push_back(std::move(level.back()));
    level = std::move(next);
  }
  return CycloForm{nvars, d, std::move(level.front()), nfactors};
}

/// True when every coefficient lies in Z.
inline bool is_integral(const CycloForm& F) {
  for (const auto& [m, c] : F.form.terms())
    if (!c.is_rational_integer()) return false;
  return true;
}

inline GradedPoly<BigInt> integer_form(const CycloForm& F) {
  if (!is_integral(F)) throw std::logic_error("form has non-integral coefficients");
  return map_coefficients<BigInt>(F.form, [](const CycloInt& c) { return c.integer_part(); });
}

/// Every exponent divisible by d, so F is a polynomial in the x_i^d of
/// degree d^{n-1} in them and lies in (x_1^d, ..., x_{n+1}^d)^{d^{n-1}}.
inline bool verify_membership(const GradedPoly<BigInt>& F, int d) {
  for (const auto& [m, c] : F.terms())
    for (auto e : m.exponents())
      if (e % d) return false;
  return true;
}

/// Invariance under all adjacent transpositions (which generate S_{n+1}).
inline bool verify_symmetry(const GradedPoly<BigInt>& F) {
  const std::size_t n = F.nvars();
  if (n < 3) throw std::invalid_argument("precondition: symmetry needs n+1 >= 3");
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Permutation s(n);
    std::iota(s.begin(), s.end(), std::size_t{0});
    std::swap(s[i], s[i + 1]);
    if (!(apply_permutation(F, s) == F)) return false;
  }
  return true;
}

inline GradedPoly<BigInt> sum_of_variables(std::size_t nvars) {
  return GradedPoly<BigInt>::linear_form(std::vector<BigInt>(nvars, 1));
}

/// Exact quotient by x_1 + ... + x_n using grevlex leading terms; throws when
/// the remainder is nonzero.
inline GradedPoly<BigInt> divide_by_sum(const GradedPoly<BigInt>& F) {
  const std::size_t n = F.nvars();
  const auto L = sum_of_variables(n);
  GradedPoly<BigInt> q(n), r = F;
  const Monomial x1 = Monomial::variable(n, 0);
  while (!r.is_zero()) {
    const auto [m, c] = r.leading_term();
    if (!x1.divides(m)) throw std::logic_error("nonzero remainder in division by the sum of the variables");
    const Monomial t = x1.quotient_of(m);
    const BigInt coeff = c;
    q.add_term(t, coeff);
    r -= L.times_monomial(t).scaled(coeff);
  }
  return q;
}

inline bool in_ci_power(const GradedPoly<BigInt>& p, int d, int k) {
  for (const auto& [m, c] : p.terms())
    if (!monomial_ci_membership(m, d, k)) return false;
  return true;
}

struct KernelElement {
  GradedPoly<BigInt> G{0};
  int power = 0;           // the ideal power of T
  bool product_in_ideal = false;  // G * L vanishes in T
  bool nonzero_in_T = false;      // G itself does not
};

inline KernelElement kernel_element(const GradedPoly<BigInt>& F, int d) {
  if (!verify_membership(F, d)) throw std::invalid_argument("precondition: membership not verified");
  const std::size_t n = F.nvars();
  KernelElement out;
  out.G = divide_by_sum(F);
  if (!(multiply(out.G, sum_of_variables(n)) == F)) throw std::logic_error("division identity failed");
  out.power = static_cast<int>(ipow(d, static_cast<int>(n) - 2));
  out.product_in_ideal = in_ci_power(F, d, out.power);
  out.nonzero_in_T = !in_ci_power(out.G, d, out.power);
  return out;
}

/// x_1^s F/L in T_{n,d,k} for k >= d^{n-2}, with F built in n variables.
/// The default s = d(k - d^{n-2}) puts it in degree dk - 1, killed by L.
inline KernelElement shifted_kernel_witness(int n, int d, int k, std::optional<int> shift_override = std::nullopt,
                                            const ResourceGuard& guard = {}) {
  if (n < 2 || d < 1) throw std::invalid_argument("need n >= 2, d >= 1");
  const BigInt base = ipow(d, n - 2);
  if (BigInt(k) < base) throw std::invalid_argument("needs k >= d^(n-2)");
  const auto F = integer_form(build_F(static_cast<std::size_t>(n), d, guard));
  auto ke = kernel_element(F, d);
  const int shift = shift_override ? *shift_override : d * (k - static_cast<int>(base));
  const auto nv = static_cast<std::size_t>(n);
  ke.G = ke.G.times_monomial(Monomial::variable(nv, 0, shift));
  ke.power = k;
  ke.product_in_ideal = in_ci_power(multiply(ke.G, sum_of_variables(nv)), d, k);
  ke.nonzero_in_T = !in_ci_power(ke.G, d, k);
  return ke;
}

// ---------------------------------------------------------------------------
// Comparison with the published table of symmetrized seeds

enum class SymmetrizationConvention { GroupSum, DistinctImages };

inline std::string convention_name(SymmetrizationConvention c) {
  return c == SymmetrizationConvention::GroupSum ? "group-sum" : "distinct-images";
}

/// Each term c*m becomes c times the sum of the distinct monomials in the
/// S_n-orbit of m.
inline GradedPoly<BigInt> symmetrize_distinct(const GradedPoly<BigInt>& p) {
  GradedPoly<BigInt> r(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    auto e = m.exponents();
    std::sort(e.begin(), e.end());
    do r.add_term(Monomial(e), c);
    while (std::next_permutation(e.begin(), e.end()));
  }
  return r;
}

struct ScalarComparison {
  bool match = false;
  BigInt num = 0, den = 0;  // F * den == S * num term by term when matched
  struct Diff {
    Monomial m;
    BigInt f, s;
  };
  std::vector<Diff> mismatches;
};

/// Compares F with S up to one global rational factor taken from F's
/// leading term.
inline ScalarComparison compare_up_to_scalar(const GradedPoly<BigInt>& F, const GradedPoly<BigInt>& S) {
  ScalarComparison out;
  if (F.is_zero() || S.is_zero()) {
    out.match = F.is_zero() && S.is_zero();
    return out;
  }
  const auto& [lm, lf] = F.leading_term();
  const BigInt* ls = S.coefficient(lm);
  out.num = lf;
  out.den = ls ? *ls : BigInt(0);
  if (out.den == 0) {
    out.num = 1;
    out.den = 1;
  }
  std::map<Monomial, std::pair<BigInt, BigInt>, GrevlexGreater> all;
  for (const auto& [m, c] : F.terms()) all[m].first = c * out.den;
  for (const auto& [m, c] : S.terms()) all[m].second = c * out.num;
  out.match = ls != nullptr;
  for (const auto& [m, fs] : all) {
    if (fs.first != fs.second) {
      out.match = false;
      const BigInt* fc = F.coefficient(m);
      const BigInt* sc = S.coefficient(m);
      out.mismatches.push_back({m, fc ? *fc : BigInt(0), sc ? *sc : BigInt(0)});
    }
  }
  return out;
}

struct TableSeed {
  std::size_t nvars;
  int d;
  std::string seed;
};

/// Seeds as printed, per (n+1, d) label.
inline const std::vector<TableSeed>& example_table_seeds() {
  static const std::vector<TableSeed> seeds{
      {3, 2, "x^4+x^2y^2"},
      {4, 2, "x^8-4x^6y^2+6x^4y^4+4x^4y^2z^2"},
      {5, 2,
       "x^16-8x^14y^2+28x^12y^4+40x^12y^2z^2-56x^10y^6-72x^10y^4z^2-176x^10y^2z^2u^2+70x^8y^8+40x^8y^6z^2"
       "+36x^8y^4z^4+344x^8y^4z^2u^2-757x^8y^2z^2u^2v^2+16x^6y^6z^4-416x^6y^6z^2u^2-272x^6y^4z^4u^2"
       "+928x^6y^4z^2u^2v^2+2008x^4y^4z^4u^4-1520x^4y^4z^4u^2v^2"},
      {3, 3,
       "x^27+36x^24y^3-9x^21y^3z^3+684x^18y^9-234x^18y^6z^3+3339x^18y^3z^3u^3+126x^15y^12-711x^15y^9z^3"
       "+513x^15y^6z^6+1512x^15y^6z^3u^3-990x^12y^12z^3+2961x^12y^9z^6-12222x^12y^6z^6u^3+278371x^12y^6z^6u^3"
       "-12171x^9y^9z^9-6867x^9y^9z^6u^3+120312x^9y^6z^6u^6"},
  };
  return seeds;
}

struct ReadingReport {
  std::size_t nvars = 0;
  int d = 0;
  std::string status;  // "match", "mismatch", "seed-unreadable"
  std::string note;
  int seed_degree = -1;
  int form_degree = -1;
  std::vector<std::pair<std::string, ScalarComparison>> conventions;
  GradedPoly<BigInt> F{0};
};

struct TableComparison {
  std::size_t label_nvars = 0;
  int label_d = 0;
  bool match = false;  // some reading matches under some convention
  std::vector<ReadingReport> readings;
};

namespace detail {

inline ReadingReport compare_reading(std::size_t nvars, int d, const std::string& seed, const ResourceGuard& guard) {
  ReadingReport rr;
  rr.nvars = nvars;
  rr.d = d;
  rr.F = integer_form(build_F(nvars, d, guard));
  rr.form_degree = rr.F.degree();
  GradedPoly<BigInt> p(nvars);
  try {
    p = parse_poly(seed, default_variable_names(nvars));
  } catch (const std::exception& e) {
    rr.status = "seed-unreadable";
    rr.note = e.what();
    return rr;
  }
  rr.seed_degree = p.degree();
  bool any = false;
  for (auto conv : {SymmetrizationConvention::GroupSum, SymmetrizationConvention::DistinctImages}) {
    const auto S = conv == SymmetrizationConvention::GroupSum ? symmetrize(p) : symmetrize_distinct(p);
    auto cmp = compare_up_to_scalar(rr.F, S);
    any = any || cmp.match;
    rr.conventions.emplace_back(convention_name(conv), std::move(cmp));
  }
  rr.status = any ? "match" : "mismatch";
  return rr;
}

}  // namespace detail

/// Recomputes F for a table label and compares with the symmetrized seed.
/// The (3,3) row is printed with four variables and degree 27, so it is
/// also read as (4,3).
inline TableComparison compare_example_table(std::size_t nvars, int d, const ResourceGuard& guard = {}) {
  const auto& seeds = example_table_seeds();
  auto it = std::find_if(seeds.begin(), seeds.end(), [&](const TableSeed& s) { return s.nvars == nvars && s.d == d; });
  if (it == seeds.end()) throw std::invalid_argument("no table row for this label");
  TableComparison out;
  out.label_nvars = nvars;
  out.label_d = d;
  out.readings.push_back(detail::compare_reading(nvars, d, it->seed, guard));
  if (nvars == 3 && d == 3) out.readings.push_back(detail::compare_reading(4, 3, it->seed, guard));
  for (const auto& r : out.readings) out.match = out.match || r.status == "match";
  return out;
}

inline json table_comparison_json(const TableComparison& t, std::size_t max_mismatches = 50) {
  json readings = json::array();
  for (const auto& r : t.readings) {
    json convs = json::array();
    for (const auto& [name, c] : r.conventions) {
      json mm = json::array();
      for (std::size_t i = 0; i < c.mismatches.size() && i < max_mismatches; ++i)
        mm.push_back(json{{"exponents", c.mismatches[i].m.exponents()},
                          {"F", to_decimal(c.mismatches[i].f)},
                          {"symmetrized", to_decimal(c.mismatches[i].s)}});
      convs.push_back(json{{"convention", name},
                           {"match", c.match},
                           {"scale", to_decimal(c.num) + "/" + to_decimal(c.den)},
                           {"mismatch_count", c.mismatches.size()},
                           {"mismatches", mm}});
    }
    readings.push_back(json{{"n_plus_1", r.nvars},
                            {"d", r.d},
                            {"status", r.status},
                            {"note", r.note},
                            {"seed_degree", r.seed_degree},
                            {"form_degree", r.form_degree},
                            {"conventions", convs}});
  }
  return json{{"schema", 1}, {"label", {t.label_nvars, t.label_d}}, {"match", t.match}, {"readings", readings}};
}

}  // namespace idealpower
