#pragma once

/// @file wlp.hpp
/// @brief Weak Lefschetz checks for quotients by ideal powers, by direct
/// rank of the multiplication map and by comparing with the quotient by L.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hilbert.hpp"
#include "ideal.hpp"
#include "parallel.hpp"
#include "rank.hpp"

namespace idealpower {

struct WlpRow {
  int i = 0;
  std::uint64_t dim_i = 0;
  std::uint64_t dim_next = 0;
  std::uint64_t rank = 0;
  bool maximal = true;
};

enum class WlpMethod { Rank, Series, Both };

inline std::string wlp_method_name(WlpMethod m) {
  switch (m) {
    case WlpMethod::Rank: return "rank";
    case WlpMethod::Series: return "series";
    case WlpMethod::Both: return "both";
  }
  return "?";
}

inline WlpMethod parse_wlp_method(const std::string& s) {
  if (s == "rank") return WlpMethod::Rank;
  if (s == "series") return WlpMethod::Series;
  if (s == "both") return WlpMethod::Both;
  throw std::invalid_argument("unknown WLP method '" + s + "'");
}

struct WlpReport {
  IdealSpec spec;
  WlpMethod method = WlpMethod::Rank;
  std::vector<std::uint64_t> primes;
  std::vector<std::uint64_t> linear_form;  // coefficients of L over the first prime
  std::vector<WlpRow> rows;
  bool wlp = true;
  std::vector<int> failure_degrees;
  std::string certification;
  std::vector<std::string> flags;

  std::string verdict() const { return wlp ? "WLP" : "fails"; }
};

class MethodDisagreement : public std::runtime_error {
 public:
  MethodDisagreement(const std::string& what, WlpReport rank, WlpReport series)
      : std::runtime_error(what), rank_report(std::move(rank)), series_report(std::move(series)) {}
  WlpReport rank_report;
  WlpReport series_report;
};

struct WlpOptions {
  WlpMethod method = WlpMethod::Rank;
  std::vector<std::uint64_t> primes;      // empty: spec.prime, plus a retry prime on failure
  std::vector<std::uint64_t> linear_form; // empty: all ones for monomial specs, seeded random otherwise
  std::uint64_t linear_seed = 1;
  std::size_t exact_column_limit = 2000;
  bool certify_exact = true;
  ResourceGuard guard;
};

// ---------------------------------------------------------------------------

/// Standard monomials of a monomial quotient in one degree, with an index.
struct QuotientBasis {
  std::vector<Monomial> monomials;
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> index;

  QuotientBasis() = default;
  explicit QuotientBasis(std::vector<Monomial> ms) : monomials(std::move(ms)) {
    for (std::size_t j = 0; j < monomials.size(); ++j) index.emplace(monomials[j], static_cast<std::uint32_t>(j));
  }
  std::size_t size() const { return monomials.size(); }
};

namespace detail {

inline std::uint64_t second_prime(std::uint64_t p) { return p == kWitnessPrime ? kDefaultPrime : kWitnessPrime; }

// x L on a monomial quotient: image rows of each standard monomial.
inline std::vector<std::vector<std::pair<std::uint32_t, std::uint64_t>>> monomial_map_rows(
    const QuotientBasis& from, const QuotientBasis& to, const std::vector<std::uint64_t>& L) {
  std::vector<std::vector<std::pair<std::uint32_t, std::uint64_t>>> rows;
  rows.reserve(from.size());
  for (const auto& m : from.monomials) {
    std::vector<std::pair<std::uint32_t, std::uint64_t>> row;
    for (std::size_t j = 0; j < L.size(); ++j) {
      if (L[j] == 0) continue;
      auto it = to.index.find(m.times_variable(j));
      if (it != to.index.end()) row.emplace_back(it->second, L[j]);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::uint64_t monomial_map_rank(const QuotientBasis& from, const QuotientBasis& to,
                                       const std::vector<std::uint64_t>& L, std::uint64_t prime) {
  if (from.size() == 0 || to.size() == 0) return 0;
  ModularEchelon e(to.size(), prime);
  for (const auto& r : monomial_map_rows(from, to, L)) {
    ModularEchelon::SparseRow row;
    for (const auto& [c, v] : r) row.emplace_back(c, static_cast<std::uint32_t>(v % prime));
    e.insert(row);
    if (e.full()) break;
  }
  return e.rank();
}

inline std::uint64_t monomial_map_rank_exact(const QuotientBasis& from, const QuotientBasis& to,
                                             const std::vector<std::uint64_t>& L) {
  if (from.size() == 0 || to.size() == 0) return 0;
  IntegerEchelon e(to.size());
  for (const auto& r : monomial_map_rows(from, to, L)) {
    IntegerEchelon::SparseRow row;
    for (const auto& [c, v] : r) row.emplace_back(c, BigInt(v));
    e.insert(std::move(row));
    if (e.full()) break;
  }
  return e.rank();
}

inline std::vector<PrimeFieldElement> as_field(const std::vector<std::uint64_t>& L, std::uint64_t prime) {
  std::vector<PrimeFieldElement> out;
  for (auto c : L) out.emplace_back(static_cast<long long>(c % prime), prime);
  return out;
}

// Generators of the quotient by L: x_{n-1} -> -(sum_{j<n-1} L_j x_j) / L_{n-1}.
inline std::vector<GradedPoly<PrimeFieldElement>> restrict_to_hyperplane(
    const std::vector<GradedPoly<PrimeFieldElement>>& gens, const std::vector<std::uint64_t>& L, std::uint64_t prime) {
  const std::size_t n = L.size();
  if (n < 2) throw std::invalid_argument("quotient by L needs n >= 2");
  if (L.back() % prime == 0) throw std::invalid_argument("last coefficient of L must be nonzero");
  const auto Lf = as_field(L, prime);
  const PrimeFieldElement scale = -Lf.back().inverse();
  std::vector<PrimeFieldElement> repl(Lf.begin(), Lf.end() - 1);
  for (auto& c : repl) c = c * scale;
  const auto replacement = GradedPoly<PrimeFieldElement>::linear_form(repl);
  std::vector<GradedPoly<PrimeFieldElement>> out;
  for (const auto& g : gens) {
    auto h = substitute_linear(g, n - 1, replacement);
    if (!h.is_zero()) out.push_back(std::move(h));
  }
  return out;
}

// dim of the quotient by (restricted gens)^k, degrees 0..top.
inline std::vector<std::uint64_t> restricted_values(const std::vector<GradedPoly<PrimeFieldElement>>& gens,
                                                    std::size_t nvars, int k, std::uint64_t prime, int top,
                                                    const ResourceGuard& guard) {
  std::vector<std::uint64_t> vals;
  if (gens.empty()) {
    for (int i = 0; i <= top; ++i) vals.push_back(ring_dimension(nvars, i));
    return vals;
  }
  RankHilbertEngine engine(gens, k, prime, guard);
  for (int i = 0; i <= top; ++i) vals.push_back(engine.value(i));
  return vals;
}

}  // namespace detail

/// Hilbert function and quotient bases of a monomial spec, degree 0 up to
/// (and including) the first degree >= dk where the quotient vanishes.
inline std::vector<QuotientBasis> monomial_quotient_bases(const IdealSpec& spec, const ResourceGuard& guard = {}) {
  MonomialIdealPower ideal(spec);
  std::vector<QuotientBasis> out;
  const int cap = degree_cap(spec);
  for (int i = 0; i <= cap; ++i) {
    check_basis_guard(ring_dimension(static_cast<std::size_t>(spec.n), i), guard, "WLP quotient basis");
    out.emplace_back(ideal.standard_monomials(i));
    if (spec.k > 0 && i >= spec.d * spec.k && out.back().size() == 0) return out;
  }
  throw std::runtime_error("monomial quotient does not vanish by the degree cap");
}

/// Rank of x L : A_i -> A_{i+1}. Monomial specs use L = x_1 + ... + x_n
/// unless L is given; other specs need L. Returns (dim_i, dim_{i+1}, rank).
inline std::tuple<std::uint64_t, std::uint64_t, std::uint64_t> mult_map_rank(
    const IdealSpec& spec, int i, std::uint64_t prime, std::optional<std::vector<std::uint64_t>> L = std::nullopt,
    const ResourceGuard& guard = {}) {
  spec.validate();
  if (i < 0) throw std::invalid_argument("negative degree");
  const auto n = static_cast<std::size_t>(spec.n);
  if (L && L->size() != n) throw std::invalid_argument("L has the wrong number of coefficients");
  if (is_monomial_spec(spec)) {
    const std::vector<std::uint64_t> lin = L ? *L : std::vector<std::uint64_t>(n, 1);
    MonomialIdealPower ideal(spec);
    check_basis_guard(ring_dimension(n, i + 1), guard, "mult_map_rank");
    const QuotientBasis from(ideal.standard_monomials(i)), to(ideal.standard_monomials(i + 1));
    return {from.size(), to.size(), detail::monomial_map_rank(from, to, lin, prime)};
  }
  if (!L) throw std::invalid_argument("non-monomial spec needs an explicit linear form");
  IdealSpec inst = spec;
  inst.prime = prime;
  RankHilbertEngine engine(make_generators(inst), inst.k, prime, guard);
  const std::uint64_t dim_i = engine.value(i);
  const std::uint64_t dim_next = engine.value(i + 1);
  const DegreeBasis& target = engine.basis(i + 1);
  ModularEchelon e(target.size(), prime);
  std::size_t base = 0;
  if (inst.k > 0 && i + 1 >= inst.d * inst.k) {
    for (const auto& r : engine.ideal_piece(i + 1).rows()) e.insert(r);
    base = e.rank();
  }
  const auto lin = GradedPoly<PrimeFieldElement>::linear_form(detail::as_field(*L, prime));
  const DegreeBasis source(n, i);
  for (const auto& m : source.monomials()) {
    e.insert(to_row(lin.times_monomial(m), target));
    if (e.full()) break;
  }
  return {dim_i, dim_next, e.rank() - base};
}

namespace detail {

inline std::vector<std::uint64_t> default_linear_form(const IdealSpec& spec, std::uint64_t seed, std::uint64_t prime) {
  const auto n = static_cast<std::size_t>(spec.n);
  if (is_monomial_spec(spec)) return std::vector<std::uint64_t>(n, 1);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), 0x4c4cu};
  std::mt19937_64 rng(seq);
  std::vector<std::uint64_t> L(n);
  for (auto& c : L) {
    do c = draw_uniform(rng, prime);
    while (c == 0);
  }
  return L;
}

struct RankTrace {
  std::vector<std::uint64_t> dims;  // degrees 0..top
  std::vector<std::uint64_t> ranks; // degrees 0..top-1
};

// Rank method for one prime.
inline RankTrace rank_trace(const IdealSpec& spec, const std::vector<std::uint64_t>& L, std::uint64_t prime,
                            const std::vector<QuotientBasis>* bases, const ResourceGuard& guard) {
  RankTrace t;
  if (bases) {
    for (const auto& b : *bases) t.dims.push_back(b.size());
    for (std::size_t i = 0; i + 1 < bases->size(); ++i)
      t.ranks.push_back(monomial_map_rank((*bases)[i], (*bases)[i + 1], L, prime));
    return t;
  }
  IdealSpec inst = spec;
  inst.prime = prime;
  const auto n = static_cast<std::size_t>(spec.n);
  RankHilbertEngine engine(make_generators(inst), inst.k, prime, guard);
  const auto lin = GradedPoly<PrimeFieldElement>::linear_form(as_field(L, prime));
  t.dims.push_back(engine.value(0));
  const int cap = degree_cap(spec);
  for (int i = 0; i < cap; ++i) {
    const std::uint64_t next = engine.value(i + 1);
    const DegreeBasis& target = engine.basis(i + 1);
    ModularEchelon e(target.size(), prime);
    std::size_t base = 0;
    if (inst.k > 0 && i + 1 >= inst.d * inst.k) {
      for (const auto& r : engine.ideal_piece(i + 1).rows()) e.insert(r);
      base = e.rank();
    }
    const DegreeBasis source(n, i);
    for (const auto& m : source.monomials()) {
      if (e.full()) break;
      e.insert(to_row(lin.times_monomial(m), target));
    }
    t.ranks.push_back(e.rank() - base);
    t.dims.push_back(next);
    if (spec.k > 0 && i + 1 >= spec.d * spec.k && next == 0) return t;
  }
  throw std::runtime_error("quotient does not vanish by the degree cap");
}

// Series method for one prime: rank_i = dim_{i+1} - dim (A/LA)_{i+1}.
inline RankTrace series_trace(const IdealSpec& spec, const std::vector<std::uint64_t>& L, std::uint64_t prime,
                              const std::vector<QuotientBasis>* bases, const ResourceGuard& guard) {
  RankTrace t;
  if (bases) {
    for (const auto& b : *bases) t.dims.push_back(b.size());
  } else {
    IdealSpec inst = spec;
    inst.prime = prime;
    RankHilbertEngine engine(make_generators(inst), inst.k, prime, guard);
    const int cap = degree_cap(spec);
    for (int i = 0; i <= cap; ++i) {
      t.dims.push_back(engine.value(i));
      if (spec.k > 0 && i >= spec.d * spec.k && t.dims.back() == 0) break;
    }
    if (t.dims.back() != 0) throw std::runtime_error("quotient does not vanish by the degree cap");
  }
  IdealSpec inst = spec;
  inst.prime = prime;
  const auto restricted = restrict_to_hyperplane(make_generators(inst), L, prime);
  const int top = static_cast<int>(t.dims.size()) - 1;
  const auto tilde = restricted_values(restricted, L.size() - 1, spec.k, prime, top, guard);
  for (int i = 0; i < top; ++i) {
    const auto next = t.dims[static_cast<std::size_t>(i + 1)];
    const auto cok = tilde[static_cast<std::size_t>(i + 1)];
    if (cok > next) throw std::logic_error("quotient by L larger than the algebra");
    t.ranks.push_back(next - cok);
  }
  return t;
}

inline WlpReport assemble(const IdealSpec& spec, WlpMethod method, const std::vector<std::uint64_t>& primes,
                          const std::vector<std::uint64_t>& L, const RankTrace& t) {
  WlpReport r;
  r.spec = spec;
  r.method = method;
  r.primes = primes;
  r.linear_form = L;
  for (std::size_t i = 0; i < t.ranks.size(); ++i) {
    WlpRow row{static_cast<int>(i), t.dims[i], t.dims[i + 1], t.ranks[i], true};
    row.maximal = row.rank == std::min(row.dim_i, row.dim_next);
    if (row.rank > std::min(row.dim_i, row.dim_next)) throw std::logic_error("rank exceeds matrix size");
    if (!row.maximal) {
      r.wlp = false;
      r.failure_degrees.push_back(row.i);
    }
    r.rows.push_back(row);
  }
  return r;
}

}  // namespace detail

/// Decides the WLP. Ranks over several primes are combined by maximum (the
/// rank over Q is at least each modular rank); remaining failures are
/// certified by exact integer elimination when the matrix is small enough.
inline WlpReport wlp_check(const IdealSpec& spec, const WlpOptions& opt = {}) {
  spec.validate();
  const bool monomial = is_monomial_spec(spec);
  std::vector<std::uint64_t> primes = opt.primes.empty() ? std::vector<std::uint64_t>{spec.prime} : opt.primes;
  const bool auto_retry = opt.primes.size() < 2;
  std::vector<std::uint64_t> L =
      opt.linear_form.empty() ? detail::default_linear_form(spec, opt.linear_seed, primes.front()) : opt.linear_form;
  if (L.size() != static_cast<std::size_t>(spec.n)) throw std::invalid_argument("L has the wrong number of coefficients");

  std::optional<std::vector<QuotientBasis>> bases;
  if (monomial) bases = monomial_quotient_bases(spec, opt.guard);
  const std::vector<QuotientBasis>* bp = bases ? &*bases : nullptr;

  auto run = [&](WlpMethod m, std::uint64_t p) {
    return m == WlpMethod::Series ? detail::series_trace(spec, L, p, bp, opt.guard)
                                  : detail::rank_trace(spec, L, p, bp, opt.guard);
  };
  auto combine = [&](WlpMethod m) {
    detail::RankTrace t = run(m, primes.front());
    for (std::size_t q = 1; q < primes.size(); ++q) {
      const auto u = run(m, primes[q]);
      if (u.dims != t.dims) throw std::runtime_error("Hilbert function differs between primes");
      for (std::size_t i = 0; i < t.ranks.size(); ++i) t.ranks[i] = std::max(t.ranks[i], u.ranks[i]);
    }
    return detail::assemble(spec, m, primes, L, t);
  };

  WlpReport report;
  if (opt.method == WlpMethod::Both) {
    auto a = combine(WlpMethod::Rank);
    auto b = combine(WlpMethod::Series);
    bool same = a.rows.size() == b.rows.size();
    for (std::size_t i = 0; same && i < a.rows.size(); ++i) same = a.rows[i].rank == b.rows[i].rank;
    if (!same || a.wlp != b.wlp)
      throw MethodDisagreement("rank and series methods disagree for " + spec_to_json(spec).dump(), a, b);
    report = std::move(a);
    report.method = WlpMethod::Both;
  } else {
    report = combine(opt.method);
  }

  // one failing prime is only evidence: retry with a second prime
  if (!report.wlp && auto_retry) {
    primes.push_back(detail::second_prime(primes.front()));
    const auto extra = run(opt.method == WlpMethod::Series ? WlpMethod::Series : WlpMethod::Rank, primes.back());
    report.primes = primes;
    report.failure_degrees.clear();
    report.wlp = true;
    for (auto& row : report.rows) {
      row.rank = std::max(row.rank, extra.ranks[static_cast<std::size_t>(row.i)]);
      row.maximal = row.rank == std::min(row.dim_i, row.dim_next);
      if (!row.maximal) {
        report.wlp = false;
        report.failure_degrees.push_back(row.i);
      }
    }
  }

  if (report.wlp) {
    report.certification = monomial ? "maximal rank over Z/p implies maximal rank over Q" : "modular evidence";
  } else if (monomial && opt.certify_exact) {
    bool all_exact = true;
    for (int i : report.failure_degrees) {
      const auto& row = report.rows[static_cast<std::size_t>(i)];
      if (row.dim_i > opt.exact_column_limit) {
        all_exact = false;
        continue;
      }
      const auto exact = detail::monomial_map_rank_exact((*bases)[static_cast<std::size_t>(i)],
                                                         (*bases)[static_cast<std::size_t>(i) + 1], L);
      if (exact != row.rank) {
        report.flags.push_back("exact rank exceeds modular rank at degree " + std::to_string(i));
        all_exact = false;
      }
    }
    report.certification = all_exact ? "failure certified by exact integer elimination"
                                     : "failure observed over " + std::to_string(report.primes.size()) + " primes";
    if (std::any_of(report.flags.begin(), report.flags.end(),
                    [](const std::string& f) { return f.rfind("exact rank exceeds", 0) == 0; }))
      report.flags.push_back("unlucky-prime");
  } else {
    report.certification = "failure observed over " + std::to_string(report.primes.size()) + " primes";
  }

  if (monomial && spec.family == Family::MonomialCI && spec.k > 0) {
    const int socle = (spec.k - 1) * spec.d + spec.n * (spec.d - 1);
    const auto& b = *bases;
    const bool ok = static_cast<int>(b.size()) == socle + 2 && b[static_cast<std::size_t>(socle)].size() > 0;
    if (!ok) report.flags.push_back("socle-degree-mismatch");
  }
  return report;
}

// ---------------------------------------------------------------------------
// Predicates

/// Hypothesis of the ideal-power threshold failure: k >= d^{n-2}, n >= 3,
/// (n,d) != (3,2). d = 1 is excluded since T_{n,1,k} has the WLP.
inline bool threshold_predicate(int n, int d, int k) {
  if (n < 3 || d < 2 || k < 1) return false;
  if (n == 3 && d == 2) return false;
  return BigInt(k) >= ipow(d, n - 2);
}

/// Predicted WLP for T_{3,d,k}.
inline bool conjecture_33_predicate(int d, int k) {
  if (d < 1 || k < 1) throw std::invalid_argument("need d, k >= 1");
  if (d <= 2 || k <= 2) return true;
  if (d <= k) return false;
  auto hits = [d](auto&& value) {
    for (int l = 1;; ++l) {
      const auto [lo, hi] = value(l);
      if (lo > d) return false;
      if (d >= lo && d <= hi) return true;
    }
  };
  if (k % 2 == 1) {
    const int j = (k - 1) / 2;
    if (k == 3 || k == 7) return !hits([&](int l) { return std::pair{(j + 2) * (2 * l + 1), (j + 2) * (2 * l + 1)}; });
    return !hits([&](int l) { return std::pair{(j + 2) * (2 * l + 1) - 1, (j + 2) * (2 * l + 1) + 1}; });
  }
  const int j = k / 2;
  return !hits([&](int l) { return std::pair{(j + 1) * (2 * l + 1) + l, (j + 1) * (2 * l + 1) + l + 1}; });
}

/// Parametrization d = (2l+1)(k+3)/2 + eps of the proven failure cases for
/// T_{3,d,k}; eps is stored doubled.
struct NecessityCase {
  int which = 0;  // 1, 2 or 3
  int j = 0;
  int ell = 0;
  int eps2 = 0;

  friend bool operator==(const NecessityCase&, const NecessityCase&) = default;
};

inline std::optional<NecessityCase> necessity_case(int d, int k) {
  if (d < 1 || k < 3) return std::nullopt;
  if (k % 2 == 1) {
    const int j = (k - 1) / 2;
    for (int l = 1; (j + 2) * (2 * l + 1) - 1 <= d; ++l) {
      const int base = (j + 2) * (2 * l + 1);
      if (d == base) return NecessityCase{1, j, l, 0};
      if (k != 3 && k != 7 && (d == base - 1 || d == base + 1)) return NecessityCase{2, j, l, 2 * (d - base)};
    }
    return std::nullopt;
  }
  const int j = k / 2;
  for (int l = 1; (j + 1) * (2 * l + 1) + l <= d; ++l) {
    const int base = (j + 1) * (2 * l + 1) + l;
    if (d == base) return NecessityCase{3, j, l, -1};
    if (d == base + 1) return NecessityCase{3, j, l, 1};
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Grid scan against the published table

/// (d,k) pairs with d,k >= 2 listed as having the WLP, per n.
inline const std::map<int, std::set<std::pair<int, int>>>& wlp_table() {
  static const std::map<int, std::set<std::pair<int, int>>> table{
      {4, {{2, 2}, {2, 3}, {3, 2}, {4, 2}}},
      {5, {{2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 7}, {3, 2}, {4, 2}, {4, 3}, {6, 2}}},
      {6, {{2, 2}, {2, 3}, {3, 2}}},
      {7, {{2, 2}, {2, 3}, {3, 2}}},
      {8, {{2, 2}, {3, 2}}},
      {9, {{2, 2}, {2, 3}, {3, 2}}},
      {10, {{2, 2}, {3, 2}}},
      {11, {{2, 2}, {2, 3}}},
      {12, {{2, 2}}},
      {14, {{2, 2}}},
      {16, {{2, 2}}},
  };
  return table;
}

enum class Prediction { Wlp, Fails, Unknown };

inline std::string prediction_name(Prediction p) {
  switch (p) {
    case Prediction::Wlp: return "WLP";
    case Prediction::Fails: return "fails";
    case Prediction::Unknown: return "unknown";
  }
  return "?";
}

struct PredictionSource {
  Prediction prediction = Prediction::Unknown;
  std::string source;
};

/// What the published results say about T_{n,d,k}. The table is taken as
/// complete for 4 <= n <= 10; for larger n only listed pairs, the odd-n
/// quadric square, and the threshold failure are used.
inline PredictionSource predicted_wlp(int n, int d, int k) {
  if (n <= 2 || d == 1 || k == 1) return {Prediction::Wlp, "trivial"};
  if (n == 3) return {conjecture_33_predicate(d, k) ? Prediction::Wlp : Prediction::Fails, "n3-conjecture"};
  if (threshold_predicate(n, d, k)) return {Prediction::Fails, "threshold"};
  const auto& table = wlp_table();
  auto it = table.find(n);
  if (it != table.end() && it->second.count({d, k})) return {Prediction::Wlp, "table"};
  if (n % 2 == 1 && d == 2 && k == 2) return {Prediction::Wlp, "odd-n-quadric-square"};
  if (n <= 10) return {Prediction::Fails, "table-complete-belief"};
  return {Prediction::Unknown, "none"};
}

struct GridCell {
  int n = 0, d = 0, k = 0;
  std::string verdict;  // WLP, fails, skipped, error
  PredictionSource predicted;
  std::string detail;
};

inline std::vector<GridCell> scan_grid(int n, std::pair<int, int> d_range, std::pair<int, int> k_range,
                                       std::uint64_t prime = kDefaultPrime, const ResourceGuard& guard = {},
                                       unsigned workers = 1, WlpMethod method = WlpMethod::Rank) {
  if (d_range.first > d_range.second || k_range.first > k_range.second) throw std::invalid_argument("empty range");
  std::vector<GridCell> cells;
  for (int d = d_range.first; d <= d_range.second; ++d)
    for (int k = k_range.first; k <= k_range.second; ++k) cells.push_back(GridCell{n, d, k, "", predicted_wlp(n, d, k), ""});
  parallel_for(cells.size(), workers, [&](std::size_t idx) {
    auto& c = cells[idx];
    IdealSpec spec = monomial_ci_spec(c.n, c.d, c.k);
    spec.prime = prime;
    const int top = degree_cap(spec);
    if (ring_dimension(static_cast<std::size_t>(n), top) > guard.max_basis) {
      c.verdict = "skipped";
      c.detail = "basis guard";
      return;
    }
    try {
      WlpOptions o;
      o.guard = guard;
      o.method = method;
      const auto rep = wlp_check(spec, o);
      c.verdict = rep.verdict();
      c.detail = rep.certification;
    } catch (const GuardExceeded& e) {
      c.verdict = "skipped";
      c.detail = e.what();
    }
  });
  return cells;
}

inline std::string grid_csv(const std::vector<GridCell>& cells) {
  std::string out = "n,d,k,verdict,predicted,source\n";
  for (const auto& c : cells)
    out += std::to_string(c.n) + "," + std::to_string(c.d) + "," + std::to_string(c.k) + "," + c.verdict + "," +
           prediction_name(c.predicted.prediction) + "," + c.predicted.source + "\n";
  return out;
}

inline json wlp_report_to_json(const WlpReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows)
    rows.push_back(json{{"i", row.i}, {"dim_i", row.dim_i}, {"dim_j", row.dim_next}, {"rank", row.rank},
                        {"maximal", row.maximal}});
  return json{{"schema", 1},
              {"spec", spec_to_json(r.spec)},
              {"method", wlp_method_name(r.method)},
              {"primes", r.primes},
              {"linear_form", r.linear_form},
              {"verdict", r.verdict()},
              {"failure_degrees", r.failure_degrees},
              {"rows", rows},
              {"certification", r.certification},
              {"flags", r.flags}};
}

}  // namespace idealpower
