#pragma once

/// @file hilbert.hpp
/// @brief Hilbert functions of S/I^k: rank based over Z/p for arbitrary
/// forms, by counting standard monomials for monomial ideals.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "exact.hpp"
#include "ideal.hpp"
#include "monomial.hpp"
#include "parallel.hpp"
#include "rank.hpp"
#include "series.hpp"

namespace idealpower {

/// Degree-by-degree rank engine for J = I^k over Z/p. The ideal piece J_i is
/// kept as a semi-echelon basis; J_{i+1} is spanned by x_j * J_i, which
/// keeps the row count at n * dim J_i instead of one row per
/// (generator, multiplier) pair.
class RankHilbertEngine {
 public:
  RankHilbertEngine(std::vector<GradedPoly<PrimeFieldElement>> gens, int k, std::uint64_t prime,
                    ResourceGuard guard = {})
      : gens_(std::move(gens)), k_(k), prime_(prime), guard_(guard) {
    if (gens_.empty()) throw std::invalid_argument("need generators");
    nvars_ = gens_.front().nvars();
    d_ = gens_.front().degree();
    for (const auto& g : gens_)
      if (g.nvars() != nvars_ || g.degree() != d_) throw std::invalid_argument("generators must share degree and ring");
  }

  std::size_t nvars() const { return nvars_; }
  int generator_degree() const { return k_ * d_; }

  /// Advances to `degree` (degrees must be requested in increasing order)
  /// and returns dim (S/J)_degree.
  std::uint64_t value(int degree) {
    advance_to(degree);
    if (degree < generator_degree() || k_ == 0) return ring_dimension(nvars_, degree);
    return current_->ncols() - current_->rank();
  }

  /// Semi-echelon basis of J_degree in DegreeBasis(n, degree).
  const ModularEchelon& ideal_piece(int degree) {
    advance_to(degree);
    if (!current_) throw std::logic_error("ideal is zero in this degree");
    return *current_;
  }

  const DegreeBasis& basis(int degree) {
    advance_to(degree);
    return *current_basis_;
  }

 private:
  void advance_to(int degree) {
    if (degree < current_degree_) throw std::logic_error("degrees must be requested in increasing order");
    while (current_degree_ < degree) step();
  }

  void step() {
    const int next = current_degree_ + 1;
    check_basis_guard(ring_dimension(nvars_, next), guard_, "rank Hilbert function");
    auto next_basis = std::make_unique<DegreeBasis>(nvars_, next);
    if (k_ == 0 || next < generator_degree()) {
      current_basis_ = std::move(next_basis);
      current_degree_ = next;
      return;
    }
    auto echelon = std::make_unique<ModularEchelon>(next_basis->size(), prime_);
    if (next == generator_degree()) {
      if (power_products_.empty()) {
        auto set = power_generators(gens_, k_);
        power_products_ = std::move(set.products);
      }
      for (const auto& p : power_products_) {
        echelon->insert(to_row(p, *next_basis));
        if (echelon->full()) break;
      }
      power_products_.clear();
    } else {
      // multiplication tables x_j : degree-1 basis -> degree basis
      std::vector<std::vector<std::uint32_t>> mul(nvars_);
      for (std::size_t j = 0; j < nvars_; ++j) {
        mul[j].resize(current_basis_->size());
        for (std::size_t c = 0; c < current_basis_->size(); ++c)
          mul[j][c] = static_cast<std::uint32_t>(next_basis->index_of(current_basis_->monomial_at(c).times_variable(j)));
      }
      ModularEchelon::SparseRow shifted;
      for (const auto& row : current_->rows()) {
        for (std::size_t j = 0; j < nvars_ && !echelon->full(); ++j) {
          shifted.clear();
          for (const auto& [c, v] : row) shifted.emplace_back(mul[j][c], v);
          echelon->insert(shifted);
        }
        if (echelon->full()) break;
      }
    }
    current_ = std::move(echelon);
    current_basis_ = std::move(next_basis);
    current_degree_ = next;
  }

  std::vector<GradedPoly<PrimeFieldElement>> gens_;
  std::vector<GradedPoly<PrimeFieldElement>> power_products_;
  int k_;
  std::uint64_t prime_;
  ResourceGuard guard_;
  std::size_t nvars_ = 0;
  int d_ = 0;
  int current_degree_ = -1;
  std::unique_ptr<DegreeBasis> current_basis_;
  std::unique_ptr<ModularEchelon> current_;
};

/// dim (S/I^k)_i over Z/prime, straight from the Macaulay matrix: one row per
/// power generator g and monomial m of degree i - dk, holding m*g.
inline std::uint64_t hf_rank(const IdealSpec& spec_in, int i, std::uint64_t prime, const ResourceGuard& guard = {}) {
  IdealSpec spec = spec_in;
  spec.prime = prime;
  spec.validate();
  if (i < 0) throw std::invalid_argument("negative degree");
  const auto n = static_cast<std::size_t>(spec.n);
  const std::uint64_t full = ring_dimension(n, i);
  const int gen_degree = spec.d * spec.k;
  if (spec.k == 0 || i < gen_degree) return full;
  check_basis_guard(full, guard, "hf_rank");
  const auto set = power_generators(make_generators(spec), spec.k);
  const DegreeBasis target(n, i);
  const DegreeBasis multipliers(n, i - gen_degree);
  if (static_cast<std::uint64_t>(set.products.size()) * multipliers.size() * set.products.front().size() >
      guard.max_entries)
    throw GuardExceeded("hf_rank: Macaulay matrix exceeds entry guard");
  ModularEchelon e(target.size(), prime);
  for (const auto& m : multipliers.monomials()) {
    for (const auto& g : set.products) {
      ModularEchelon::SparseRow row;
      for (const auto& [gm, c] : g.terms())
        row.emplace_back(static_cast<std::uint32_t>(target.index_of(gm * m)), static_cast<std::uint32_t>(c.residue()));
      e.insert(row);
      if (e.full()) return 0;
    }
  }
  return full - e.rank();
}

/// Monomial generators of the spec (MonomialCI or monomial Explicit).
inline std::vector<Monomial> spec_monomials(const IdealSpec& spec) {
  if (!is_monomial_spec(spec)) throw std::invalid_argument("spec is not monomial");
  return as_monomials(integer_generators(spec));
}

/// Membership in I^k for a monomial spec, via the fast path for monomial
/// complete intersections.
class MonomialIdealPower {
 public:
  explicit MonomialIdealPower(const IdealSpec& spec) : spec_(spec) {
    spec.validate();
    ci_ = spec.family == Family::MonomialCI;
    if (!ci_) gens_ = spec_monomials(spec);
  }

  bool contains(const Monomial& m) const {
    if (spec_.k == 0) return false;  // k = 0 is treated as the zero ideal
    return ci_ ? monomial_ci_membership(m, spec_.d, spec_.k) : monomial_power_membership(m, gens_, spec_.k);
  }

  /// Degree-i monomials outside I^k, in descending grevlex order.
  std::vector<Monomial> standard_monomials(int i) const {
    std::vector<Monomial> out;
    const DegreeBasis basis(static_cast<std::size_t>(spec_.n), i);
    for (const auto& m : basis.monomials())
      if (!contains(m)) out.push_back(m);
    return out;
  }

  const IdealSpec& spec() const { return spec_; }

 private:
  IdealSpec spec_;
  bool ci_ = false;
  std::vector<Monomial> gens_;
};

inline std::uint64_t hf_monomial(const IdealSpec& spec, int i, const ResourceGuard& guard = {}) {
  if (i < 0) throw std::invalid_argument("negative degree");
  check_basis_guard(ring_dimension(static_cast<std::size_t>(spec.n), i), guard, "hf_monomial");
  return MonomialIdealPower(spec).standard_monomials(i).size();
}

// ---------------------------------------------------------------------------

enum class Certainty { Exact, Certified, UpperBound };

inline std::string certainty_name(Certainty c) {
  switch (c) {
    case Certainty::Exact: return "exact";
    case Certainty::Certified: return "certified";
    case Certainty::UpperBound: return "instance upper bound";
  }
  return "?";
}

enum class HilbertMethod { Rank, Monomial, SeriesFormula };

inline std::string method_name(HilbertMethod m) {
  switch (m) {
    case HilbertMethod::Rank: return "rank";
    case HilbertMethod::Monomial: return "monomial";
    case HilbertMethod::SeriesFormula: return "series-formula";
  }
  return "?";
}

struct HilbertValue {
  int degree = 0;
  std::uint64_t value = 0;
  Certainty certainty = Certainty::Exact;
};

struct HilbertReport {
  IdealSpec spec;
  HilbertMethod method = HilbertMethod::Rank;
  std::vector<std::uint64_t> primes;
  std::vector<std::uint64_t> seeds;
  std::vector<HilbertValue> values;
  int top = -1;  // first degree >= dk with value 0; -1 if none before the cap
  std::vector<std::string> flags;

  std::uint64_t at(int degree) const {
    for (const auto& v : values)
      if (v.degree == degree) return v.value;
    if (top >= 0 && degree >= top) return 0;
    throw std::out_of_range("degree " + std::to_string(degree) + " not in report");
  }

  /// Values up to (not including) top, i.e. the nonzero part of the series.
  std::vector<std::uint64_t> series() const {
    std::vector<std::uint64_t> s;
    for (const auto& v : values)
      if (top < 0 || v.degree < top) s.push_back(v.value);
    return s;
  }

  bool has_flag(const std::string& f) const { return std::find(flags.begin(), flags.end(), f) != flags.end(); }
};

struct HilbertOptions {
  HilbertMethod method = HilbertMethod::Rank;
  std::vector<std::uint64_t> primes;   // empty: spec.prime
  std::vector<std::uint64_t> seeds;    // GeneralRandom only; empty: spec.seed
  std::optional<TruncatedSeries> lower_bound;  // empty: the proven closed form, if any
  /// Extra degrees after `top` that are recomputed and must be zero; -1
  /// picks 1 for rank and d for monomial.
  int persistence_span = -1;
  unsigned workers = 1;
  ResourceGuard guard;
};

/// Largest degree examined before declaring that the quotient does not vanish.
inline int degree_cap(const IdealSpec& spec) {
  const int base_cap = spec.d * (spec.k + 2) + spec.n;
  const int ci_top = (spec.k - 1) * spec.d + spec.n * (spec.d - 1) + 1;
  return std::max(base_cap, ci_top);
}

struct ClosedForm {
  TruncatedSeries series;
  std::string source;
};

/// Proven closed-form series that applies to a spec, if any.
inline std::optional<ClosedForm> closed_form_series(const IdealSpec& spec) {
  if (spec.k < 1) return std::nullopt;
  if (spec.family == Family::MonomialCI && spec.n == 3) return ClosedForm{series_guardo_vantuyl(spec.d, spec.k), "ci-power"};
  if (spec.family != Family::GeneralRandom || spec.r != spec.n + 1) return std::nullopt;
  if (spec.n == 2 && spec.d >= 3 && spec.k >= spec.d - 2) return ClosedForm{series_theorem_25(spec.d, spec.k), "two-variable"};
  if (spec.n == 3 && spec.d == 2) return ClosedForm{series_theorem_26(spec.k), "quadrics"};
  if (spec.n == 3 && spec.d == 3 && spec.k <= kCubicSeriesProvenLimit) return ClosedForm{series_theorem_28(spec.k), "cubics"};
  return std::nullopt;
}

namespace detail {

// Values for degrees 0..top+span (or to the cap) from one instance.
template <class ValueFn>
std::pair<std::vector<std::uint64_t>, int> scan_degrees(const IdealSpec& spec, int span, ValueFn&& value) {
  std::vector<std::uint64_t> vals;
  const int cap = degree_cap(spec);
  int top = -1;
  for (int i = 0; i <= cap; ++i) {
    vals.push_back(value(i));
    if (top < 0 && spec.k > 0 && i >= spec.d * spec.k && vals.back() == 0) {
      top = i;
      for (int j = i + 1; j <= i + span; ++j) vals.push_back(value(j));
      break;
    }
  }
  return {vals, top};
}

}  // namespace detail

/// Full Hilbert function of S/I^k up to vanishing. For GeneralRandom specs
/// the value is the coefficientwise minimum over all seeds (each instance is
/// an upper bound for the generic value). Primes that disagree are flagged.
inline HilbertReport hilbert_report(const IdealSpec& spec, const HilbertOptions& opt = {}) {
  spec.validate();
  HilbertReport rep;
  rep.spec = spec;
  rep.method = opt.method;
  const int span = opt.persistence_span >= 0 ? opt.persistence_span
                                             : (opt.method == HilbertMethod::Monomial ? spec.d : 1);

  std::vector<std::uint64_t> vals;
  int top = -1;
  if (opt.method == HilbertMethod::Monomial) {
    MonomialIdealPower ideal(spec);
    std::tie(vals, top) = detail::scan_degrees(spec, span, [&](int i) {
      check_basis_guard(ring_dimension(static_cast<std::size_t>(spec.n), i), opt.guard, "hf_monomial");
      return static_cast<std::uint64_t>(ideal.standard_monomials(i).size());
    });
  } else if (opt.method == HilbertMethod::Rank) {
    rep.primes = opt.primes.empty() ? std::vector<std::uint64_t>{spec.prime} : opt.primes;
    if (spec.family == Family::GeneralRandom) rep.seeds = opt.seeds.empty() ? std::vector<std::uint64_t>{spec.seed} : opt.seeds;
    const std::size_t nseeds = std::max<std::size_t>(rep.seeds.size(), 1);
    const std::size_t jobs = rep.primes.size() * nseeds;
    std::vector<std::pair<std::vector<std::uint64_t>, int>> runs(jobs);
    parallel_for(jobs, opt.workers, [&](std::size_t job) {
      IdealSpec inst = spec;
      inst.prime = rep.primes[job / nseeds];
      if (!rep.seeds.empty()) inst.seed = rep.seeds[job % nseeds];
      RankHilbertEngine engine(make_generators(inst), inst.k, inst.prime, opt.guard);
      runs[job] = detail::scan_degrees(inst, span, [&](int i) { return engine.value(i); });
    });
    // per prime: minimum over seeds; across primes: must agree
    auto min_over = [](std::vector<std::uint64_t> a, const std::vector<std::uint64_t>& b) {
      a.resize(std::max(a.size(), b.size()), 0);
      for (std::size_t i = 0; i < a.size(); ++i) {
        const std::uint64_t bi = i < b.size() ? b[i] : 0;
        a[i] = std::min(a[i], bi);
      }
      return a;
    };
    std::vector<std::vector<std::uint64_t>> per_prime;
    for (std::size_t p = 0; p < rep.primes.size(); ++p) {
      std::vector<std::uint64_t> best = runs[p * nseeds].first;
      for (std::size_t s = 1; s < nseeds; ++s) best = min_over(best, runs[p * nseeds + s].first);
      per_prime.push_back(best);
    }
    vals = per_prime.front();
    for (std::size_t p = 1; p < per_prime.size(); ++p) {
      auto a = per_prime[p], b = per_prime.front();
      a.resize(std::max(a.size(), b.size()), 0);
      b.resize(a.size(), 0);
      if (a != b) {
        rep.flags.push_back("prime-disagreement");
        break;
      }
    }
    for (std::size_t p = 1; p < per_prime.size(); ++p) vals = min_over(vals, per_prime[p]);
    top = -1;
    for (int i = spec.d * spec.k; spec.k > 0 && i < static_cast<int>(vals.size()); ++i)
      if (vals[static_cast<std::size_t>(i)] == 0) {
        top = i;
        break;
      }
    if (top >= 0) vals.resize(std::min(vals.size(), static_cast<std::size_t>(top + span + 1)), 0);
  } else {
    const auto cf = closed_form_series(spec);
    if (!cf) throw std::invalid_argument("no closed form is known for this spec");
    for (const auto& c : cf->series.coeffs) vals.push_back(static_cast<std::uint64_t>(c));
    top = static_cast<int>(vals.size());
    for (int j = 0; j <= span; ++j) vals.push_back(0);
    rep.flags.push_back("formula:" + cf->source);
  }

  if (top < 0 && spec.k > 0)
    throw std::runtime_error("quotient does not vanish by degree cap " + std::to_string(degree_cap(spec)));
  if (spec.k == 0) rep.flags.push_back("no-vanishing");
  std::optional<TruncatedSeries> bound = opt.lower_bound;
  if (!bound && spec.family == Family::GeneralRandom)
    if (auto cf = closed_form_series(spec)) bound = cf->series;
  rep.top = top;
  for (int i = 0; i < static_cast<int>(vals.size()); ++i) {
    const auto v = vals[static_cast<std::size_t>(i)];
    if (top >= 0 && i > top && v != 0) rep.flags.push_back("vanishing-not-persistent");
    HilbertValue hv{i, v, Certainty::UpperBound};
    if (opt.method == HilbertMethod::SeriesFormula || opt.method == HilbertMethod::Monomial || i < spec.d * spec.k ||
        spec.k == 0 || v == 0)
      hv.certainty = Certainty::Exact;
    else if (bound && BigInt(v) == bound->at(static_cast<std::size_t>(i)))
      hv.certainty = Certainty::Certified;
    rep.values.push_back(hv);
  }
  return rep;
}

/// Series of a report as a TruncatedSeries (nonzero prefix).
inline TruncatedSeries report_series(const HilbertReport& rep) {
  std::vector<BigInt> v;
  for (auto x : rep.series()) v.emplace_back(x);
  return truncate_values(v);
}


inline json hilbert_report_to_json(const HilbertReport& r) {
  json values = json::array();
  for (const auto& v : r.values) values.push_back(json::array({v.degree, v.value, certainty_name(v.certainty)}));
  return json{{"schema", 1},      {"spec", spec_to_json(r.spec)}, {"method", method_name(r.method)},
              {"primes", r.primes}, {"seeds", r.seeds},             {"values", values},
              {"top", r.top},       {"flags", r.flags}};
}

// ---------------------------------------------------------------------------

struct RelationCertificate {
  int n = 0, d = 0;
  std::uint64_t prime = 0;
  std::uint64_t products = 0;    // degree d^{n-1} monomials in n+1 forms
  std::uint64_t target_dim = 0;  // forms of degree d^n in n variables
  std::uint64_t rank = 0;
  std::uint64_t corank = 0;
  bool forced = false;  // products > target_dim, so some relation exists for dimension reasons
  bool strict_room = false;
};

/// Number of independent relations of degree d^{n-1} among n+1 forms of
/// degree d in n variables: corank of the evaluation map into degree d^n.
inline RelationCertificate unique_relation_certificate(int n, int d, std::uint64_t prime,
                                                       Family family = Family::GeneralRandom, std::uint64_t seed = 1,
                                                       const ResourceGuard& guard = {}) {
  if (n < 1 || d < 1) throw std::invalid_argument("need n, d >= 1");
  const BigInt kbig = ipow(d, n - 1);
  if (kbig > 10000) throw GuardExceeded("relation degree too large");
  const int k = static_cast<int>(kbig);
  RelationCertificate cert;
  cert.n = n;
  cert.d = d;
  cert.prime = prime;
  cert.products = binomial_u64(k + n, n);
  cert.target_dim = ring_dimension(static_cast<std::size_t>(n), d * k);
  check_basis_guard(cert.target_dim, guard, "relation certificate");
  check_basis_guard(cert.products, guard, "relation certificate");
  if (cert.products * cert.target_dim > guard.max_entries) throw GuardExceeded("relation certificate: matrix too large");
  IdealSpec spec = family == Family::GeneralRandom ? general_spec(n, d, k, seed, prime) : powers_of_linear_spec(n, d, k, prime);
  const auto set = power_generators(make_generators(spec), k);
  const DegreeBasis basis(static_cast<std::size_t>(n), d * k);
  ModularEchelon e(basis.size(), prime);
  for (const auto& p : set.products) e.insert(to_row(p, basis));
  cert.rank = e.rank();
  cert.corank = cert.products - cert.rank;
  cert.forced = cert.products > cert.target_dim;
  cert.strict_room = n >= 2 && d >= 2 && binomial_inequality(d, n);
  return cert;
}

}  // namespace idealpower
