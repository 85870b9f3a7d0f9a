#pragma once

/// @file verify.hpp
/// @brief Named checks of the published statements at three scales.

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "equivariant.hpp"
#include "hilbert.hpp"
#include "relations.hpp"
#include "series.hpp"
#include "wlp.hpp"

namespace idealpower {

enum class Scale { Small, Medium, Full };

inline Scale parse_scale(const std::string& s) {
  if (s == "small") return Scale::Small;
  if (s == "medium") return Scale::Medium;
  if (s == "full") return Scale::Full;
  throw std::invalid_argument("unknown scale '" + s + "'");
}

inline std::string scale_name(Scale s) {
  switch (s) {
    case Scale::Small: return "small";
    case Scale::Medium: return "medium";
    case Scale::Full: return "full";
  }
  return "?";
}

struct CheckResult {
  std::string instance;
  std::string expected;
  std::string got;
  std::string status;  // pass, fail, skipped
};

struct ClaimResult {
  std::string id;
  std::string kind;  // theorem, lemma, conjecture, table
  std::string status;
  std::vector<CheckResult> checks;
};

struct VerifyContext {
  Scale scale = Scale::Small;
  ResourceGuard guard;
  std::vector<std::uint64_t> seeds{1, 2, 3};
};

namespace detail {

inline std::string join(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

inline std::string join(const TruncatedSeries& t) {
  std::ostringstream os;
  os << t;
  return os.str();
}

class Recorder {
 public:
  explicit Recorder(ClaimResult& r) : r_(r) {}

  template <class Fn>
  void check(const std::string& instance, Fn&& fn) {
    CheckResult c;
    c.instance = instance;
    try {
      auto [ok, expected, got] = fn();
      c.expected = expected;
      c.got = got;
      c.status = ok ? "pass" : "fail";
    } catch (const GuardExceeded& e) {
      c.status = "skipped";
      c.got = e.what();
    } catch (const std::exception& e) {
      c.status = "fail";
      c.got = std::string("error: ") + e.what();
    }
    r_.checks.push_back(std::move(c));
  }

 private:
  ClaimResult& r_;
};

using Outcome = std::tuple<bool, std::string, std::string>;

inline Outcome compare_series(const TruncatedSeries& expected, const HilbertReport& rep) {
  const auto got = report_series(rep);
  return {got == expected, join(expected), join(got)};
}

inline Outcome compare_count(std::uint64_t expected, std::uint64_t got) {
  return {expected == got, std::to_string(expected), std::to_string(got)};
}

inline HilbertReport seeded_report(const IdealSpec& spec, const VerifyContext& ctx) {
  HilbertOptions o;
  o.guard = ctx.guard;
  if (spec.family == Family::GeneralRandom) o.seeds = ctx.seeds;
  return hilbert_report(spec, o);
}

inline std::string cell(int a, int b, int c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

inline std::string wlp_instance(const IdealSpec& s) { return "T" + cell(s.n, s.d, s.k); }

}  // namespace detail

struct ClaimInfo {
  std::string id;
  std::string kind;
  std::function<void(detail::Recorder&, const VerifyContext&)> run;
};

inline const std::vector<ClaimInfo>& claim_table() {
  using detail::Outcome;
  using detail::Recorder;
  static const std::vector<ClaimInfo> table{
      {"lm-unique", "lemma",
       [](Recorder& rec, const VerifyContext& ctx) {
         std::vector<std::pair<int, int>> cases{{2, 3}, {2, 4}, {3, 2}};
         if (ctx.scale != Scale::Small) cases.insert(cases.end(), {{2, 5}, {2, 6}, {3, 3}});
         for (auto [n, d] : cases)
           for (std::uint64_t p : {kDefaultPrime, kWitnessPrime})
             rec.check("n=" + std::to_string(n) + " d=" + std::to_string(d) + " p=" + std::to_string(p), [&]() -> Outcome {
               const auto c = unique_relation_certificate(n, d, p, Family::GeneralRandom, 1, ctx.guard);
               return {c.corank == 1, "corank 1", "corank " + std::to_string(c.corank)};
             });
         rec.check("n=2 d=2 excluded pair", [&]() -> Outcome {
           const auto c = unique_relation_certificate(2, 2, kDefaultPrime, Family::GeneralRandom, 1, ctx.guard);
           return {c.forced && c.corank >= 1, "forced relation, corank >= 1",
                   std::to_string(c.products) + " products into " + std::to_string(c.target_dim) + ", corank " +
                       std::to_string(c.corank)};
         });
       }},
      {"lm-zerodk1", "lemma",
       [](Recorder& rec, const VerifyContext& ctx) {
         const int kmax = ctx.scale == Scale::Small ? 4 : 6;
         for (int k = 1; k <= kmax; ++k)
           rec.check("(x^2,y^2,z^2,xy+xz+yz)^" + std::to_string(k), [&]() -> Outcome {
             const auto a_rep = detail::seeded_report(quadric_relation_spec(k), ctx);
             const int a = std::max(a_rep.top, 2 * (3 - 1));
             const auto b_rep = detail::seeded_report(quadric_relation_spec(k + 1), ctx);
             const auto v = b_rep.at(a + 2);
             return {v == 0, "0 in degree " + std::to_string(a + 2), std::to_string(v)};
           });
       }},
      {"thm-main", "theorem",
       [](Recorder& rec, const VerifyContext& ctx) {
         const int dmax = ctx.scale == Scale::Small ? 4 : ctx.scale == Scale::Medium ? 5 : 6;
         for (int d = 3; d <= dmax; ++d)
           for (int k = std::max(d - 2, 1); k <= d + 1; ++k) {
             rec.check("R" + detail::cell(2, d, k) + " series", [&]() -> Outcome {
               return detail::compare_series(series_theorem_25(d, k), detail::seeded_report(general_spec(2, d, k), ctx));
             });
             rec.check("R" + detail::cell(2, d, k) + " generators", [&]() -> Outcome {
               return detail::compare_count(static_cast<std::uint64_t>((2 * d * k - d * d + 3 * d) / 2),
                                            minimal_generator_count(general_spec(2, d, k)));
             });
           }
       }},
      {"thm-main2", "theorem",
       [](Recorder& rec, const VerifyContext& ctx) {
         const int kmax = ctx.scale == Scale::Small ? 3 : ctx.scale == Scale::Medium ? 6 : 8;
         for (int k = 1; k <= kmax; ++k)
           rec.check("R" + detail::cell(3, 2, k), [&]() -> Outcome {
             return detail::compare_series(series_theorem_26(k), detail::seeded_report(general_spec(3, 2, k), ctx));
           });
       }},
      {"lm-32k", "lemma",
       [](Recorder& rec, const VerifyContext& ctx) {
         const int kmax = ctx.scale == Scale::Small ? 4 : ctx.scale == Scale::Medium ? 6 : 8;
         for (int k = 1; k <= kmax; ++k)
           rec.check("(x^2,y^2,z^2,xy+xz+yz)^" + std::to_string(k), [&]() -> Outcome {
             return detail::compare_series(series_theorem_26(k), detail::seeded_report(quadric_relation_spec(k), ctx));
           });
       }},
      {"thm-33k", "theorem",
       [](Recorder& rec, const VerifyContext& ctx) {
         std::vector<int> ks{2, 3, 9};
         if (ctx.scale == Scale::Medium) ks = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
         if (ctx.scale == Scale::Full)
           for (int k = 1; k <= 16; ++k) ks.push_back(k);
         std::sort(ks.begin(), ks.end());
         ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
         for (int k : ks)
           rec.check("witness ideal over Z/101, k=" + std::to_string(k), [&]() -> Outcome {
             return detail::compare_series(series_theorem_28(k), detail::seeded_report(cubic_witness_spec(k), ctx));
           });
       }},
      {"lm-gedk", "lemma",
       [](Recorder& rec, const VerifyContext& ctx) {
         const int dmax = ctx.scale == Scale::Small ? 4 : 6;
         for (int d = 2; d <= dmax; ++d)
           for (int k = std::max(d - 2, 1); k <= d + 2; ++k)
             rec.check("(x^d,y^d,x^{d-1}y)^k " + detail::cell(2, d, k), [&]() -> Outcome {
               return detail::compare_count(binomial_u64(d - 1, 2), hf_monomial(leading_binomial_spec(d, k), d * k, ctx.guard));
             });
       }},
      {"lm-gedk1", "lemma",
       [](Recorder& rec, const VerifyContext& ctx) {
         const int dmax = ctx.scale == Scale::Small ? 4 : 6;
         const int kmax = ctx.scale == Scale::Small ? 5 : 8;
         for (int d = 2; d <= dmax; ++d)
           for (int k = std::max(d - 3, 1); k <= kmax; ++k)
             rec.check("(x^d,y^d,x^{d-1}y+xy^{d-1})^k " + detail::cell(2, d, k), [&]() -> Outcome {
               return detail::compare_count(0, hf_rank(symmetric_binomial_spec(d, k), d * k + 1, kDefaultPrime, ctx.guard));
             });
       }},
      {"lm-binineq", "lemma",
       [](Recorder& rec, const VerifyContext&) {
         for (int d = 2; d <= 8; ++d)
           for (int n = 2; n <= 8; ++n) {
             const bool expected = !((d == 2 && n == 2) || (d == 3 && n == 2));
             rec.check("(d,n)=(" + std::to_string(d) + "," + std::to_string(n) + ")", [&]() -> Outcome {
               const bool got = binomial_inequality(d, n);
               return {got == expected, expected ? "true" : "false", got ? "true" : "false"};
             });
           }
         rec.check("C(10,2) > C(7,3)", [&]() -> Outcome {
           return {binomial(10, 2) == 45 && binomial(7, 3) == 35, "45 > 35", binomial(10, 2).str() + " > " + binomial(7, 3).str()};
         });
       }},
      {"conj-dk1", "conjecture",
       [](Recorder& rec, const VerifyContext& ctx) {
         std::vector<std::array<int, 3>> cases{{2, 3, 3}, {2, 4, 4}, {3, 2, 4}, {3, 2, 5}, {3, 3, 9}};
         if (ctx.scale != Scale::Small) cases.insert(cases.end(), {{2, 5, 6}, {3, 2, 6}, {4, 2, 8}, {3, 3, 10}});
         for (auto [n, d, k] : cases)
           rec.check("R" + detail::cell(n, d, k), [&]() -> Outcome {
             return detail::compare_series(series_conjecture_211(n, d, k), detail::seeded_report(general_spec(n, d, k), ctx));
           });
         const int dmax = ctx.scale == Scale::Small ? 4 : 6;
         for (int d = 2; d <= dmax; ++d)
           for (int k = std::max(d - 3, 1); k <= d + 1; ++k)
             rec.check("(x^d,y^d,(x+y)^d)^k zero in degree dk+1 " + detail::cell(2, d, k), [&]() -> Outcome {
               return detail::compare_count(0, hf_rank(powers_of_linear_spec(2, d, k), d * k + 1, kDefaultPrime, ctx.guard));
             });
       }},
      {"conj-gen", "conjecture",
       [](Recorder& rec, const VerifyContext& ctx) {
         std::vector<std::array<int, 3>> cases{{3, 2, 1}, {2, 3, 1}, {3, 3, 2}};
         if (ctx.scale != Scale::Small) cases.push_back({3, 3, 3});
         rec.check("S(3,2,1)", [&]() -> Outcome { return {S_ndk(3, 2, 1) == 3, "3", S_ndk(3, 2, 1).str()}; });
         for (auto [n, d, k] : cases)
           rec.check("R" + detail::cell(n, d, k) + " vs C(k+n,n) general forms of degree dk", [&]() -> Outcome {
             if (S_ndk(n, d, k) < 0 || BigInt(k) >= ipow(d, n - 1)) return {false, "S >= 0 and k < d^(n-1)", "hypothesis fails"};
             const auto r = detail::seeded_report(general_spec(n, d, k), ctx);
             const auto g = detail::seeded_report(general_spec(n, d * k, 1, 1, kDefaultPrime, static_cast<int>(binomial_u64(k + n, n))), ctx);
             const auto a = report_series(r), b = report_series(g);
             return {a == b, detail::join(b), detail::join(a)};
           });
       }},
      {"thm-conjugate", "theorem",
       [](Recorder& rec, const VerifyContext& ctx) {
         std::vector<std::pair<int, int>> cases{{2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 2}, {4, 2}};
         if (ctx.scale != Scale::Small) cases.insert(cases.end(), {{3, 3}, {5, 2}, {4, 3}});
         for (auto [N, d] : cases)
           rec.check("F(" + std::to_string(N) + "," + std::to_string(d) + ")", [&]() -> Outcome {
             const auto cf = build_F(static_cast<std::size_t>(N), d, ctx.guard);
             const bool integral = is_integral(cf);
             const auto F = integer_form(cf);
             const bool mem = verify_membership(F, d);
             const bool sym = N < 3 || verify_symmetry(F);
             const auto ke = kernel_element(F, d);
             const bool ok = integral && mem && sym && ke.product_in_ideal && ke.nonzero_in_T &&
                             F.degree() == static_cast<int>(ipow(d, N - 1));
             std::string got = std::string(integral ? "integral" : "non-integral") + (mem ? " member" : " non-member") +
                               (sym ? " symmetric" : " asymmetric") + (ke.product_in_ideal && ke.nonzero_in_T ? " kernel" : " no-kernel");
             return {ok, "integral member symmetric kernel", got};
           });
       }},
      {"thm-notwlp", "theorem",
       [](Recorder& rec, const VerifyContext& ctx) {
         std::vector<std::array<int, 3>> cases{{4, 2, 4}, {4, 2, 5}, {3, 3, 3}, {3, 4, 4}};
         if (ctx.scale != Scale::Small) cases.insert(cases.end(), {{5, 2, 8}, {3, 5, 5}});
         if (ctx.scale == Scale::Full) cases.push_back({4, 3, 9});
         for (auto [n, d, k] : cases) {
           const auto spec = monomial_ci_spec(n, d, k);
           rec.check(detail::wlp_instance(spec), [&]() -> Outcome {
             WlpOptions o;
             o.guard = ctx.guard;
             const auto r = wlp_check(spec, o);
             const bool at = std::find(r.failure_degrees.begin(), r.failure_degrees.end(), d * k - 1) != r.failure_degrees.end();
             return {!r.wlp && at && r.primes.size() >= 2, "fails at degree " + std::to_string(d * k - 1) + " over 2 primes",
                     r.verdict() + " " + r.certification};
           });
           if (n * d <= 12 && d >= 2)
             rec.check(detail::wlp_instance(spec) + " kernel witness", [&]() -> Outcome {
               const auto w = shifted_kernel_witness(n, d, k, std::nullopt, ctx.guard);
               return {w.product_in_ideal && w.nonzero_in_T && w.G.degree() == d * k - 1, "nonzero, killed by L",
                       std::string(w.nonzero_in_T ? "nonzero" : "zero") + (w.product_in_ideal ? ", killed" : ", not killed")};
             });
         }
       }},
      {"thm-wlpd2", "theorem",
       [](Recorder& rec, const VerifyContext& ctx) {
         const int kmax = ctx.scale == Scale::Small ? 6 : ctx.scale == Scale::Medium ? 10 : 14;
         for (int k = 1; k <= kmax; ++k)
           rec.check("T" + detail::cell(3, 2, k), [&]() -> Outcome {
             WlpOptions o;
             o.guard = ctx.guard;
             o.method = WlpMethod::Both;
             const auto r = wlp_check(monomial_ci_spec(3, 2, k), o);
             return {r.wlp, "WLP", r.verdict()};
           });
       }},
      {"thm-necessity", "theorem",
       [](Recorder& rec, const VerifyContext& ctx) {
         const int dmax = ctx.scale == Scale::Small ? 11 : ctx.scale == Scale::Medium ? 14 : 18;
         const int kmax = ctx.scale == Scale::Small ? 4 : 6;
         for (int d = 3; d <= dmax; ++d)
           for (int k = 3; k <= kmax; ++k) {
             if (!necessity_case(d, k)) continue;
             rec.check("T" + detail::cell(3, d, k), [&]() -> Outcome {
               const auto s = schur_obstruction(d, k);
               WlpOptions o;
               o.guard = ctx.guard;
               const auto r = wlp_check(monomial_ci_spec(3, d, k), o);
               const bool at = std::find(r.failure_degrees.begin(), r.failure_degrees.end(), s.from_degree) !=
                               r.failure_degrees.end();
               return {s.obstruction && !r.wlp && at,
                       "obstruction and failure at degree " + std::to_string(s.from_degree),
                       std::string(s.obstruction ? "obstruction(" + s.component + ")" : "no obstruction") + ", " + r.verdict()};
             });
           }
       }},
      {"conj-wlp3", "conjecture",
       [](Recorder& rec, const VerifyContext& ctx) {
         const int m = ctx.scale == Scale::Small ? 6 : ctx.scale == Scale::Medium ? 8 : 10;
         for (int d = 1; d <= m; ++d)
           for (int k = 1; k <= m; ++k)
             rec.check("T" + detail::cell(3, d, k), [&]() -> Outcome {
               WlpOptions o;
               o.guard = ctx.guard;
               const auto r = wlp_check(monomial_ci_spec(3, d, k), o);
               const bool pred = conjecture_33_predicate(d, k);
               return {pred == r.wlp, pred ? "WLP" : "fails", r.verdict()};
             });
       }},
      {"table-wlp", "table",
       [](Recorder& rec, const VerifyContext& ctx) {
         struct Row {
           int n, dmax, kmax;
         };
         std::vector<Row> rows{{4, 4, 4}, {6, 3, 3}};
         if (ctx.scale != Scale::Small) rows.insert(rows.end(), {{5, 3, 4}, {7, 3, 3}});
         if (ctx.scale == Scale::Full) rows.insert(rows.end(), {{5, 6, 8}, {8, 3, 3}});
         for (const auto& row : rows) {
           const auto cells = scan_grid(row.n, {2, row.dmax}, {2, row.kmax}, kDefaultPrime, ctx.guard);
           for (const auto& c : cells) {
             rec.check("T" + detail::cell(c.n, c.d, c.k), [&]() -> Outcome {
               if (c.verdict == "skipped") throw GuardExceeded(c.detail);
               const std::string want = prediction_name(c.predicted.prediction);
               return {want == c.verdict, want + " (" + c.predicted.source + ")", c.verdict};
             });
           }
         }
       }},
      {"thm-oddwlp", "theorem",
       [](Recorder& rec, const VerifyContext& ctx) {
         std::vector<int> ns{3, 5, 7};
         if (ctx.scale != Scale::Small) ns.push_back(9);
         if (ctx.scale == Scale::Full) ns.push_back(11);
         for (int n : ns)
           rec.check("T" + detail::cell(n, 2, 2), [&]() -> Outcome {
             WlpOptions o;
             o.guard = ctx.guard;
             const auto r = wlp_check(monomial_ci_spec(n, 2, 2), o);
             return {r.wlp, "WLP", r.verdict()};
           });
       }},
  };
  return table;
}

inline std::vector<std::string> claim_ids() {
  std::vector<std::string> ids;
  for (const auto& c : claim_table()) ids.push_back(c.id);
  return ids;
}

inline ClaimResult run_claim(const std::string& id, const VerifyContext& ctx) {
  const auto& table = claim_table();
  auto it = std::find_if(table.begin(), table.end(), [&](const ClaimInfo& c) { return c.id == id; });
  if (it == table.end()) throw std::invalid_argument("unknown claim '" + id + "'");
  ClaimResult r;
  r.id = id;
  r.kind = it->kind;
  detail::Recorder rec(r);
  it->run(rec, ctx);
  const bool any_fail = std::any_of(r.checks.begin(), r.checks.end(), [](const CheckResult& c) { return c.status == "fail"; });
  const bool any_skip =
      std::any_of(r.checks.begin(), r.checks.end(), [](const CheckResult& c) { return c.status == "skipped"; });
  r.status = any_fail ? "fail" : any_skip ? "skipped" : "pass";
  return r;
}

inline json claim_result_json(const ClaimResult& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back(json{{"instance", c.instance}, {"expected", c.expected}, {"got", c.got}, {"status", c.status}});
  return json{{"claim", r.id}, {"kind", r.kind}, {"status", r.status}, {"checks", checks}};
}

}  // namespace idealpower
