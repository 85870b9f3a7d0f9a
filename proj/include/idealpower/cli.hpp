#pragma once

/// @file cli.hpp
/// @brief Command-line front end: hilbert, wlp, scan, isotypic, relation, verify.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cache.hpp"
#include "equivariant.hpp"
#include "hilbert.hpp"
#include "relations.hpp"
#include "serialize.hpp"
#include "verify.hpp"
#include "wlp.hpp"

namespace idealpower::cli {

enum ExitCode { kOk = 0, kVerifyFailed = 1, kInvalidConfig = 2, kGuardExceeded = 3 };

struct RunConfig {
  std::string subcommand;
  int n = 2, d = 2, k = 1;
  std::pair<int, int> d_range{2, 4}, k_range{2, 4};
  std::string family = "general";
  std::vector<std::uint64_t> primes;
  std::vector<std::uint64_t> seeds;
  std::string method;
  std::string format = "json";
  std::string out;
  std::string cache_dir;
  unsigned workers = 1;
  std::size_t guard_basis = 200000;
  std::size_t guard_entries = 50000000;
  std::vector<std::string> claims;
  std::string scale = "small";
  std::optional<int> from, to;
  bool certificate = false;
  bool table = false;

  ResourceGuard guard() const { return ResourceGuard{guard_basis, guard_entries}; }
};

namespace detail {

inline IdealSpec build_spec(const RunConfig& c) {
  const auto fam = parse_family(c.family);
  const std::uint64_t prime = c.primes.empty() ? kDefaultPrime : c.primes.front();
  IdealSpec s;
  switch (fam) {
    case Family::GeneralRandom: s = general_spec(c.n, c.d, c.k, c.seeds.empty() ? 1 : c.seeds.front(), prime); break;
    case Family::PowersOfLinear: s = powers_of_linear_spec(c.n, c.d, c.k, prime); break;
    case Family::MonomialCI: s = monomial_ci_spec(c.n, c.d, c.k); break;
    case Family::Explicit: throw std::invalid_argument("the explicit family is library-only");
  }
  s.validate();
  return s;
}

inline HilbertMethod parse_hilbert_method(const std::string& m) {
  if (m.empty() || m == "rank") return HilbertMethod::Rank;
  if (m == "monomial") return HilbertMethod::Monomial;
  if (m == "series") return HilbertMethod::SeriesFormula;
  throw std::invalid_argument("unknown Hilbert method '" + m + "'");
}

inline json hilbert_json(const RunConfig& c) {
  const auto spec = build_spec(c);
  HilbertOptions o;
  o.method = parse_hilbert_method(c.method);
  o.primes = c.primes;
  o.seeds = c.seeds;
  o.workers = c.workers;
  o.guard = c.guard();
  return hilbert_report_to_json(hilbert_report(spec, o));
}

inline json wlp_json(const RunConfig& c) {
  const auto spec = build_spec(c);
  WlpOptions o;
  o.method = c.method.empty() ? WlpMethod::Rank : parse_wlp_method(c.method);
  o.primes = c.primes;
  if (!c.seeds.empty()) o.linear_seed = c.seeds.front();
  o.guard = c.guard();
  return wlp_report_to_json(wlp_check(spec, o));
}

inline json scan_json(const RunConfig& c) {
  const auto cells = scan_grid(c.n, c.d_range, c.k_range, c.primes.empty() ? kDefaultPrime : c.primes.front(), c.guard(),
                               c.workers, c.method.empty() ? WlpMethod::Rank : parse_wlp_method(c.method));
  json rows = json::array();
  for (const auto& g : cells)
    rows.push_back(json{{"n", g.n},
                        {"d", g.d},
                        {"k", g.k},
                        {"verdict", g.verdict},
                        {"predicted", prediction_name(g.predicted.prediction)},
                        {"source", g.predicted.source}});
  return json{{"schema", 1}, {"n", c.n}, {"cells", rows}};
}

inline json isotypic_json(const RunConfig& c) {
  const int from = c.from.value_or(c.d * c.k);
  const int to = c.to.value_or(c.d * (c.k + 2));
  if (from < 0 || to < from) throw std::invalid_argument("empty degree range");
  return isotypic_report_json(c.d, c.k, from, to);
}

inline json relation_json(const RunConfig& c) {
  if (c.certificate) {
    const auto cert = unique_relation_certificate(c.n, c.d, c.primes.empty() ? kDefaultPrime : c.primes.front(),
                                                  parse_family(c.family), c.seeds.empty() ? 1 : c.seeds.front(),
                                                  c.guard());
    return json{{"schema", 1},
                {"n", cert.n},
                {"d", cert.d},
                {"prime", cert.prime},
                {"products", cert.products},
                {"target_dim", cert.target_dim},
                {"rank", cert.rank},
                {"corank", cert.corank},
                {"forced", cert.forced},
                {"strict_room", cert.strict_room}};
  }
  if (c.n < 2) throw std::invalid_argument("need at least 2 variables");
  const auto nv = static_cast<std::size_t>(c.n);
  const auto cf = build_F(nv, c.d, c.guard());
  json out{{"schema", 1}, {"vars", c.n}, {"d", c.d}, {"integral", is_integral(cf)}};
  if (!is_integral(cf)) return out;
  const auto F = integer_form(cf);
  const auto ke = kernel_element(F, c.d);
  out["degree"] = F.degree();
  out["member"] = verify_membership(F, c.d);
  out["symmetric"] = nv >= 3 ? json(verify_symmetry(F)) : json(nullptr);
  out["F"] = poly_to_json(F);
  out["kernel"] = json{{"G", poly_to_json(ke.G)},
                       {"power", ke.power},
                       {"product_in_ideal", ke.product_in_ideal},
                       {"nonzero_in_T", ke.nonzero_in_T}};
  if (c.table) out["table"] = table_comparison_json(compare_example_table(nv, c.d, c.guard()));
  return out;
}

// CSV / text renderers; JSON is the canonical form.

inline std::string hilbert_csv(const json& j) {
  std::string s = "degree,value,certainty\n";
  for (const auto& v : j.at("values"))
    s += std::to_string(v[0].get<int>()) + "," + std::to_string(v[1].get<std::uint64_t>()) + "," + v[2].get<std::string>() + "\n";
  return s;
}

inline std::string hilbert_text(const json& j) {
  std::string s = "HF:";
  for (const auto& v : j.at("values")) s += " " + std::to_string(v[1].get<std::uint64_t>());
  s += "\n";
  for (const auto& f : j.at("flags")) s += "flag: " + f.get<std::string>() + "\n";
  return s;
}

inline std::string wlp_csv(const json& j) {
  std::string s = "i,dim_i,dim_j,rank,maximal\n";
  for (const auto& r : j.at("rows"))
    s += std::to_string(r["i"].get<int>()) + "," + std::to_string(r["dim_i"].get<std::uint64_t>()) + "," +
         std::to_string(r["dim_j"].get<std::uint64_t>()) + "," + std::to_string(r["rank"].get<std::uint64_t>()) + "," +
         (r["maximal"].get<bool>() ? "true" : "false") + "\n";
  return s;
}

inline std::string wlp_text(const json& j) {
  std::string s = j.at("verdict").get<std::string>();
  if (!j.at("failure_degrees").empty()) s += " at degrees " + j.at("failure_degrees").dump();
  return s + " (" + j.at("certification").get<std::string>() + ")\n";
}

inline std::string scan_csv(const json& j) {
  std::string s = "n,d,k,verdict,predicted,source\n";
  for (const auto& g : j.at("cells"))
    s += std::to_string(g["n"].get<int>()) + "," + std::to_string(g["d"].get<int>()) + "," +
         std::to_string(g["k"].get<int>()) + "," + g["verdict"].get<std::string>() + "," +
         g["predicted"].get<std::string>() + "," + g["source"].get<std::string>() + "\n";
  return s;
}

inline std::string isotypic_csv(const json& j) {
  std::string s = "i,chi_e,chi_tau,chi_sigma,trivial,sign,standard\n";
  for (const auto& r : j.at("rows")) {
    const auto& chi = r["chi"];
    const auto& m = r["mult"];
    s += std::to_string(r["i"].get<int>());
    for (const auto* a : {&chi, &m})
      for (const auto& x : *a) s += "," + std::to_string(x.get<long long>());
    s += "\n";
  }
  return s;
}

inline std::string verify_text(const json& j) {
  std::string s;
  for (const auto& c : j.at("claims")) {
    s += c["claim"].get<std::string>() + ": " + c["status"].get<std::string>() + "\n";
    for (const auto& ch : c["checks"])
      if (ch["status"] != "pass")
        s += "  " + ch["status"].get<std::string>() + " " + ch["instance"].get<std::string>() + " expected " +
             ch["expected"].get<std::string>() + ", got " + ch["got"].get<std::string>() + "\n";
  }
  return s;
}

inline std::string render(const std::string& sub, const std::string& format, const json& j) {
  if (format == "json") return j.dump(2) + "\n";
  if (format == "csv") {
    if (sub == "hilbert") return hilbert_csv(j);
    if (sub == "wlp") return wlp_csv(j);
    if (sub == "scan") return scan_csv(j);
    if (sub == "isotypic") return isotypic_csv(j);
  }
  if (format == "text") {
    if (sub == "hilbert") return hilbert_text(j);
    if (sub == "wlp") return wlp_text(j);
    if (sub == "verify") return verify_text(j);
  }
  throw std::invalid_argument("format '" + format + "' is not available for " + sub);
}

inline json cache_key(const RunConfig& c) {
  json k{{"schema", 1}, {"subcommand", c.subcommand}, {"method", c.method}, {"primes", c.primes}, {"seeds", c.seeds}};
  if (c.subcommand == "hilbert" || c.subcommand == "wlp") k["spec"] = spec_to_json(build_spec(c));
  return k;
}

}  // namespace detail

/// Computes the JSON document for a parsed configuration, consulting the
/// cache for hilbert and wlp.
inline json execute(const RunConfig& c, std::ostream& err) {
  const bool cacheable = (c.subcommand == "hilbert" || c.subcommand == "wlp") && !c.cache_dir.empty();
  std::optional<ResultCache> cache;
  json key;
  if (cacheable) {
    cache.emplace(c.cache_dir, &err);
    key = detail::cache_key(c);
    if (auto hit = cache->lookup(key)) return *hit;
  }
  json out;
  if (c.subcommand == "hilbert") out = detail::hilbert_json(c);
  else if (c.subcommand == "wlp") out = detail::wlp_json(c);
  else if (c.subcommand == "scan") out = detail::scan_json(c);
  else if (c.subcommand == "isotypic") out = detail::isotypic_json(c);
  else if (c.subcommand == "relation") out = detail::relation_json(c);
  else if (c.subcommand == "verify") {
    VerifyContext ctx;
    ctx.scale = parse_scale(c.scale);
    ctx.guard = c.guard();
    if (!c.seeds.empty()) ctx.seeds = c.seeds;
    json claims = json::array();
    bool ok = true;
    for (const auto& id : c.claims.empty() ? claim_ids() : c.claims) {
      const auto r = run_claim(id, ctx);
      ok = ok && r.status != "fail";
      claims.push_back(claim_result_json(r));
    }
    out = json{{"schema", 1}, {"scale", c.scale}, {"ok", ok}, {"claims", claims}};
  } else {
    throw std::invalid_argument("unknown subcommand");
  }
  if (cacheable) cache->append(key, out);
  return out;
}

inline void add_common(CLI::App* sub, RunConfig& c) {
  sub->add_option("--prime", c.primes, "prime modulus (repeatable)");
  sub->add_option("--seed,--seeds", c.seeds, "instance seed(s)");
  sub->add_option("--format", c.format)->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--out", c.out, "write to file instead of stdout");
  sub->add_option("--workers", c.workers)->check(CLI::PositiveNumber);
  sub->add_option("--guard-basis", c.guard_basis)->check(CLI::PositiveNumber);
  sub->add_option("--guard-entries", c.guard_entries)->check(CLI::PositiveNumber);
}

inline void add_ndk(CLI::App* sub, RunConfig& c) {
  sub->add_option("--n", c.n)->required()->check(CLI::PositiveNumber);
  sub->add_option("--d", c.d)->required()->check(CLI::PositiveNumber);
  sub->add_option("--k", c.k)->required()->check(CLI::NonNegativeNumber);
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Hilbert functions and Lefschetz checks for powers of ideals"};
  app.require_subcommand(1);
  RunConfig c;
  if (const char* env = std::getenv("IDEALPOWER_CACHE")) c.cache_dir = env;
  app.add_option("--cache-dir", c.cache_dir, "result cache directory (env IDEALPOWER_CACHE)");

  auto* hil = app.add_subcommand("hilbert", "Hilbert function of S/I^k");
  add_ndk(hil, c);
  add_common(hil, c);
  hil->add_option("--family", c.family)->check(CLI::IsMember({"general", "powers-of-linear", "monomial-ci"}));
  hil->add_option("--method", c.method)->check(CLI::IsMember({"rank", "monomial", "series"}));

  auto* wl = app.add_subcommand("wlp", "weak Lefschetz check");
  add_ndk(wl, c);
  add_common(wl, c);
  wl->add_option("--family", c.family)->check(CLI::IsMember({"general", "powers-of-linear", "monomial-ci"}));
  wl->add_option("--method", c.method)->check(CLI::IsMember({"rank", "series", "both"}));

  auto* sc = app.add_subcommand("scan", "WLP grid for T_{n,d,k}");
  sc->add_option("--n", c.n)->required()->check(CLI::PositiveNumber);
  sc->add_option("--d-range", c.d_range, "min max");
  sc->add_option("--k-range", c.k_range, "min max");
  sc->add_option("--method", c.method)->check(CLI::IsMember({"rank", "series", "both"}));
  add_common(sc, c);

  auto* iso = app.add_subcommand("isotypic", "S_3 decomposition of T_{3,d,k}");
  iso->add_option("--d", c.d)->required()->check(CLI::PositiveNumber);
  iso->add_option("--k", c.k)->required()->check(CLI::PositiveNumber);
  iso->add_option("--from", c.from);
  iso->add_option("--to", c.to);
  add_common(iso, c);

  auto* rel = app.add_subcommand("relation", "product relation F, or the unique-relation certificate");
  rel->add_option("--n", c.n, "variables of F; with --certificate, n of the lemma")->required()->check(CLI::PositiveNumber);
  rel->add_option("--d", c.d)->required()->check(CLI::PositiveNumber);
  rel->add_flag("--certificate", c.certificate);
  rel->add_flag("--table", c.table, "compare with the printed example table");
  rel->add_option("--family", c.family)->check(CLI::IsMember({"general", "powers-of-linear"}));
  add_common(rel, c);

  auto* ver = app.add_subcommand("verify", "replay the published statements");
  ver->add_option("--claims", c.claims)->delimiter(',')->check(CLI::IsMember(claim_ids()));
  ver->add_option("--scale", c.scale)->check(CLI::IsMember({"small", "medium", "full"}));
  add_common(ver, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kInvalidConfig;
  }
  c.subcommand = app.get_subcommands().front()->get_name();
  if (c.subcommand == "wlp" && !wl->count("--family")) c.family = "monomial-ci";

  try {
    const json result = execute(c, err);
    const std::string text = detail::render(c.subcommand, c.format, result);
    if (c.out.empty()) {
      out << text;
    } else {
      std::ofstream f(c.out, std::ios::binary);
      if (!f) throw std::invalid_argument("cannot write " + c.out);
      f << text;
    }
    if (c.subcommand == "verify" && !result.at("ok").get<bool>()) return kVerifyFailed;
    return kOk;
  } catch (const GuardExceeded& e) {
    err << "guard exceeded: " << e.what() << "\n";
    return kGuardExceeded;
  } catch (const std::invalid_argument& e) {
    err << "invalid configuration: " << e.what() << "\n";
    return kInvalidConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kVerifyFailed;
  }
}

}  // namespace idealpower::cli
