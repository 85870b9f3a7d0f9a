#pragma once

/// @file serialize.hpp
/// @brief Text and JSON forms of integer polynomials.
///
/// JSON term lists are `[{"exponents":[...],"coefficient":"..."}]`, sorted
/// by descending grevlex; this is the canonical form used in golden files
/// and cache keys.

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "graded_poly.hpp"

namespace idealpower {

using nlohmann::json;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

inline json poly_to_json(const GradedPoly<BigInt>& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms())
    terms.push_back(json{{"exponents", m.exponents()}, {"coefficient", to_decimal(c)}});
  return terms;
}

inline GradedPoly<BigInt> poly_from_json(const json& terms, std::size_t nvars) {
  if (!terms.is_array()) throw std::invalid_argument("polynomial must be a JSON array of terms");
  GradedPoly<BigInt> p(nvars);
  for (const auto& t : terms) {
    auto exps = t.at("exponents").get<std::vector<Exponent>>();
    if (exps.size() != nvars) throw std::invalid_argument("term has wrong number of exponents");
    const auto& cj = t.at("coefficient");
    BigInt c = cj.is_string() ? BigInt(cj.get<std::string>()) : BigInt(cj.get<long long>());
    p.add_term(Monomial(std::move(exps)), c);
  }
  return p;
}

/// Parses sums like "x^4-4x^2*y^2+2xyz" over the given variable names.
/// Factors may be juxtaposed or separated by '*'.
inline GradedPoly<BigInt> parse_poly(std::string_view text, const std::vector<std::string>& names) {
  GradedPoly<BigInt> p(names.size());
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&]() -> std::string {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return std::string(text.substr(start, pos - start));
  };
  skip_ws();
  if (pos == text.size()) throw std::invalid_argument("empty polynomial");
  bool any_term = false;
  while (pos < text.size()) {
    int sign = 1;
    skip_ws();
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      if (text[pos] == '-') sign = -1;
      ++pos;
    } else if (any_term) {
      throw std::invalid_argument("expected '+' or '-' at offset " + std::to_string(pos));
    }
    skip_ws();
    BigInt coeff = 1;
    std::string digits = read_int();
    if (!digits.empty()) coeff = BigInt(digits);
    std::vector<Exponent> exps(names.size(), 0);
    bool saw_factor = !digits.empty();
    for (;;) {
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip_ws();
      }
      std::size_t best = names.size(), best_len = 0;
      for (std::size_t v = 0; v < names.size(); ++v)
        if (text.substr(pos, names[v].size()) == names[v] && names[v].size() > best_len) {
          best = v;
          best_len = names[v].size();
        }
      if (best == names.size()) break;
      pos += best_len;
      Exponent e = 1;
      skip_ws();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip_ws();
        std::string ed = read_int();
        if (ed.empty()) throw std::invalid_argument("missing exponent");
        e = std::stoi(ed);
      }
      exps[best] += e;
      saw_factor = true;
    }
    if (!saw_factor) throw std::invalid_argument("unparsable term at offset " + std::to_string(pos));
    p.add_term(Monomial(std::move(exps)), sign * coeff);
    any_term = true;
    skip_ws();
  }
  return p;
}

inline std::vector<std::string> default_variable_names(std::size_t n) {
  static const std::vector<std::string> short_names{"x", "y", "z", "u", "v"};
  std::vector<std::string> names;
  if (n <= short_names.size()) return {short_names.begin(), short_names.begin() + static_cast<long>(n)};
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

}  // namespace idealpower
