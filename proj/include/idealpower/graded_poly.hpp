#pragma once

/// @file graded_poly.hpp
/// @brief Sparse homogeneous polynomials over a pluggable exact coefficient
/// ring (BigInt, PrimeFieldElement, CycloInt).

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "exact.hpp"
#include "monomial.hpp"

namespace idealpower {

template <class C>
struct CoefficientTraits;

template <>
struct CoefficientTraits<BigInt> {
  static bool is_zero(const BigInt& c) { return c == 0; }
  static BigInt one_like(const BigInt&) { return 1; }
  static BigInt from_integer(const BigInt& v, const BigInt&) { return v; }
};

template <>
struct CoefficientTraits<PrimeFieldElement> {
  static bool is_zero(const PrimeFieldElement& c) { return c.is_zero(); }
  static PrimeFieldElement one_like(const PrimeFieldElement& c) { return {1, c.modulus()}; }
  static PrimeFieldElement from_integer(const BigInt& v, const PrimeFieldElement& like) {
    return {v, like.modulus()};
  }
};

template <>
struct CoefficientTraits<CycloInt> {
  static bool is_zero(const CycloInt& c) { return c.is_zero(); }
  static CycloInt one_like(const CycloInt& c) { return {BigInt(1), c.order()}; }
  static CycloInt from_integer(const BigInt& v, const CycloInt& like) { return {v, like.order()}; }
};

template <class C>
concept Coefficient = requires(const C& a, const C& b) {
  { a + b } -> std::convertible_to<C>;
  { a - b } -> std::convertible_to<C>;
  { a * b } -> std::convertible_to<C>;
  { -a } -> std::convertible_to<C>;
  { CoefficientTraits<C>::is_zero(a) } -> std::convertible_to<bool>;
};

/// Homogeneous polynomial: every stored coefficient is nonzero and every
/// monomial has the same degree. Terms iterate from the grevlex-leading one.
template <Coefficient C>
class GradedPoly {
 public:
  using Terms = std::map<Monomial, C, GrevlexGreater>;
  using Traits = CoefficientTraits<C>;

  explicit GradedPoly(std::size_t nvars) : nvars_(nvars) {}

  GradedPoly(std::size_t nvars, std::vector<std::pair<Monomial, C>> terms) : nvars_(nvars) {
    for (auto& [m, c] : terms) add_term(m, c);
  }

  static GradedPoly constant(std::size_t nvars, const C& c) {
    GradedPoly p(nvars);
    p.add_term(Monomial(nvars), c);
    return p;
  }

  static GradedPoly monomial(const Monomial& m, const C& c) {
    GradedPoly p(m.nvars());
    p.add_term(m, c);
    return p;
  }

  /// Sum of coeffs[i] * x_i.
  static GradedPoly linear_form(const std::vector<C>& coeffs) {
    GradedPoly p(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) p.add_term(Monomial::variable(coeffs.size(), i), coeffs[i]);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  /// Common degree of the terms; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

  const std::pair<const Monomial, C>& leading_term() const {
    if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
    return *terms_.begin();
  }

  /// Coefficient of m, or nullptr when absent.
  const C* coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? nullptr : &it->second;
  }

  void add_term(const Monomial& m, const C& c) {
    if (m.nvars() != nvars_) throw std::invalid_argument("monomial has wrong number of variables");
    if (!terms_.empty() && terms_.begin()->first.degree() != m.degree())
      throw std::invalid_argument("inhomogeneous term added to graded polynomial");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      if (!Traits::is_zero(c)) terms_.emplace(m, c);
      return;
    }
    it->second = it->second + c;
    if (Traits::is_zero(it->second)) terms_.erase(it);
  }

  GradedPoly& operator+=(const GradedPoly& o) {
    check_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  GradedPoly& operator-=(const GradedPoly& o) {
    check_ring(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
  friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
  GradedPoly operator-() const {
    GradedPoly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  GradedPoly scaled(const C& s) const {
    GradedPoly r(nvars_);
    for (const auto& [m, c] : terms_) r.add_term(m, c * s);
    return r;
  }

  GradedPoly times_monomial(const Monomial& mono) const {
    GradedPoly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m * mono, c);
    return r;
  }

  friend bool operator==(const GradedPoly& a, const GradedPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  friend std::ostream& operator<<(std::ostream& os, const GradedPoly& p) {
    if (p.terms_.empty()) return os << '0';
    bool first = true;
    for (const auto& [m, c] : p.terms_) {
      if (!first) os << " + ";
      os << '(' << c << ")*" << m;
      first = false;
    }
    return os;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
  }

 private:
  void check_ring(const GradedPoly& o) const {
    if (o.nvars_ != nvars_) throw std::invalid_argument("polynomials in different rings");
  }

  std::size_t nvars_;
  Terms terms_;
};

template <Coefficient C>
GradedPoly<C> multiply(const GradedPoly<C>& p, const GradedPoly<C>& q) {
  if (p.nvars() != q.nvars()) throw std::invalid_argument("ring mismatch: different number of variables");
  GradedPoly<C> r(p.nvars());
  for (const auto& [mp, cp] : p.terms())
    for (const auto& [mq, cq] : q.terms()) r.add_term(mp * mq, cp * cq);
  return r;
}

template <Coefficient C>
GradedPoly<C> operator*(const GradedPoly<C>& p, const GradedPoly<C>& q) {
  return multiply(p, q);
}

template <Coefficient C>
GradedPoly<C> power(const GradedPoly<C>& p, int e, const C& one) {
  if (e < 0) throw std::invalid_argument("negative power");
  GradedPoly<C> result = GradedPoly<C>::constant(p.nvars(), one);
  GradedPoly<C> base = p;
  while (e) {
    if (e & 1) result = multiply(result, base);
    e >>= 1;
    if (e) base = multiply(base, base);
  }
  return result;
}

/// Convert coefficients into another ring, e.g. integers into Z/p.
template <Coefficient To, Coefficient From, class Fn>
GradedPoly<To> map_coefficients(const GradedPoly<From>& p, Fn&& fn) {
  GradedPoly<To> r(p.nvars());
  for (const auto& [m, c] : p.terms()) r.add_term(m, fn(c));
  return r;
}

inline GradedPoly<PrimeFieldElement> reduce_mod(const GradedPoly<BigInt>& p, std::uint64_t prime) {
  return map_coefficients<PrimeFieldElement>(p, [prime](const BigInt& c) { return PrimeFieldElement(c, prime); });
}

/// Eliminates variable `var` by substituting a linear form in the remaining
/// n-1 variables. The result lives in n-1 variables.
template <Coefficient C>
GradedPoly<C> substitute_linear(const GradedPoly<C>& p, std::size_t var, const GradedPoly<C>& replacement) {
  const std::size_t n = p.nvars();
  if (var >= n) throw std::out_of_range("substituted variable out of range");
  if (replacement.nvars() + 1 != n)
    throw std::invalid_argument("replacement must live in the remaining n-1 variables");
  if (!replacement.is_zero() && replacement.degree() != 1)
    throw std::invalid_argument("replacement is not a linear form");

  GradedPoly<C> result(n - 1);
  if (p.is_zero()) return result;
  std::vector<GradedPoly<C>> powers;
  for (const auto& [m, c] : p.terms()) {
    const int e = m[var];
    if (powers.empty()) powers.push_back(GradedPoly<C>::constant(n - 1, CoefficientTraits<C>::one_like(c)));
    while (static_cast<int>(powers.size()) <= e) powers.push_back(multiply(powers.back(), replacement));
    std::vector<Exponent> rest;
    rest.reserve(n - 1);
    for (std::size_t i = 0; i < n; ++i)
      if (i != var) rest.push_back(m[i]);
    for (const auto& [pm, pc] : powers[static_cast<std::size_t>(e)].terms()) result.add_term(Monomial(rest) * pm, c * pc);
  }
  return result;
}

using Permutation = std::vector<std::size_t>;

/// Ring automorphism x_i -> x_{sigma[i]}.
template <Coefficient C>
GradedPoly<C> apply_permutation(const GradedPoly<C>& p, const Permutation& sigma) {
  const std::size_t n = p.nvars();
  if (sigma.size() != n) throw std::invalid_argument("permutation has wrong size");
  std::vector<bool> seen(n, false);
  for (std::size_t s : sigma) {
    if (s >= n || seen[s]) throw std::invalid_argument("not a permutation");
    seen[s] = true;
  }
  GradedPoly<C> r(n);
  for (const auto& [m, c] : p.terms()) {
    std::vector<Exponent> e(n, 0);
    for (std::size_t i = 0; i < n; ++i) e[sigma[i]] = m[i];
    r.add_term(Monomial(std::move(e)), c);
  }
  return r;
}

/// Orbit sum over the full symmetric group: sum_{sigma in S_n} sigma(p).
template <Coefficient C>
GradedPoly<C> symmetrize(const GradedPoly<C>& p) {
  Permutation sigma(p.nvars());
  std::iota(sigma.begin(), sigma.end(), std::size_t{0});
  GradedPoly<C> r(p.nvars());
  do {
    r += apply_permutation(p, sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return r;
}

}  // namespace idealpower
