#pragma once

/// @file monomial.hpp
/// @brief Exponent-vector monomials, the graded reverse lexicographic order
/// and per-degree monomial bases.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "exact.hpp"

namespace idealpower {

using Exponent = int;

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
    for (Exponent e : exps_) {
      if (e < 0) throw std::invalid_argument("negative exponent");
      degree_ += e;
    }
  }
  Monomial(std::initializer_list<Exponent> exps) : Monomial(std::vector<Exponent>(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t index, Exponent power = 1) {
    Monomial m(nvars);
    m.exps_.at(index) = power;
    m.degree_ = power;
    return m;
  }

  std::size_t nvars() const { return exps_.size(); }
  int degree() const { return degree_; }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<Exponent>& exponents() const { return exps_; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("monomials in different rings");
    Monomial r = a;
    for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] += b.exps_[i];
    r.degree_ += b.degree_;
    return r;
  }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  /// other / *this; caller guarantees divisibility.
  Monomial quotient_of(const Monomial& other) const {
    Monomial r = other;
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= exps_[i];
    r.degree_ -= degree_;
    return r;
  }

  Monomial times_variable(std::size_t index) const {
    Monomial r = *this;
    ++r.exps_[index];
    ++r.degree_;
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

  friend std::ostream& operator<<(std::ostream& os, const Monomial& m) {
    bool first = true;
    for (std::size_t i = 0; i < m.exps_.size(); ++i) {
      if (m.exps_[i] == 0) continue;
      if (!first) os << '*';
      os << 'x' << (i + 1);
      if (m.exps_[i] > 1) os << '^' << m.exps_[i];
      first = false;
    }
    if (first) os << '1';
    return os;
  }

 private:
  std::vector<Exponent> exps_;
  int degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (Exponent e : m.exponents()) h = (h ^ static_cast<std::size_t>(e)) * 0x100000001b3ULL;
    return h;
  }
};

/// Graded reverse lexicographic comparison: degree first, then the monomial
/// with the smaller exponent in the last differing variable is larger.
inline int grevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (std::size_t i = a.nvars(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

/// Strict "greater than" under grevlex; containers keyed with it iterate
/// from the leading monomial down.
struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_compare(a, b) > 0; }
};

/// All monomials of one degree, in descending grevlex order, with inverse
/// index.
class DegreeBasis {
 public:
  DegreeBasis(std::size_t nvars, int degree) : nvars_(nvars), degree_(degree) {
    if (nvars == 0) throw std::invalid_argument("need at least one variable");
    if (degree < 0) throw std::invalid_argument("negative degree");
    std::vector<Exponent> e(nvars, 0);
    fill(e, 0, degree);
    std::sort(monomials_.begin(), monomials_.end(), GrevlexGreater{});
    index_.reserve(monomials_.size());
    for (std::size_t j = 0; j < monomials_.size(); ++j) index_.emplace(monomials_[j], j);
  }

  std::size_t nvars() const { return nvars_; }
  int degree() const { return degree_; }
  std::size_t size() const { return monomials_.size(); }
  const Monomial& monomial_at(std::size_t j) const { return monomials_.at(j); }
  const std::vector<Monomial>& monomials() const { return monomials_; }

  std::size_t index_of(const Monomial& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) throw std::out_of_range("monomial not in this degree basis");
    return it->second;
  }

  bool contains(const Monomial& m) const { return index_.count(m) != 0; }

 private:
  void fill(std::vector<Exponent>& e, std::size_t var, int remaining) {
    if (var + 1 == nvars_) {
      e[var] = remaining;
      monomials_.emplace_back(e);
      return;
    }
    for (int a = remaining; a >= 0; --a) {
      e[var] = a;
      fill(e, var + 1, remaining - a);
    }
    e[var] = 0;
  }

  std::size_t nvars_;
  int degree_;
  std::vector<Monomial> monomials_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

inline DegreeBasis enumerate_degree(std::size_t nvars, int degree) { return DegreeBasis(nvars, degree); }

/// dim of the degree-i piece of a polynomial ring in n variables.
inline std::uint64_t ring_dimension(std::size_t nvars, int degree) {
  if (degree < 0) return 0;
  return binomial_u64(degree + static_cast<long long>(nvars) - 1, static_cast<long long>(nvars) - 1);
}

}  // namespace idealpower
