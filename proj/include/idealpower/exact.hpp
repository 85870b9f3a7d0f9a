#pragma once

/// @file exact.hpp
/// @brief Exact arithmetic: big integers, binomials, prime fields and
/// cyclotomic integers Z[z]/Phi_d(z).

#include <cstdint>
#include <limits>
#include <map>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace idealpower {

using BigInt = boost::multiprecision::cpp_int;

/// Binomial coefficient; zero whenever n < 0, k < 0 or k > n.
inline BigInt binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (long long j = 1; j <= k; ++j) {
    result *= n - k + j;
    result /= j;
  }
  return result;
}

/// Binomial coefficient that must fit a machine word (dimension counts).
inline std::uint64_t binomial_u64(long long n, long long k) {
  BigInt b = binomial(n, k);
  if (b > std::numeric_limits<std::uint64_t>::max())
    throw std::overflow_error("binomial(" + std::to_string(n) + "," + std::to_string(k) +
                              ") does not fit 64 bits");
  return static_cast<std::uint64_t>(b);
}

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  unsigned __int128 result = 1 % mod, b = base % mod;
  while (exp) {
    if (exp & 1) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

inline std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw std::domain_error("not invertible");
  return pow_mod(a, p - 2, p);
}

/// Element of Z/p for a prime p fixed at runtime. The modulus travels with
/// the value so that mixing fields is caught instead of silently wrong.
class PrimeFieldElement {
 public:
  PrimeFieldElement(long long value, std::uint64_t modulus) : modulus_(modulus) {
    if (modulus < 2) throw std::invalid_argument("modulus must be a prime");
    long long r = value % static_cast<long long>(modulus);
    residue_ = static_cast<std::uint64_t>(r < 0 ? r + static_cast<long long>(modulus) : r);
  }

  PrimeFieldElement(const BigInt& value, std::uint64_t modulus) : modulus_(modulus) {
    if (modulus < 2) throw std::invalid_argument("modulus must be a prime");
    BigInt r = value % modulus;
    if (r < 0) r += modulus;
    residue_ = static_cast<std::uint64_t>(r);
  }

  std::uint64_t residue() const { return residue_; }
  std::uint64_t modulus() const { return modulus_; }
  bool is_zero() const { return residue_ == 0; }

  /// Signed representative in (-p/2, p/2], used for printing.
  long long symmetric() const {
    return residue_ > modulus_ / 2 ? static_cast<long long>(residue_) - static_cast<long long>(modulus_)
                                   : static_cast<long long>(residue_);
  }

  PrimeFieldElement inverse() const {
    if (residue_ == 0) throw std::domain_error("not invertible");
    return from_residue(pow_mod(residue_, modulus_ - 2, modulus_), modulus_);
  }

  friend PrimeFieldElement operator+(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    check_same(a, b);
    std::uint64_t s = a.residue_ + b.residue_;
    return from_residue(s >= a.modulus_ ? s - a.modulus_ : s, a.modulus_);
  }
  friend PrimeFieldElement operator-(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    check_same(a, b);
    return from_residue(a.residue_ >= b.residue_ ? a.residue_ - b.residue_
                                                 : a.residue_ + a.modulus_ - b.residue_,
                        a.modulus_);
  }
  friend PrimeFieldElement operator*(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    check_same(a, b);
    return from_residue(static_cast<std::uint64_t>(static_cast<unsigned __int128>(a.residue_) *
                                                   b.residue_ % a.modulus_),
                        a.modulus_);
  }
  friend PrimeFieldElement operator/(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    return a * b.inverse();
  }
  PrimeFieldElement operator-() const {
    return from_residue(residue_ == 0 ? 0 : modulus_ - residue_, modulus_);
  }
  PrimeFieldElement& operator+=(const PrimeFieldElement& o) { return *this = *this + o; }
  PrimeFieldElement& operator-=(const PrimeFieldElement& o) { return *this = *this - o; }
  PrimeFieldElement& operator*=(const PrimeFieldElement& o) { return *this = *this * o; }

  friend bool operator==(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    return a.modulus_ == b.modulus_ && a.residue_ == b.residue_;
  }

  friend std::ostream& operator<<(std::ostream& os, const PrimeFieldElement& a) {
    return os << a.symmetric();
  }

 private:
  static PrimeFieldElement from_residue(std::uint64_t r, std::uint64_t p) {
    PrimeFieldElement e;
    e.residue_ = r;
    e.modulus_ = p;
    return e;
  }
  static void check_same(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    if (a.modulus_ != b.modulus_) throw std::domain_error("ring mismatch: Z/" +
                                                          std::to_string(a.modulus_) + " vs Z/" +
                                                          std::to_string(b.modulus_));
  }
  PrimeFieldElement() = default;

  std::uint64_t residue_ = 0;
  std::uint64_t modulus_ = 0;
};

/// Checked constructor for field elements; rejects composite moduli.
inline PrimeFieldElement field_element(long long value, std::uint64_t prime) {
  if (!is_prime(prime)) throw std::invalid_argument(std::to_string(prime) + " is not prime");
  return PrimeFieldElement(value, prime);
}

inline PrimeFieldElement field_inverse(const PrimeFieldElement& a) { return a.inverse(); }

// ---------------------------------------------------------------------------
// Integer polynomials in one variable (dense, ascending powers).

using IntPoly = std::vector<BigInt>;

namespace detail {

inline void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

/// Exact division of integer polynomials by a monic divisor.
inline IntPoly divide_monic(IntPoly num, const IntPoly& den) {
  if (den.empty() || den.back() != 1) throw std::invalid_argument("divisor must be monic");
  trim(num);
  if (num.size() < den.size()) {
    if (!num.empty()) throw std::logic_error("inexact polynomial division");
    return {};
  }
  IntPoly q(num.size() - den.size() + 1);
  for (std::size_t i = q.size(); i-- > 0;) {
    BigInt c = num[i + den.size() - 1];
    q[i] = c;
    if (c != 0)
      for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  trim(num);
  if (!num.empty()) throw std::logic_error("inexact polynomial division");
  return q;
}

inline IntPoly compute_cyclotomic(int d) {
  IntPoly num(static_cast<std::size_t>(d) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(d)] = 1;
  for (int e = 1; e < d; ++e) {
    if (d % e != 0) continue;
    num = divide_monic(std::move(num), compute_cyclotomic(e));
  }
  return num;
}

}  // namespace detail

/// The d-th cyclotomic polynomial, Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e.
inline const IntPoly& cyclotomic_polynomial(int d) {
  if (d <= 0) throw std::invalid_argument("cyclotomic index must be positive");
  static std::mutex mutex;
  static std::map<int, IntPoly> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(d);
  if (it == cache.end()) it = cache.emplace(d, detail::compute_cyclotomic(d)).first;
  return it->second;
}

/// Element of Z[z]/Phi_d(z), stored as phi(d) coefficients of 1, z, z^2, ...
class CycloInt {
 public:
  /// Reduces an arbitrary coefficient vector modulo Phi_d.
  CycloInt(IntPoly coeffs, int d) : d_(d) {
    const IntPoly& phi = cyclotomic_polynomial(d);
    const std::size_t deg = phi.size() - 1;
    for (std::size_t i = coeffs.size(); i-- > deg;) {
      BigInt c = coeffs[i];
      if (c == 0) continue;
      for (std::size_t j = 0; j <= deg; ++j) coeffs[i - deg + j] -= c * phi[j];
    }
    coeffs.resize(deg, 0);
    coeffs_ = std::move(coeffs);
  }

  CycloInt(const BigInt& integer, int d) : CycloInt(IntPoly{integer}, d) {}

  /// The class of z^e for e >= 0.
  static CycloInt root_power(long long e, int d) {
    if (d <= 0) throw std::invalid_argument("cyclotomic index must be positive");
    IntPoly v(static_cast<std::size_t>(e % d) + 1, 0);
    v.back() = 1;
    return CycloInt(std::move(v), d);
  }

  int order() const { return d_; }
  const IntPoly& coefficients() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  /// True when all components of z^1, z^2, ... vanish.
  bool is_rational_integer() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return false;
    return true;
  }

  BigInt integer_part() const { return coeffs_.empty() ? BigInt(0) : coeffs_[0]; }

  friend CycloInt operator+(const CycloInt& a, const CycloInt& b) {
    check_same(a, b);
    CycloInt r = a;
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
    return r;
  }
  friend CycloInt operator-(const CycloInt& a, const CycloInt& b) {
    check_same(a, b);
    CycloInt r = a;
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] -= b.coeffs_[i];
    return r;
  }
  CycloInt operator-() const {
    CycloInt r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  friend CycloInt operator*(const CycloInt& a, const CycloInt& b) {
    check_same(a, b);
    IntPoly prod(a.coeffs_.size() + b.coeffs_.size(), 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return CycloInt(std::move(prod), a.d_);
  }
  CycloInt& operator+=(const CycloInt& o) { return *this = *this + o; }
  CycloInt& operator-=(const CycloInt& o) { return *this = *this - o; }
  CycloInt& operator*=(const CycloInt& o) { return *this = *this * o; }

  friend bool operator==(const CycloInt& a, const CycloInt& b) {
    return a.d_ == b.d_ && a.coeffs_ == b.coeffs_;
  }

  friend std::ostream& operator<<(std::ostream& os, const CycloInt& a) {
    os << "[";
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) os << (i ? "," : "") << a.coeffs_[i];
    return os << "]_" << a.d_;
  }

 private:
  static void check_same(const CycloInt& a, const CycloInt& b) {
    if (a.d_ != b.d_) throw std::domain_error("ring mismatch: cyclotomic orders differ");
  }

  int d_;
  IntPoly coeffs_;
};

inline CycloInt cyclo_reduce(IntPoly coeffs, int d) {
  if (d <= 0) throw std::invalid_argument("cyclotomic index must be positive");
  return CycloInt(std::move(coeffs), d);
}

}  // namespace idealpower
