#pragma once

/// @file series.hpp
/// @brief Truncated power series and the closed-form Hilbert series of the
/// ideal-power families.

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "exact.hpp"

namespace idealpower {

/// c_0..c_{N} of a Hilbert series, cut before the first nonpositive term.
struct TruncatedSeries {
  std::vector<BigInt> coeffs;
  /// Index of the first nonpositive coefficient of the untruncated series,
  /// or one past the expansion bound when none was seen.
  std::size_t cut = 0;
  bool terminated = true;

  BigInt at(std::size_t i) const { return i < coeffs.size() ? coeffs[i] : BigInt(0); }
  std::size_t size() const { return coeffs.size(); }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.coeffs == b.coeffs; }

  friend std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s) {
    for (std::size_t i = 0; i < s.coeffs.size(); ++i) os << (i ? "," : "") << s.coeffs[i];
    return os;
  }
};

/// Keeps the prefix of strictly positive values.
inline TruncatedSeries truncate_values(const std::vector<BigInt>& values) {
  TruncatedSeries s;
  for (const auto& v : values) {
    if (v <= 0) {
      s.cut = s.coeffs.size();
      return s;
    }
    s.coeffs.push_back(v);
  }
  s.cut = s.coeffs.size();
  return s;
}

/// Expands numerator / (1-t)^n up to degree `bound` and truncates before the
/// first nonpositive coefficient.
inline TruncatedSeries truncate_series(const std::vector<BigInt>& numerator, int n, std::size_t bound) {
  if (n < 0) throw std::invalid_argument("denominator exponent must be nonnegative");
  TruncatedSeries s;
  for (std::size_t i = 0; i <= bound; ++i) {
    BigInt c = 0;
    for (std::size_t j = 0; j <= i && j < numerator.size(); ++j) {
      if (numerator[j] == 0) continue;
      c += numerator[j] * (n == 0 ? BigInt(i == j ? 1 : 0)
                                  : binomial(static_cast<long long>(i - j) + n - 1, n - 1));
    }
    if (c <= 0) {
      s.cut = i;
      return s;
    }
    s.coeffs.push_back(c);
  }
  s.cut = bound + 1;
  s.terminated = false;
  return s;
}

/// (1 - t^a)^m, expanded only up to degree `bound`.
inline std::vector<BigInt> binomial_power_numerator(int a, const BigInt& m, std::size_t bound) {
  std::vector<BigInt> num(bound + 1, 0);
  for (long long j = 0; static_cast<std::size_t>(j) * static_cast<std::size_t>(a) <= bound; ++j) {
    if (j > m) break;
    // C(m, j) with big m
    BigInt c = 1;
    for (long long t = 1; t <= j; ++t) c = c * (m - t + 1) / t;
    num[static_cast<std::size_t>(j * a)] = (j % 2 ? -c : c);
  }
  return num;
}

/// [(1 - t^D)^R / (1 - t)^n]: the expected series of R general forms of
/// degree D in n variables.
inline TruncatedSeries generic_series(int n, int degree, const BigInt& count, std::size_t bound) {
  return truncate_series(binomial_power_numerator(degree, count, bound), n, bound);
}

/// R_{2,d,k}(t) = sum_{i<dk} (i+1) t^i + C(d-1,2) t^{dk}, valid for d >= 3
/// and k >= d-2.
inline TruncatedSeries series_theorem_25(int d, int k) {
  if (d < 3 || k < 1 || k < d - 2)
    throw std::invalid_argument("two-variable series holds for d >= 3, k >= max(d-2,1); got d=" + std::to_string(d) +
                                ", k=" + std::to_string(k));
  std::vector<BigInt> v;
  for (int i = 0; i < d * k; ++i) v.emplace_back(i + 1);
  v.push_back(binomial(d - 1, 2));
  return truncate_values(v);
}

/// R_{3,2,k}(t) = sum_{i<2k} C(i+2,2) t^i + (3k-1) t^{2k}.
inline TruncatedSeries series_theorem_26(int k) {
  if (k < 1) throw std::invalid_argument("need k >= 1");
  std::vector<BigInt> v;
  for (int i = 0; i < 2 * k; ++i) v.push_back(binomial(i + 2, 2));
  v.emplace_back(3 * k - 1);
  return truncate_values(v);
}

inline constexpr int kCubicSeriesProvenLimit = 40;

/// R_{3,3,k}: the generic truncation for k < 9, and
/// sum_{i<3k} C(i+2,2) t^i + (27k-56) t^{3k} for 9 <= k <= 40.
inline TruncatedSeries series_theorem_28(int k) {
  if (k < 1) throw std::invalid_argument("need k >= 1");
  if (k > kCubicSeriesProvenLimit) throw std::invalid_argument("unproven range: k > 40");
  if (k < 9) return generic_series(3, 3 * k, binomial(k + 3, 3), static_cast<std::size_t>(6 * k + 6));
  std::vector<BigInt> v;
  for (int i = 0; i < 3 * k; ++i) v.push_back(binomial(i + 2, 2));
  v.emplace_back(27 * k - 56);
  return truncate_values(v);
}

inline BigInt ipow(long long base, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

/// Conjectured series of n+1 general forms of degree d when k >= d^{n-1}.
inline TruncatedSeries series_conjecture_211(int n, int d, int k) {
  if (n < 1 || d < 1) throw std::invalid_argument("need n, d >= 1");
  const BigInt threshold = ipow(d, n - 1);
  if (BigInt(k) < threshold) throw std::invalid_argument("needs k >= d^(n-1)");
  if (d == 2 && n == 2) throw std::invalid_argument("(d,n) = (2,2) is excluded");
  std::vector<BigInt> v;
  for (int i = 0; i < d * k; ++i) v.push_back(binomial(i + n - 1, n - 1));
  const long long shifted = static_cast<long long>(k - threshold) + n;
  v.push_back(binomial(static_cast<long long>(d) * k + n - 1, n - 1) - binomial(k + n, n) + binomial(shifted, n));
  return truncate_values(v);
}

/// Hilbert series of T_{3,d,k} = C[x,y,z]/(x^d,y^d,z^d)^k from the known
/// Betti numbers of powers of complete intersections:
/// (1 - C(k+2,2) t^{dk} + (k^2+2k) t^{d(k+1)} - C(k+1,2) t^{d(k+2)}) / (1-t)^3.
inline TruncatedSeries series_guardo_vantuyl(int d, int k) {
  if (d < 1 || k < 1) throw std::invalid_argument("need d, k >= 1");
  const std::size_t bound = static_cast<std::size_t>(d) * static_cast<std::size_t>(k + 2) + 3;
  std::vector<BigInt> num(bound + 1, 0);
  num[0] += 1;
  num[static_cast<std::size_t>(d * k)] -= binomial(k + 2, 2);
  num[static_cast<std::size_t>(d * (k + 1))] += BigInt(k) * k + 2 * k;
  num[static_cast<std::size_t>(d * (k + 2))] -= binomial(k + 1, 2);
  return truncate_series(num, 3, bound);
}

/// S_{n,d,k}: when nonnegative, the quotient already vanishes in degree
/// d(k+1) where the obvious linear syzygies live.
inline BigInt S_ndk(int n, int d, int k) {
  if (n < 1 || d < 1 || k < 1) throw std::invalid_argument("need n, d, k >= 1");
  const BigInt kn = binomial(k + n, n);
  return binomial(d + n - 1, n - 1) * kn - (kn * (n + 1) - binomial(k + 1 + n, n)) -
         binomial(static_cast<long long>(d) * (k + 1) + n - 1, n - 1);
}

/// C(d^n+n-1, n-1) > C(d^{n-1}+n, n): room for all degree d^{n-1} monomials
/// in n+1 forms inside degree d^n.
inline bool binomial_inequality(int d, int n) {
  const BigInt dn = ipow(d, n), dn1 = ipow(d, n - 1);
  return binomial(static_cast<long long>(dn) + n - 1, n - 1) > binomial(static_cast<long long>(dn1) + n, n);
}

}  // namespace idealpower
