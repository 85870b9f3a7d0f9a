#pragma once

/// @file rank.hpp
/// @brief Incremental row echelon forms for rank computation: modular
/// (Z/p, dense accumulator over sparse rows) and exact (Z, fraction free).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/integer/common_factor.hpp>

#include "exact.hpp"

namespace idealpower {

/// Semi-echelon basis of a row space over Z/p. Rows are added one at a
/// time; each stored row has a distinct pivot column with value 1.
class ModularEchelon {
 public:
  using Entry = std::pair<std::uint32_t, std::uint32_t>;
  using SparseRow = std::vector<Entry>;

  ModularEchelon(std::size_t ncols, std::uint64_t prime)
      : ncols_(ncols), prime_(prime), pivot_row_(ncols, -1), acc_(ncols, 0) {
    if (prime < 2 || prime >= (1ULL << 31)) throw std::invalid_argument("prime out of supported range");
  }

  std::size_t ncols() const { return ncols_; }
  std::uint64_t prime() const { return prime_; }
  std::size_t rank() const { return rows_.size(); }
  bool full() const { return rows_.size() == ncols_; }
  const std::vector<SparseRow>& rows() const { return rows_; }

  /// Reduces `row` (entries may be unsorted, values taken mod p) against the
  /// current basis. Returns true when the rank grew.
  bool insert(const SparseRow& row) {
    if (full()) return false;
    std::size_t first = ncols_;
    for (const auto& [c, v] : row) {
      if (c >= ncols_) throw std::out_of_range("column index out of range");
      acc_[c] = (acc_[c] + v) % prime_;
      first = std::min<std::size_t>(first, c);
    }
    for (std::size_t c = first; c < ncols_; ++c) {
      const std::uint64_t v = acc_[c];
      if (v == 0) continue;
      const int pr = pivot_row_[c];
      if (pr >= 0) {
        const std::uint64_t f = prime_ - v;
        for (const auto& [cc, pv] : rows_[static_cast<std::size_t>(pr)]) acc_[cc] = (acc_[cc] + f * pv) % prime_;
        continue;
      }
      const std::uint64_t inv = inverse_mod(v, prime_);
      SparseRow fresh;
      for (std::size_t cc = c; cc < ncols_; ++cc) {
        if (acc_[cc] != 0) {
          fresh.emplace_back(static_cast<std::uint32_t>(cc), static_cast<std::uint32_t>(acc_[cc] * inv % prime_));
          acc_[cc] = 0;
        }
      }
      pivot_row_[c] = static_cast<int>(rows_.size());
      rows_.push_back(std::move(fresh));
      return true;
    }
    return false;
  }

 private:
  std::size_t ncols_;
  std::uint64_t prime_;
  std::vector<int> pivot_row_;
  std::vector<SparseRow> rows_;
  std::vector<std::uint64_t> acc_;
};

inline std::size_t modular_rank(const std::vector<ModularEchelon::SparseRow>& rows, std::size_t ncols,
                                std::uint64_t prime) {
  ModularEchelon e(ncols, prime);
  for (const auto& r : rows) {
    e.insert(r);
    if (e.full()) break;
  }
  return e.rank();
}

/// Fraction-free echelon form over Z; rows are kept primitive.
class IntegerEchelon {
 public:
  using Entry = std::pair<std::uint32_t, BigInt>;
  using SparseRow = std::vector<Entry>;

  explicit IntegerEchelon(std::size_t ncols) : ncols_(ncols), pivot_row_(ncols, -1) {}

  std::size_t rank() const { return rows_.size(); }
  bool full() const { return rows_.size() == ncols_; }

  bool insert(SparseRow row) {
    if (full()) return false;
    normalize(row);
    while (!row.empty()) {
      const int pr = pivot_row_[row.front().first];
      if (pr < 0) {
        pivot_row_[row.front().first] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(row));
        return true;
      }
      const SparseRow& pivot = rows_[static_cast<std::size_t>(pr)];
      BigInt a = pivot.front().second;
      BigInt b = row.front().second;
      BigInt g = boost::integer::gcd(a, b);
      a /= g;
      b /= g;
      row = combine(row, a, pivot, b);
      normalize(row);
    }
    return false;
  }

 private:
  // a*x - b*y over sparse rows sorted by column.
  static SparseRow combine(const SparseRow& x, const BigInt& a, const SparseRow& y, const BigInt& b) {
    SparseRow out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
      if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
        out.emplace_back(x[i].first, a * x[i].second);
        ++i;
      } else if (i == x.size() || y[j].first < x[i].first) {
        out.emplace_back(y[j].first, -b * y[j].second);
        ++j;
      } else {
        BigInt v = a * x[i].second - b * y[j].second;
        if (v != 0) out.emplace_back(x[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    return out;
  }

  static void normalize(SparseRow& row) {
    std::sort(row.begin(), row.end(), [](const Entry& l, const Entry& r) { return l.first < r.first; });
    SparseRow merged;
    for (auto& e : row) {
      if (!merged.empty() && merged.back().first == e.first) merged.back().second += e.second;
      else merged.push_back(std::move(e));
    }
    std::erase_if(merged, [](const Entry& e) { return e.second == 0; });
    if (merged.empty()) {
      row.clear();
      return;
    }
    BigInt g = 0;
    for (const auto& e : merged) {
      g = boost::integer::gcd(g, BigInt(abs(e.second)));
      if (g == 1) break;
    }
    if (merged.front().second < 0) g = -g;
    if (g != 1)
      for (auto& e : merged) e.second /= g;
    row = std::move(merged);
  }

  std::size_t ncols_;
  std::vector<int> pivot_row_;
  std::vector<SparseRow> rows_;
};

}  // namespace idealpower
