#pragma once

/// @file equivariant.hpp
/// @brief S_3 characters and isotypic multiplicities of T_{3,d,k} and the
/// equivariant obstruction to maximal rank of x(x+y+z).

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "exact.hpp"
#include "ideal.hpp"
#include "wlp.hpp"

namespace idealpower {

/// Permutation character on the standard monomial basis in one degree:
/// identity, transposition (12), 3-cycle (123).
struct CharacterVector {
  long long e = 0, tau = 0, sigma = 0;
  friend bool operator==(const CharacterVector&, const CharacterVector&) = default;
};

struct IsotypicMultiplicities {
  long long trivial = 0, sign = 0, standard = 0;
  friend bool operator==(const IsotypicMultiplicities&, const IsotypicMultiplicities&) = default;
};

inline CharacterVector character(int d, int k, int i) {
  if (d < 1 || k < 1) throw std::invalid_argument("need d, k >= 1");
  if (i < 0) throw std::invalid_argument("negative degree");
  CharacterVector chi;
  auto outside = [&](int a, int b, int c) { return !monomial_ci_membership(Monomial{a, b, c}, d, k); };
  for (int a = 0; a <= i; ++a)
    for (int b = 0; a + b <= i; ++b) chi.e += outside(a, b, i - a - b);
  for (int a = 0; 2 * a <= i; ++a) chi.tau += outside(a, a, i - 2 * a);
  if (i % 3 == 0) chi.sigma = outside(i / 3, i / 3, i / 3);
  return chi;
}

inline IsotypicMultiplicities isotypic_from_character(const CharacterVector& chi) {
  const long long t = chi.e + 3 * chi.tau + 2 * chi.sigma;
  const long long s = chi.e - 3 * chi.tau + 2 * chi.sigma;
  const long long st = 2 * chi.e - 2 * chi.sigma;
  if (t % 6 || s % 6 || st % 6) throw std::logic_error("character does not decompose into integer multiplicities");
  IsotypicMultiplicities m{t / 6, s / 6, st / 6};
  if (m.trivial < 0 || m.sign < 0 || m.standard < 0) throw std::logic_error("negative multiplicity");
  return m;
}

inline IsotypicMultiplicities isotypic(int d, int k, int i) { return isotypic_from_character(character(d, k, i)); }

// ---------------------------------------------------------------------------
// Closed forms valid for dk <= i < d(k+1)

enum class Representation { Dimension, Transposition, ThreeCycle, Trivial, Sign, Standard };

inline std::string representation_name(Representation r) {
  switch (r) {
    case Representation::Dimension: return "dimension";
    case Representation::Transposition: return "transposition";
    case Representation::ThreeCycle: return "three-cycle";
    case Representation::Trivial: return "trivial";
    case Representation::Sign: return "sign";
    case Representation::Standard: return "standard";
  }
  return "?";
}

namespace detail {

inline long long floor_div(long long a, long long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

inline void check_window(int d, int k, int i) {
  if (d < 1 || k < 1) throw std::invalid_argument("need d, k >= 1");
  if (i < d * k || i >= d * (k + 1))
    throw std::invalid_argument("degree " + std::to_string(i) + " outside the window [" + std::to_string(d * k) + ", " +
                                std::to_string(d * (k + 1) - 1) + "]");
}

}  // namespace detail

/// The 3-cycle character by the congruence rule: 1 when i = 0 mod 3 and
/// k != 0 mod 3, else 0.
inline long long three_cycle_congruence_rule(int k, int i) { return (i % 3 == 0 && k % 3 != 0) ? 1 : 0; }

/// Window closed forms. The multiplicity forms take the middle term from
/// the exact 3-cycle character.
inline long long window_formulas(int d, int k, int i, Representation rep) {
  detail::check_window(d, k, i);
  const long long dim =
      static_cast<long long>(binomial(i + 2, 2) - binomial(k + 2, 2) * binomial(i - static_cast<long long>(d) * k + 2, 2));
  const long long tau = detail::floor_div(i + 2, 2) - detail::floor_div(k + 2, 2) * detail::floor_div(i - d * k + 2, 2);
  switch (rep) {
    case Representation::Dimension: return dim;
    case Representation::Transposition: return tau;
    case Representation::ThreeCycle: return character(d, k, i).sigma;
    default: break;
  }
  const long long m = 2 * character(d, k, i).sigma;
  long long num = 0;
  switch (rep) {
    case Representation::Trivial: num = dim + m + 3 * tau; break;
    case Representation::Sign: num = dim + m - 3 * tau; break;
    case Representation::Standard: num = 2 * dim - m; break;
    default: break;
  }
  if (num % 6) throw std::logic_error("window formula is not an integer");
  return num / 6;
}

// ---------------------------------------------------------------------------

struct IsotypicDelta {
  long long hilbert = 0;  // dim A_{i+1} - dim A_i
  long long trivial = 0, sign = 0, standard = 0;
};

inline IsotypicDelta isotypic_delta(int d, int k, int i) {
  const auto a = character(d, k, i), b = character(d, k, i + 1);
  const auto ma = isotypic_from_character(a), mb = isotypic_from_character(b);
  return {b.e - a.e, mb.trivial - ma.trivial, mb.sign - ma.sign, mb.standard - ma.standard};
}

struct SchurObstruction {
  NecessityCase which;
  int from_degree = 0;  // dk + 2l - 1
  int to_degree = 0;    // dk + 2l
  IsotypicDelta delta;
  bool obstruction = false;
  std::string component;  // isotypic component that blocks maximal rank
};

/// x L is equivariant, so maximal rank forces each isotypic block to be
/// injective (dimension grows) or surjective (dimension shrinks).
inline std::string blocking_component(const IsotypicDelta& dl) {
  auto opposes = [&](long long c) {
    if (dl.hilbert > 0) return c < 0;
    if (dl.hilbert < 0) return c > 0;
    return c != 0;
  };
  if (opposes(dl.trivial)) return "trivial";
  if (opposes(dl.sign)) return "sign";
  if (opposes(dl.standard)) return "standard";
  return "";
}

inline SchurObstruction schur_obstruction(int d, int k) {
  const auto nc = necessity_case(d, k);
  if (!nc) throw std::invalid_argument("no failure case applies to (d,k) = (" + std::to_string(d) + "," +
                                       std::to_string(k) + ")");
  SchurObstruction s;
  s.which = *nc;
  s.from_degree = d * k + 2 * nc->ell - 1;
  s.to_degree = s.from_degree + 1;
  s.delta = isotypic_delta(d, k, s.from_degree);
  s.component = blocking_component(s.delta);
  s.obstruction = !s.component.empty();
  return s;
}

/// First degree i in [dk, d(k+2)) where dim A_{i+1} - dim A_i < 0, for the
/// whole algebra and for each isotypic component.
struct TurningPoints {
  int hilbert = -1, trivial = -1, sign = -1, standard = -1;
};

inline TurningPoints isotypic_turning_points(int d, int k) {
  TurningPoints t;
  for (int i = d * k; i < d * (k + 2); ++i) {
    const auto dl = isotypic_delta(d, k, i);
    if (t.hilbert < 0 && dl.hilbert < 0) t.hilbert = i;
    if (t.trivial < 0 && dl.trivial < 0) t.trivial = i;
    if (t.sign < 0 && dl.sign < 0) t.sign = i;
    if (t.standard < 0 && dl.standard < 0) t.standard = i;
  }
  return t;
}

/// 2 * eps in d = (2l+1)(k+3)/2 + eps, for the l that puts the turning point
/// closest; used to locate the cases outside the proven list.
inline int nearest_eps2(int d, int k, int& ell_out) {
  int best = 1 << 30;
  ell_out = 0;
  for (int l = 1; (2 * l + 1) * (k + 3) <= 2 * d + 8; ++l) {
    const int e2 = 2 * d - (2 * l + 1) * (k + 3);
    if (std::abs(e2) < std::abs(best)) {
      best = e2;
      ell_out = l;
    }
  }
  return best;
}

inline json isotypic_report_json(int d, int k, int from, int to) {
  json rows = json::array();
  for (int i = from; i <= to; ++i) {
    const auto chi = character(d, k, i);
    const auto m = isotypic_from_character(chi);
    rows.push_back(json{{"i", i}, {"chi", {chi.e, chi.tau, chi.sigma}}, {"mult", {m.trivial, m.sign, m.standard}}});
  }
  json obstruction = nullptr;
  if (auto nc = necessity_case(d, k)) {
    const auto s = schur_obstruction(d, k);
    obstruction = json{{"case", nc->which},
                       {"j", nc->j},
                       {"l", nc->ell},
                       {"eps2", nc->eps2},
                       {"degrees", {s.from_degree, s.to_degree}},
                       {"delta", {{"hilbert", s.delta.hilbert},
                                  {"trivial", s.delta.trivial},
                                  {"sign", s.delta.sign},
                                  {"standard", s.delta.standard}}},
                       {"obstruction", s.obstruction},
                       {"component", s.component}};
  }
  const auto tp = isotypic_turning_points(d, k);
  return json{{"schema", 1},
              {"d", d},
              {"k", k},
              {"rows", rows},
              {"obstruction", obstruction},
              {"turning_points",
               {{"hilbert", tp.hilbert}, {"trivial", tp.trivial}, {"sign", tp.sign}, {"standard", tp.standard}}}};
}

}  // namespace idealpower
