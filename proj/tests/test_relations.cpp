#include <catch_amalgamated.hpp>

#include <complex>
#include <random>

#include "idealpower/relations.hpp"

using namespace idealpower;

namespace {

using cplx = std::complex<long double>;

GradedPoly<BigInt> P(const std::string& s, std::size_t n) { return parse_poly(s, default_variable_names(n)); }

// evaluates F and the sum of |c| |x^m|, which bounds the rounding error
std::pair<cplx, long double> eval(const GradedPoly<BigInt>& F, const std::vector<cplx>& x) {
  cplx v = 0;
  long double mag = 0;
  for (const auto& [m, c] : F.terms()) {
    cplx t = static_cast<long double>(c.convert_to<double>());
    for (std::size_t i = 0; i < x.size(); ++i) t *= std::pow(x[i], m[i]);
    v += t;
    mag += std::abs(t);
  }
  return {v, mag};
}

// the defining product over all root-of-unity choices, evaluated directly
cplx product_oracle(int d, const std::vector<cplx>& x) {
  const long double pi = std::acos(-1.0L);
  const int n = static_cast<int>(x.size()) - 1;
  cplx p = 1;
  long long count = 1;
  for (int i = 0; i < n; ++i) count *= d;
  for (long long f = 0; f < count; ++f) {
    cplx s = x[0];
    long long code = f;
    for (int i = 1; i <= n; ++i) {
      s += std::polar(1.0L, 2 * pi * static_cast<long double>(code % d) / d) * x[static_cast<std::size_t>(i)];
      code /= d;
    }
    p *= s;
  }
  return p;
}

}  // namespace

TEST_CASE("two-variable forms") {
  CHECK(integer_form(build_F(2, 2)) == P("x^2-y^2", 2));
  CHECK(integer_form(build_F(2, 3)) == P("x^3+y^3", 2));
  for (int d = 1; d <= 12; ++d) {
    auto expect = P("x^" + std::to_string(d), 2);
    expect.add_term(Monomial::variable(2, 1, d), BigInt(d % 2 ? 1 : -1));
    REQUIRE(integer_form(build_F(2, d)) == expect);
  }
}

TEST_CASE("expansion agrees with the numeric product") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<long double> U(-1.1L, 1.1L);
  for (auto [nv, d] : std::vector<std::pair<std::size_t, int>>{{2, 5}, {3, 2}, {3, 3}, {3, 4}, {4, 2}, {4, 3}, {5, 2}}) {
    const auto F = integer_form(build_F(nv, d));
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<cplx> x(nv);
      for (auto& v : x) v = {U(rng), U(rng)};
      const auto [v, mag] = eval(F, x);
      REQUIRE(std::abs(v - product_oracle(d, x)) <= 1e-12L * (mag + 1));
    }
  }
}

TEST_CASE("integrality, membership, symmetry, degree") {
  for (std::size_t nv = 2; nv <= 5; ++nv)
    for (int d = 1; d <= 4; ++d) {
      if (nv == 5 && d > 2) continue;
      const auto C = build_F(nv, d);
      REQUIRE(is_integral(C));
      const auto F = integer_form(C);
      REQUIRE(BigInt(F.degree()) == ipow(d, static_cast<int>(nv) - 1));
      REQUIRE(verify_membership(F, d));
      REQUIRE(in_ci_power(F, d, static_cast<int>(ipow(d, static_cast<int>(nv) - 2))));
      if (nv >= 3) REQUIRE(verify_symmetry(F));
    }
  CHECK_THROWS_WITH(verify_symmetry(integer_form(build_F(2, 3))), Catch::Matchers::ContainsSubstring("precondition"));
  CHECK_FALSE(verify_symmetry(P("x^2+y^2", 3)));
  CHECK_FALSE(verify_membership(P("x^2+xy", 2), 2));
  CHECK_THROWS(build_F(1, 2));
}

TEST_CASE("kernel element of multiplication by the sum") {
  const auto ke = kernel_element(integer_form(build_F(2, 2)), 2);
  CHECK(ke.G == P("x-y", 2));
  CHECK(ke.power == 1);
  CHECK(ke.product_in_ideal);
  CHECK(ke.nonzero_in_T);
  for (std::size_t nv = 2; nv <= 4; ++nv)
    for (int d = 2; d <= 3; ++d) {
      const auto F = integer_form(build_F(nv, d));
      const auto k = kernel_element(F, d);
      REQUIRE(multiply(k.G, sum_of_variables(nv)) == F);
      REQUIRE(k.product_in_ideal);
      REQUIRE(k.nonzero_in_T);
    }
  CHECK_THROWS_WITH(kernel_element(P("x^2+xy", 2), 2), Catch::Matchers::ContainsSubstring("precondition"));
  CHECK_THROWS(divide_by_sum(P("x^2+y^2", 2)));
}

TEST_CASE("shifted witnesses") {
  for (auto [n, d, k] : std::vector<std::array<int, 3>>{{4, 2, 6}, {3, 3, 5}, {4, 2, 4}, {3, 2, 5}, {2, 5, 3}}) {
    const auto w = shifted_kernel_witness(n, d, k);
    REQUIRE(w.G.degree() == d * k - 1);
    REQUIRE(w.power == k);
    REQUIRE(w.product_in_ideal);
    REQUIRE(w.nonzero_in_T);
  }
  // shifting by k - d^{n-2} lands below degree dk - 1, where L is injective
  const auto lit = shifted_kernel_witness(4, 2, 6, 6 - 4);
  CHECK_FALSE(lit.product_in_ideal);
  CHECK_THROWS(shifted_kernel_witness(4, 2, 3));
}

TEST_CASE("comparison with the printed table") {
  const auto t32 = compare_example_table(3, 2);
  REQUIRE(t32.readings.size() == 1);
  CHECK(t32.readings[0].form_degree == 4);
  CHECK(t32.readings[0].conventions.size() == 2);
  CHECK(t32.match == (t32.readings[0].status == "match"));
  const auto t33 = compare_example_table(3, 3);
  REQUIRE(t33.readings.size() == 2);
  CHECK(t33.readings[0].form_degree == 9);
  CHECK(t33.readings[1].form_degree == 27);
  for (const auto& r : t33.readings) CHECK((r.status == "match" || r.status == "mismatch" || r.status == "seed-unreadable"));
  CHECK_THROWS(compare_example_table(6, 2));
  const auto j = table_comparison_json(t33, 3);
  CHECK(j["label"] == json::array({3, 3}));
  CHECK(j["readings"].size() == 2);
  for (const auto& r : j["readings"])
    for (const auto& c : r["conventions"]) CHECK(c["mismatches"].size() <= 3);
}

TEST_CASE("scalar comparison") {
  const auto F = P("2x^2+4y^2", 2);
  const auto c = compare_up_to_scalar(F, P("x^2+2y^2", 2));
  CHECK(c.match);
  CHECK(c.num * 1 == c.den * 2);
  const auto m = compare_up_to_scalar(F, P("x^2+3y^2", 2));
  CHECK_FALSE(m.match);
  CHECK(m.mismatches.size() == 1);
  CHECK(symmetrize_distinct(P("x^2", 3)) == P("x^2+y^2+z^2", 3));
  CHECK(symmetrize(P("x^2", 3)) == P("2x^2+2y^2+2z^2", 3));
}
