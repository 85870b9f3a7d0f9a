#include <catch_amalgamated.hpp>

#include "idealpower/hilbert.hpp"
#include "idealpower/ideal.hpp"

using namespace idealpower;
using P = GradedPoly<BigInt>;

namespace {

// Divisible by some product of k generators, by plain recursion on the
// remaining exponent vector.
bool divisible_by_k_products(std::vector<int> e, const std::vector<std::vector<int>>& gens, int k, std::size_t start = 0) {
  if (k == 0) return true;
  for (std::size_t g = start; g < gens.size(); ++g) {
    bool fits = true;
    for (std::size_t i = 0; i < e.size(); ++i) fits = fits && e[i] >= gens[g][i];
    if (!fits) continue;
    auto rest = e;
    for (std::size_t i = 0; i < e.size(); ++i) rest[i] -= gens[g][i];
    if (divisible_by_k_products(rest, gens, k - 1, g)) return true;
  }
  return false;
}

std::vector<std::vector<int>> ci_gens(std::size_t n, int d) {
  std::vector<std::vector<int>> g;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = d;
    g.push_back(e);
  }
  return g;
}

}  // namespace

TEST_CASE("generator families") {
  const auto ci = integer_generators(monomial_ci_spec(3, 2, 1));
  REQUIRE(ci.size() == 3);
  CHECK(ci[0] == P::monomial({2, 0, 0}, 1));
  CHECK(ci[2] == P::monomial({0, 0, 2}, 1));
  const auto pl = integer_generators(powers_of_linear_spec(2, 3, 1));
  REQUIRE(pl.size() == 3);
  CHECK(pl[2] == parse_poly("x^3+3x^2y+3xy^2+y^3", {"x", "y"}));
  const auto w = integer_generators(cubic_witness_spec(1));
  REQUIRE(w.size() == 4);
  CHECK(w[3] == parse_poly("x^2y+11xy^2-50x^2z+48xyz-29y^2z-9xz^2+30yz^2", {"x", "y", "z"}));
  CHECK(cubic_witness_spec(1).prime == 101);
}

TEST_CASE("general random generators are deterministic and seed dependent") {
  const auto a = make_generators(general_spec(3, 2, 1, 7));
  const auto b = make_generators(general_spec(3, 2, 1, 7));
  const auto c = make_generators(general_spec(3, 2, 1, 8));
  REQUIRE(a.size() == 4);
  CHECK(a == b);
  CHECK_FALSE(a == c);
  for (const auto& g : a) CHECK(g.degree() == 2);
}

TEST_CASE("spec validation") {
  CHECK_THROWS(general_spec(2, 2, 1, 1, 32002));
  CHECK_THROWS(general_spec(2, 2, 1, 1, 97));
  IdealSpec s = monomial_ci_spec(2, 2, 1);
  s.r = 3;
  CHECK_THROWS(s.validate());
  CHECK_THROWS(explicit_spec({P::monomial({2, 0}, 1), P::monomial({0, 3}, 1)}, 1));
}

TEST_CASE("spec JSON round trip") {
  for (const auto& s : {general_spec(3, 2, 4, 5), monomial_ci_spec(4, 3, 2), powers_of_linear_spec(2, 4, 3),
                        cubic_witness_spec(2)}) {
    const auto t = spec_from_json(spec_to_json(s));
    CHECK(spec_to_json(t) == spec_to_json(s));
    CHECK(t.generators == s.generators);
  }
}

TEST_CASE("power generator counts") {
  const auto g3 = make_generators(general_spec(2, 2, 1, 1, kDefaultPrime, 3));
  CHECK(power_generators(g3, 2).products.size() == 6);
  const auto g4 = make_generators(general_spec(3, 2, 1));
  CHECK(power_generators(g4, 3).products.size() == 20);
  for (int r = 1; r <= 5; ++r)
    for (int k = 0; k <= 4; ++k) {
      const auto g = make_generators(general_spec(2, 1, 1, 1, kDefaultPrime, r));
      REQUIRE(BigInt(power_generators(g, k).products.size()) == binomial(k + r - 1, r - 1));
    }
  const auto sq = power_generators(integer_generators(monomial_ci_spec(2, 2, 1)), 2);
  REQUIRE(sq.products.size() == 3);
  CHECK(sq.products[0] == P::monomial({4, 0}, 1));
  CHECK(sq.products[1] == P::monomial({2, 2}, 1));
  CHECK(sq.products[2] == P::monomial({0, 4}, 1));
}

TEST_CASE("complete intersection membership examples") {
  CHECK(monomial_ci_membership(Monomial{4, 0, 0}, 2, 2));
  CHECK_FALSE(monomial_ci_membership(Monomial{2, 1, 1}, 2, 2));
  CHECK_FALSE(monomial_ci_membership(Monomial{3, 3}, 2, 3));
  CHECK_FALSE(divisible_by_k_products({3, 3}, ci_gens(2, 2), 3));
  CHECK_FALSE(divisible_by_k_products({2, 1, 1}, ci_gens(3, 2), 2));
}

TEST_CASE("membership fast path agrees with divisibility") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (int d = 1; d <= 4; ++d)
      for (int k = 1; k <= 4; ++k) {
        const int top = n == 4 ? std::min(3 * d * k, 14) : 3 * d * k;
        std::vector<Monomial> gens;
        for (const auto& g : ci_gens(n, d)) gens.emplace_back(g);
        for (int i = 0; i <= top; ++i) {
          const DegreeBasis basis(n, i);
          for (const auto& m : basis.monomials()) {
            const bool want = divisible_by_k_products(m.exponents(), ci_gens(n, d), k);
            REQUIRE(monomial_ci_membership(m, d, k) == want);
            REQUIRE(monomial_power_membership(m, gens, k) == want);
          }
        }
      }
}

TEST_CASE("membership in powers of (x^d, y^d, x^{d-1}y)") {
  for (int d = 2; d <= 5; ++d) {
    const std::vector<std::vector<int>> g{{d, 0}, {0, d}, {d - 1, 1}};
    const std::vector<Monomial> gm{Monomial{d, 0}, Monomial{0, d}, Monomial{d - 1, 1}};
    CHECK(monomial_power_membership(Monomial{2 * d, 0}, gm, 2));
    CHECK(monomial_power_membership(Monomial{1, 2 * d - 1}, gm, 2) == divisible_by_k_products({1, 2 * d - 1}, g, 2));
    for (int k = 1; k <= 4; ++k)
      for (int i = 0; i <= d * k + 2 * d; ++i) {
        const DegreeBasis basis(2, i);
        for (const auto& m : basis.monomials()) {
          const bool want = divisible_by_k_products(m.exponents(), g, k);
          REQUIRE(monomial_power_membership(m, gm, k) == want);
          if (i < d * k) REQUIRE_FALSE(want);
        }
      }
  }
  CHECK_THROWS(as_monomials(std::vector<P>{parse_poly("x+y", {"x", "y"})}));
}

TEST_CASE("minimal generator counts") {
  CHECK(minimal_generator_count(general_spec(2, 3, 3)) == 9);
  CHECK(minimal_generator_count(general_spec(2, 2, 2)) == 5);
  CHECK(minimal_generator_count(monomial_ci_spec(2, 2, 1)) == 2);
  for (int d = 3; d <= 5; ++d)
    for (int k = d - 2; k <= d + 1; ++k)
      CHECK(minimal_generator_count(general_spec(2, d, k)) == static_cast<std::size_t>((2 * d * k - d * d + 3 * d) / 2));
}

TEST_CASE("vanishing propagates from I^k to I^{k+1} for the quadric family") {
  for (int k = 1; k <= 5; ++k) {
    const auto a = hilbert_report(quadric_relation_spec(k));
    const int deg = std::max(a.top, 2 * (3 - 1));
    REQUIRE(a.at(deg) == 0);
    CHECK(hf_rank(quadric_relation_spec(k + 1), deg + 2, kDefaultPrime) == 0);
  }
}
