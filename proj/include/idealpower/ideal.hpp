#pragma once

/// @file ideal.hpp
/// @brief Equigenerated ideal families, generators of their powers, and
/// membership tests for powers of monomial ideals.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "exact.hpp"
#include "graded_poly.hpp"
#include "monomial.hpp"
#include "rank.hpp"
#include "serialize.hpp"

namespace idealpower {

enum class Family { GeneralRandom, PowersOfLinear, MonomialCI, Explicit };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::GeneralRandom: return "general";
    case Family::PowersOfLinear: return "powers-of-linear";
    case Family::MonomialCI: return "monomial-ci";
    case Family::Explicit: return "explicit";
  }
  throw std::logic_error("unknown family");
}

inline Family parse_family(const std::string& s) {
  if (s == "general") return Family::GeneralRandom;
  if (s == "powers-of-linear") return Family::PowersOfLinear;
  if (s == "monomial-ci") return Family::MonomialCI;
  if (s == "explicit") return Family::Explicit;
  throw std::invalid_argument("unknown family '" + s + "'");
}

inline constexpr std::uint64_t kDefaultPrime = 32003;
inline constexpr std::uint64_t kWitnessPrime = 101;

/// Coefficient stream used for GeneralRandom instances. Changing how
/// coefficients are drawn must bump this tag.
inline constexpr const char* kGeneralRandomScheme = "mt19937_64/seed_seq(seed,n,d,index)/rejection/v1";

/// Describes I = (f_1..f_r), all forms of degree d in n variables, and the
/// power k of interest.
struct IdealSpec {
  int n = 1;
  int d = 1;
  int r = 1;
  int k = 1;
  Family family = Family::MonomialCI;
  std::uint64_t seed = 0;
  std::uint64_t prime = kDefaultPrime;
  std::vector<GradedPoly<BigInt>> generators;  // Explicit only

  void validate() const {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    if (d < 1) throw std::invalid_argument("need d >= 1");
    if (k < 0) throw std::invalid_argument("need k >= 0");
    if (!is_prime(prime)) throw std::invalid_argument(std::to_string(prime) + " is not prime");
    switch (family) {
      case Family::GeneralRandom:
        if (prime < 101) throw std::invalid_argument("general random instances need a prime >= 101");
        if (r < 1) throw std::invalid_argument("need r >= 1");
        break;
      case Family::PowersOfLinear:
        if (r != n + 1) throw std::invalid_argument("powers-of-linear has r = n+1");
        break;
      case Family::MonomialCI:
        if (r != n) throw std::invalid_argument("monomial-ci has r = n");
        break;
      case Family::Explicit:
        if (static_cast<int>(generators.size()) != r) throw std::invalid_argument("r must equal the generator count");
        for (const auto& g : generators) {
          if (g.nvars() != static_cast<std::size_t>(n)) throw std::invalid_argument("generator in wrong ring");
          if (g.is_zero() || g.degree() != d) throw std::invalid_argument("generators must be nonzero forms of degree d");
        }
        break;
    }
  }

  IdealSpec with_power(int power) const {
    IdealSpec s = *this;
    s.k = power;
    return s;
  }
};

inline IdealSpec general_spec(int n, int d, int k, std::uint64_t seed = 1, std::uint64_t prime = kDefaultPrime,
                              int r = -1) {
  IdealSpec s;
  s.n = n;
  s.d = d;
  s.r = r < 0 ? n + 1 : r;
  s.k = k;
  s.family = Family::GeneralRandom;
  s.seed = seed;
  s.prime = prime;
  s.validate();
  return s;
}

inline IdealSpec monomial_ci_spec(int n, int d, int k) {
  IdealSpec s;
  s.n = n;
  s.d = d;
  s.r = n;
  s.k = k;
  s.family = Family::MonomialCI;
  return s;
}

inline IdealSpec powers_of_linear_spec(int n, int d, int k, std::uint64_t prime = kDefaultPrime) {
  IdealSpec s;
  s.n = n;
  s.d = d;
  s.r = n + 1;
  s.k = k;
  s.family = Family::PowersOfLinear;
  s.prime = prime;
  return s;
}

inline IdealSpec explicit_spec(std::vector<GradedPoly<BigInt>> gens, int k, std::uint64_t prime = kDefaultPrime) {
  if (gens.empty()) throw std::invalid_argument("explicit ideal needs generators");
  IdealSpec s;
  s.n = static_cast<int>(gens.front().nvars());
  s.d = gens.front().degree();
  s.r = static_cast<int>(gens.size());
  s.k = k;
  s.family = Family::Explicit;
  s.prime = prime;
  s.generators = std::move(gens);
  s.validate();
  return s;
}

/// (x^3, y^3, z^3, x^2y+11xy^2-50x^2z+48xyz-29y^2z-9xz^2+30yz^2) over Z/101.
inline IdealSpec cubic_witness_spec(int k) {
  const std::vector<std::string> v{"x", "y", "z"};
  return explicit_spec({parse_poly("x^3", v), parse_poly("y^3", v), parse_poly("z^3", v),
                        parse_poly("x^2y+11xy^2-50x^2z+48xyz-29y^2z-9xz^2+30yz^2", v)},
                       k, kWitnessPrime);
}

/// (x^2, y^2, z^2, xy+xz+yz), the quadric analogue whose powers realise the
/// generic series in three variables.
inline IdealSpec quadric_relation_spec(int k, std::uint64_t prime = kDefaultPrime) {
  const std::vector<std::string> v{"x", "y", "z"};
  return explicit_spec({parse_poly("x^2", v), parse_poly("y^2", v), parse_poly("z^2", v), parse_poly("xy+xz+yz", v)},
                       k, prime);
}

/// (x^d, y^d, x^{d-1}y).
inline IdealSpec leading_binomial_spec(int d, int k) {
  return explicit_spec({GradedPoly<BigInt>::monomial({d, 0}, 1), GradedPoly<BigInt>::monomial({0, d}, 1),
                        GradedPoly<BigInt>::monomial({d - 1, 1}, 1)},
                       k);
}

/// (x^d, y^d, x^{d-1}y + xy^{d-1}).
inline IdealSpec symmetric_binomial_spec(int d, int k, std::uint64_t prime = kDefaultPrime) {
  GradedPoly<BigInt> mixed = GradedPoly<BigInt>::monomial({d - 1, 1}, 1);
  mixed.add_term(Monomial{1, d - 1}, 1);
  return explicit_spec({GradedPoly<BigInt>::monomial({d, 0}, 1), GradedPoly<BigInt>::monomial({0, d}, 1), mixed}, k,
                       prime);
}

namespace detail {

inline std::uint64_t draw_uniform(std::mt19937_64& rng, std::uint64_t p) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % p;
  for (;;) {
    std::uint64_t x = rng();
    if (x < limit) return x % p;
  }
}

}  // namespace detail

/// Integer generators of the non-random families.
inline std::vector<GradedPoly<BigInt>> integer_generators(const IdealSpec& spec) {
  spec.validate();
  const auto n = static_cast<std::size_t>(spec.n);
  std::vector<GradedPoly<BigInt>> gens;
  switch (spec.family) {
    case Family::GeneralRandom:
      throw std::invalid_argument("general random generators only exist over a prime field");
    case Family::Explicit:
      return spec.generators;
    case Family::MonomialCI:
    case Family::PowersOfLinear:
      for (std::size_t i = 0; i < n; ++i) gens.push_back(GradedPoly<BigInt>::monomial(Monomial::variable(n, i, spec.d), 1));
      if (spec.family == Family::PowersOfLinear)
        gens.push_back(power(GradedPoly<BigInt>::linear_form(std::vector<BigInt>(n, 1)), spec.d, BigInt(1)));
      return gens;
  }
  throw std::logic_error("unknown family");
}

/// The r generators over Z/spec.prime. GeneralRandom draws every coefficient
/// uniformly from the field with a stream seeded by (seed, n, d, index).
inline std::vector<GradedPoly<PrimeFieldElement>> make_generators(const IdealSpec& spec) {
  spec.validate();
  if (spec.family != Family::GeneralRandom) {
    std::vector<GradedPoly<PrimeFieldElement>> out;
    for (const auto& g : integer_generators(spec)) out.push_back(reduce_mod(g, spec.prime));
    return out;
  }
  const DegreeBasis basis(static_cast<std::size_t>(spec.n), spec.d);
  std::vector<GradedPoly<PrimeFieldElement>> out;
  for (int idx = 0; idx < spec.r; ++idx) {
    std::seed_seq seq{static_cast<std::uint32_t>(spec.seed & 0xffffffffu), static_cast<std::uint32_t>(spec.seed >> 32),
                      static_cast<std::uint32_t>(spec.n), static_cast<std::uint32_t>(spec.d),
                      static_cast<std::uint32_t>(idx)};
    std::mt19937_64 rng(seq);
    GradedPoly<PrimeFieldElement> g(static_cast<std::size_t>(spec.n));
    for (const auto& m : basis.monomials())
      g.add_term(m, PrimeFieldElement(static_cast<long long>(detail::draw_uniform(rng, spec.prime)), spec.prime));
    out.push_back(std::move(g));
  }
  return out;
}

/// Products of all k-multisets of generators.
template <Coefficient C>
struct PowerGeneratorSet {
  std::vector<GradedPoly<C>> products;
  std::vector<std::vector<int>> multisets;  // nondecreasing generator indices
};

template <Coefficient C>
PowerGeneratorSet<C> power_generators(const std::vector<GradedPoly<C>>& gens, int k) {
  if (k < 0) throw std::invalid_argument("need k >= 0");
  if (gens.empty()) throw std::invalid_argument("need at least one generator");
  PowerGeneratorSet<C> out;
  const C one = CoefficientTraits<C>::one_like(gens.front().terms().begin()->second);
  std::vector<int> current;
  std::vector<GradedPoly<C>> prefix{GradedPoly<C>::constant(gens.front().nvars(), one)};
  // depth-first over nondecreasing index sequences, sharing prefix products
  auto recurse = [&](auto&& self, int start) -> void {
    if (static_cast<int>(current.size()) == k) {
      out.products.push_back(prefix.back());
      out.multisets.push_back(current);
      return;
    }
    for (int g = start; g < static_cast<int>(gens.size()); ++g) {
      current.push_back(g);
      prefix.push_back(multiply(prefix.back(), gens[static_cast<std::size_t>(g)]));
      self(self, g);
      prefix.pop_back();
      current.pop_back();
    }
  };
  recurse(recurse, 0);
  return out;
}

/// m in (x_1^d, ..., x_n^d)^k  <=>  sum_i floor(e_i / d) >= k.
inline bool monomial_ci_membership(const Monomial& m, int d, int k) {
  if (k <= 0 || d <= 0) return true;
  long long total = 0;
  for (Exponent e : m.exponents()) total += e / d;
  return total >= k;
}

namespace detail {

inline std::vector<Monomial> minimize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return grevlex_compare(a, b) < 0; });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> minimal;
  for (const auto& g : gens) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const Monomial& h) { return h.divides(g); });
    if (!redundant) minimal.push_back(g);
  }
  return minimal;
}

inline std::vector<Monomial> power_products(const std::vector<Monomial>& gens, int k) {
  std::vector<Monomial> out;
  Monomial acc(gens.front().nvars());
  auto recurse = [&](auto&& self, int start, int left, const Monomial& cur) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int g = start; g < static_cast<int>(gens.size()); ++g) self(self, g, left - 1, cur * gens[static_cast<std::size_t>(g)]);
  };
  recurse(recurse, 0, k, acc);
  return out;
}

}  // namespace detail

/// Memoised minimal generating sets of powers of monomial ideals. Entries
/// are computed once under the lock and never mutated afterwards.
class MonomialPowerCache {
 public:
  std::shared_ptr<const std::vector<Monomial>> minimal_generators(const std::vector<Monomial>& gens, int k) {
    std::vector<std::vector<Exponent>> key_gens;
    for (const auto& g : gens) key_gens.push_back(g.exponents());
    std::sort(key_gens.begin(), key_gens.end());
    Key key{std::move(key_gens), k};
    std::lock_guard lock(mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    auto value = std::make_shared<const std::vector<Monomial>>(detail::minimize(detail::power_products(gens, k)));
    cache_.emplace(std::move(key), value);
    return value;
  }

  static MonomialPowerCache& global() {
    static MonomialPowerCache instance;
    return instance;
  }

 private:
  using Key = std::pair<std::vector<std::vector<Exponent>>, int>;
  std::mutex mutex_;
  std::map<Key, std::shared_ptr<const std::vector<Monomial>>> cache_;
};

/// m divisible by some product of a k-multiset of the monomial generators.
inline bool monomial_power_membership(const Monomial& m, const std::vector<Monomial>& gens, int k) {
  if (k <= 0) return true;
  if (gens.empty()) return false;
  const int gen_degree = gens.front().degree();
  if (m.degree() < gen_degree * k &&
      std::all_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.degree() == gen_degree; }))
    return false;
  auto minimal = MonomialPowerCache::global().minimal_generators(gens, k);
  return std::any_of(minimal->begin(), minimal->end(), [&](const Monomial& g) { return g.divides(m); });
}

template <Coefficient C>
std::vector<Monomial> as_monomials(const std::vector<GradedPoly<C>>& gens) {
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    if (g.size() != 1) throw std::invalid_argument("non-monomial generator: " + g.to_string());
    out.push_back(g.terms().begin()->first);
  }
  return out;
}

template <Coefficient C>
bool monomial_power_membership(const Monomial& m, const std::vector<GradedPoly<C>>& gens, int k) {
  return monomial_power_membership(m, as_monomials(gens), k);
}

inline bool is_monomial_spec(const IdealSpec& spec) {
  if (spec.family == Family::MonomialCI) return true;
  if (spec.family != Family::Explicit) return false;
  return std::all_of(spec.generators.begin(), spec.generators.end(), [](const auto& g) { return g.size() == 1; });
}

/// Sparse coefficient row of a polynomial in a degree basis, over Z/p.
inline ModularEchelon::SparseRow to_row(const GradedPoly<PrimeFieldElement>& p, const DegreeBasis& basis) {
  ModularEchelon::SparseRow row;
  row.reserve(p.size());
  for (const auto& [m, c] : p.terms())
    row.emplace_back(static_cast<std::uint32_t>(basis.index_of(m)), static_cast<std::uint32_t>(c.residue()));
  return row;
}

/// Number of minimal generators of I^k: the rank of the k-fold products in
/// degree dk.
inline std::size_t minimal_generator_count(const IdealSpec& spec) {
  spec.validate();
  const auto gens = make_generators(spec);
  const auto set = power_generators(gens, spec.k);
  const DegreeBasis basis(static_cast<std::size_t>(spec.n), spec.d * spec.k);
  ModularEchelon e(basis.size(), spec.prime);
  for (const auto& p : set.products) e.insert(to_row(p, basis));
  return e.rank();
}

// JSON form of IdealSpec; doubles as the cache key.
inline json spec_to_json(const IdealSpec& s) {
  json j{{"n", s.n}, {"d", s.d}, {"r", s.r}, {"k", s.k}, {"family", family_name(s.family)},
         {"seed", s.seed}, {"prime", s.prime}};
  if (s.family == Family::Explicit) {
    json gens = json::array();
    for (const auto& g : s.generators) gens.push_back(poly_to_json(g));
    j["generators"] = std::move(gens);
  }
  return j;
}

inline IdealSpec spec_from_json(const json& j) {
  IdealSpec s;
  s.n = j.at("n").get<int>();
  s.d = j.at("d").get<int>();
  s.k = j.at("k").get<int>();
  s.family = parse_family(j.at("family").get<std::string>());
  s.seed = j.value("seed", std::uint64_t{0});
  s.prime = j.value("prime", kDefaultPrime);
  if (j.contains("generators"))
    for (const auto& g : j.at("generators")) s.generators.push_back(poly_from_json(g, static_cast<std::size_t>(s.n)));
  const int default_r = s.family == Family::MonomialCI ? s.n
                        : s.family == Family::Explicit ? static_cast<int>(s.generators.size())
                                                       : s.n + 1;
  s.r = j.value("r", default_r);
  s.validate();
  return s;
}

}  // namespace idealpower
