#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "symred/errors.hpp"
#include "symred/parser.hpp"
#include "symred/symmetric.hpp"

using namespace symred;

namespace {

MultiPoly P(const std::string& s, std::size_t n) { return parse_polynomial(s, n); }

// Orbit sum of a monomial over all coordinate permutations.
MultiPoly orbit_sum(std::vector<std::uint32_t> exps) {
  std::sort(exps.begin(), exps.end());
  MultiPoly f(exps.size());
  do {
    f.add_term(Monomial(exps), 1);
  } while (std::next_permutation(exps.begin(), exps.end()));
  return f;
}

MultiPoly random_symmetric(oracle::Rng& rng, std::size_t n, unsigned max_deg) {
  MultiPoly f(n);
  const int count = static_cast<int>(rng.integer(1, 4));
  for (int k = 0; k < count; ++k) {
    std::vector<std::uint32_t> e(n, 0);
    unsigned budget = static_cast<unsigned>(rng.integer(0, max_deg));
    for (std::size_t i = 0; i < n && budget > 0; ++i) {
      const auto take = static_cast<unsigned>(rng.integer(0, budget));
      e[i] = take;
      budget -= take;
    }
    f += orbit_sum(e) * rng.rational(-5, 5, 3);
  }
  return f;
}

}  // namespace

TEST_CASE("is_symmetric examples") {
  CHECK(is_symmetric(P("x1^2 + x2^2", 2)));
  CHECK_FALSE(is_symmetric(P("x1 - x2", 2)));
  CHECK(is_symmetric(elementary_symmetric(2, 3)));
  CHECK_FALSE(is_symmetric(P("x1*x2 + x3", 3)));
  CHECK(is_symmetric(P("7", 4)));
}

TEST_CASE("elementary and power sums") {
  CHECK(elementary_symmetric(1, 3) == P("x1 + x2 + x3", 3));
  CHECK(elementary_symmetric(3, 3) == P("x1*x2*x3", 3));
  CHECK(elementary_symmetric(2, 4).num_terms() == 6);
  CHECK(power_sum(1, 2) == P("x1 + x2", 2));
  CHECK(power_sum(2, 3) == P("x1^2 + x2^2 + x3^2", 3));
  CHECK(power_sum(4, 2) == P("x1^4 + x2^4", 2));
  CHECK_THROWS_AS(elementary_symmetric(0, 3), DomainError);
  CHECK_THROWS_AS(elementary_symmetric(4, 3), DomainError);
  CHECK_THROWS_AS(power_sum(0, 3), DomainError);
}

TEST_CASE("elementary_symmetric matches subset enumeration") {
  oracle::Rng rng(3);
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<Rational> x(n);
    for (auto& v : x) v = rng.rational(-4, 4, 5);
    for (unsigned k = 1; k <= n; ++k) CHECK(elementary_symmetric(k, n).evaluate(x) == oracle::elementary_by_subsets(k, x));
  }
}

TEST_CASE("newton_convert examples") {
  const std::size_t n = 3;
  std::vector<MultiPoly> e{elementary_symmetric(1, n)};
  auto p = newton_convert<MultiPoly>(NewtonDirection::p_from_e, e, 1, n, MultiPoly::constant(n, 1));
  CHECK(p[0] == e[0]);

  std::vector<MultiPoly> ps{power_sum(1, n), power_sum(2, n), power_sum(3, n)};
  auto es = newton_convert<MultiPoly>(NewtonDirection::e_from_p, ps, 3, n, MultiPoly::constant(n, 1));
  CHECK(es[1] == (ps[0] * ps[0] - ps[1]) * make_rational(1, 2));
  CHECK(es[2] == (ps[0].pow(3) - Rational(3) * ps[0] * ps[1] + Rational(2) * ps[2]) * make_rational(1, 6));
  for (unsigned k = 1; k <= 3; ++k) CHECK(es[k - 1] == elementary_symmetric(k, n));
}

TEST_CASE("newton identities on numbers, both directions") {
  oracle::Rng rng(8);
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<Rational> x(n);
    for (auto& v : x) v = rng.rational(-3, 3, 4);
    std::vector<Rational> e, p;
    for (unsigned k = 1; k <= n; ++k) e.push_back(oracle::elementary_by_subsets(k, x));
    for (unsigned k = 1; k <= n + 2; ++k) p.push_back(oracle::power_sum_of(k, x));
    CHECK(newton_convert<Rational>(NewtonDirection::p_from_e, e, n + 2, n, Rational(1)) == p);
    const std::vector<Rational> p_head(p.begin(), p.begin() + n);
    CHECK(newton_convert<Rational>(NewtonDirection::e_from_p, p_head, n, n, Rational(1)) == e);
  }
}

TEST_CASE("decompose examples") {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto g = decompose_to_elementary(power_sum(1, n));
    CHECK(g.inner == MultiPoly::variable(n, 0));
  }
  CHECK(decompose_to_elementary(power_sum(2, 3)).inner == P("x1^2 - 2*x2", 3));
  CHECK(decompose_to_elementary(power_sum(3, 3)).inner == P("x1^3 - 3*x1*x2 + 3*x3", 3));
  CHECK(decompose_to_elementary(power_sum(2, 2)).inner == P("x1^2 - 2*x2", 2));
  // n = 2: p_3 has no z_3
  CHECK(decompose_to_elementary(power_sum(3, 2)).inner == P("x1^3 - 3*x1*x2", 2));
  CHECK_THROWS_AS(decompose_to_elementary(P("x1 - x2", 2)), SymmetryError);
}

TEST_CASE("decompose round trip on orbit sums") {
  oracle::Rng rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(1, 4));
    const MultiPoly f = random_symmetric(rng, n, 5);
    std::size_t steps = 0;
    const GPoly g = decompose_to_elementary(f, steps);
    CHECK_NOTHROW(g.check_invariants());
    CHECK(g.weighted_degree() <= g.source_degree);
    CHECK(expand_elementary(g) == f);
    // independent expansion check at a random point
    std::vector<Rational> x(n);
    for (auto& v : x) v = rng.rational(-3, 3, 3);
    std::vector<Rational> z;
    for (unsigned k = 1; k <= n; ++k) z.push_back(oracle::elementary_by_subsets(k, x));
    CHECK(g.inner.evaluate(z) == oracle::eval(f, x));
  }
}

TEST_CASE("structural_split examples") {
  auto s2 = structural_split(decompose_to_elementary(power_sum(2, 3)));
  CHECK(s2.g1.inner == P("x1^2", 3));
  REQUIRE(s2.tail.size() == 1);
  CHECK(s2.tail.at(2).inner == P("-2", 3));

  auto s3 = structural_split(decompose_to_elementary(power_sum(3, 3)));
  CHECK(s3.g1.inner == P("x1^3", 3));
  REQUIRE(s3.tail.size() == 2);
  CHECK(s3.tail.at(2).inner == P("-3*x1", 3));
  CHECK(s3.tail.at(3).inner == P("3", 3));

  GPoly g{P("x2^2", 4), 4, 4};
  auto s4 = structural_split(g);
  CHECK(s4.g1.inner == g.inner);
  CHECK(s4.tail.empty());
}

TEST_CASE("structural_split reassembles and respects index bounds") {
  oracle::Rng rng(34);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(2, 5));
    const GPoly g = decompose_to_elementary(random_symmetric(rng, n, 6));
    const auto split = structural_split(g);
    CHECK(split.reassemble().inner == g.inner);
    const std::size_t k = g.source_degree / 2;
    for (const auto& [m, c] : split.g1.inner.terms()) {
      for (std::size_t j = k; j < n; ++j) CHECK(m[j] == 0);
    }
    for (const auto& [i, part] : split.tail) {
      CHECK(i > k);
      for (const auto& [m, c] : part.inner.terms()) {
        for (std::size_t j = g.source_degree - i; j < n; ++j) CHECK(m[j] == 0);
      }
    }
  }
}
