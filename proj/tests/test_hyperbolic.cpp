#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "symred/errors.hpp"
#include "symred/hyperbolic.hpp"
#include "symred/sym_matrix.hpp"

using namespace symred;

namespace {

UniPoly lf(std::vector<Rational> c) { return UniPoly::from_leading_first(c); }

struct Built {
  UniPoly f;
  int distinct = 0;
  int distinct_real = 0;
};

// Product of rational linear factors and irreducible quadratics t^2 + b t + c.
Built random_built(oracle::Rng& rng, unsigned max_deg, bool allow_complex) {
  std::vector<Rational> coeffs{1};
  std::set<Rational> roots;
  std::set<std::pair<Rational, Rational>> quads;
  unsigned deg = 0;
  const unsigned target = static_cast<unsigned>(rng.integer(1, max_deg));
  while (deg < target) {
    if (allow_complex && deg + 2 <= target && rng.integer(0, 3) == 0) {
      const Rational b = rng.integer(-3, 3);
      const Rational c = b * b / 4 + rng.rational(1, 4, 3);
      coeffs = oracle::multiply(coeffs, {1, b, c});
      quads.insert({b, c});
      deg += 2;
    } else {
      Rational r = roots.empty() || rng.coin() ? rng.rational(-4, 4, 3) : *roots.begin();
      coeffs = oracle::multiply(coeffs, {1, -r});
      roots.insert(r);
      ++deg;
    }
  }
  return {lf(coeffs), static_cast<int>(roots.size() + 2 * quads.size()), static_cast<int>(roots.size())};
}

}  // namespace

TEST_CASE("power_sums_from_coeffs examples") {
  CHECK(power_sums_from_coeffs(lf({1, 0, 1}), 2) == std::vector<Rational>{2, 0, -2});
  CHECK(power_sums_from_coeffs(lf({1, -2, 1}), 2) == std::vector<Rational>{2, 2, 2});
  CHECK(power_sums_from_coeffs(lf({1, 0, -1, 0}), 4) == std::vector<Rational>{3, 0, 2, 0, 2});
  CHECK_THROWS_AS(power_sums_from_coeffs(lf({2, 1}), 2), DomainError);
}

TEST_CASE("power sums match the roots") {
  oracle::Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> roots(static_cast<std::size_t>(rng.integer(1, 6)));
    for (auto& r : roots) r = rng.rational(-3, 3, 4);
    const auto p = power_sums_from_coeffs(UniPoly::from_roots(roots), 8);
    for (unsigned k = 1; k <= 8; ++k) CHECK(p[k] == oracle::power_sum_of(k, roots));
  }
}

TEST_CASE("sylvester_matrix examples and Hankel structure") {
  CHECK(sylvester_matrix(lf({1, 0, 1})).to_string() == "[[2, 0], [0, -2]]");
  CHECK(sylvester_matrix(lf({1, -2, 1})).to_string() == "[[2, 2], [2, 2]]");
  CHECK(sylvester_matrix(lf({1, 0, -1, 0})).to_string() == "[[3, 0, 2], [0, 2, 0], [2, 0, 2]]");
  oracle::Rng rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    const auto s = sylvester_matrix(random_built(rng, 6, true).f);
    for (std::size_t i = 0; i < s.dim(); ++i) {
      for (std::size_t j = 0; j < s.dim(); ++j) {
        if (i + 1 < s.dim() && j > 0) CHECK(s(i, j) == s(i + 1, j - 1));
      }
    }
  }
}

TEST_CASE("inertia examples") {
  auto a = inertia(SymMatrix::from_rows({{2, 0}, {0, -2}}));
  CHECK(a.rank == 2);
  CHECK(a.signature == 0);
  auto b = inertia(SymMatrix::from_rows({{2, 2}, {2, 2}}));
  CHECK(b.rank == 1);
  CHECK(b.signature == 1);
  auto c = inertia(SymMatrix::from_rows({{3, 0, 2}, {0, 2, 0}, {2, 0, 2}}));
  CHECK(c.rank == 3);
  CHECK(c.signature == 3);
  // all-zero diagonal forces a congruence shift
  auto d = inertia(SymMatrix::from_rows({{0, 1}, {1, 0}}));
  CHECK(d.positive == 1);
  CHECK(d.negative == 1);
  CHECK_THROWS(SymMatrix::from_rows({{1, 2}, {3, 1}}));
}

TEST_CASE("inertia matches characteristic polynomial sign counts") {
  oracle::Rng rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(1, 6));
    std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        // sparse integer entries hit the zero-pivot paths often
        rows[i][j] = rows[j][i] = rng.integer(0, 2) == 0 ? Rational(rng.integer(-3, 3)) : Rational(0);
      }
    }
    const auto in = inertia(SymMatrix::from_rows(rows));
    const auto ref = oracle::inertia_by_descartes(rows);
    CHECK(in.positive == ref.positive);
    CHECK(in.negative == ref.negative);
    CHECK(in.zero == ref.zero);
    CHECK(in.positive + in.negative == in.rank);
    CHECK(in.rank + in.zero == static_cast<int>(n));
    CHECK(in.signature == in.positive - in.negative);
  }
}

TEST_CASE("is_hyperbolic examples") {
  auto a = is_hyperbolic(lf({1, 0, 1}));
  CHECK_FALSE(a.hyperbolic);
  CHECK(a.distinct_roots == 2);
  auto b = is_hyperbolic(lf({1, -2, 1}));
  CHECK(b.hyperbolic);
  CHECK(b.distinct_roots == 1);
  auto c = is_hyperbolic(lf({1, 0, -1, 0}));
  CHECK(c.hyperbolic);
  CHECK(c.distinct_roots == 3);
}

TEST_CASE("rank and signature count distinct and real roots") {
  oracle::Rng rng(1234);
  for (int trial = 0; trial < 100; ++trial) {
    const Built b = random_built(rng, 8, true);
    const auto h = is_hyperbolic(b.f);
    CHECK(h.distinct_roots == b.distinct);
    CHECK(h.distinct_real_roots == b.distinct_real);
    CHECK(h.hyperbolic == (b.distinct == b.distinct_real));
  }
}

TEST_CASE("has_only_nonneg_roots examples") {
  CHECK(has_only_nonneg_roots(lf({1, -3, 2})));
  CHECK_FALSE(has_only_nonneg_roots(lf({1, 0, -1})));
  CHECK(has_only_nonneg_roots(lf({1, -1, 0, 0})));
  CHECK_FALSE(has_only_nonneg_roots(lf({1, 0, 1})));
}

TEST_CASE("hyperbolic_roots examples") {
  auto a = hyperbolic_roots(UniPoly::from_roots(std::vector<Rational>{1, 1, -2}));
  REQUIRE(a.roots.size() == 2);
  CHECK(a.roots[0].value == doctest::Approx(-2));
  CHECK(a.roots[0].multiplicity == 1);
  CHECK(a.roots[1].value == doctest::Approx(1));
  CHECK(a.roots[1].multiplicity == 2);
  CHECK(a.all_real);

  auto b = hyperbolic_roots(lf({1, 0, -1, 0}));
  REQUIRE(b.roots.size() == 3);
  CHECK(b.roots[1].value == doctest::Approx(0));

  auto c = hyperbolic_roots(lf({1, 0, -2}));
  REQUIRE(c.roots.size() == 2);
  CHECK(std::abs(c.roots[1].value - std::sqrt(2.0)) < 1e-10);
  CHECK(std::abs(c.roots[0].value + std::sqrt(2.0)) < 1e-10);

  CHECK_THROWS_AS(hyperbolic_roots(lf({1, 0, 1})), DomainError);
}

TEST_CASE("root multiplicities sum to the degree") {
  oracle::Rng rng(55);
  for (int trial = 0; trial < 30; ++trial) {
    const Built b = random_built(rng, 7, false);
    const auto prof = hyperbolic_roots(b.f);
    unsigned total = 0;
    for (const auto& r : prof.roots) total += r.multiplicity;
    CHECK(total == b.f.deg());
    CHECK(prof.distinct_count == b.distinct);
    for (std::size_t i = 1; i < prof.roots.size(); ++i) CHECK(prof.roots[i - 1].value < prof.roots[i].value);
  }
}

TEST_CASE("derivative of a hyperbolic polynomial is hyperbolic") {
  oracle::Rng rng(66);
  for (int trial = 0; trial < 40; ++trial) {
    const Built b = random_built(rng, 8, false);
    if (b.f.deg() < 2) continue;
    CHECK(is_hyperbolic(b.f.derivative().normalized()).hyperbolic);
  }
}

TEST_CASE("perturbation examples") {
  // (t-1)^2 (t+1), s = 2
  const UniPoly f = UniPoly::from_roots(std::vector<Rational>{1, 1, -1});
  const auto pr = perturb_increase_distinct(f, 2);
  CHECK(pr.p * pr.g == f);
  CHECK(pr.delta > 0);
  for (unsigned j = 1; j <= 6; ++j) {
    const Rational eps = pr.delta * pow2_inverse(j);
    for (int sgn_ : {1, -1}) {
      const UniPoly h = f + pr.g * Rational(sgn_ * eps);
      const auto res = is_hyperbolic(h);
      CHECK(res.hyperbolic);
      CHECK(res.distinct_roots == 3);
    }
  }

  // t^2, s = 1: p = t, g = t
  const UniPoly t2 = lf({1, 0, 0});
  const auto q = perturb_increase_distinct(t2, 1);
  CHECK(q.p == lf({1, 0}));
  CHECK(q.g == lf({1, 0}));

  // t^3 with a kept simple zero: g = t^2
  const UniPoly t3 = lf({1, 0, 0, 0});
  const auto z = perturb_increase_distinct(t3, 1, 1);
  CHECK(z.g == lf({1, 0, 0}));
  const UniPoly h = t3 + z.g * Rational(z.delta / 2);
  CHECK(h.zero_order() == 2);
  CHECK(is_hyperbolic(h).distinct_roots == 2);

  CHECK_THROWS_AS(perturb_increase_distinct(lf({1, 0, -1}), 1), DomainError);
  CHECK_THROWS_AS(perturb_increase_distinct(lf({1, 0, 1}), 1), DomainError);
  CHECK_THROWS_AS(perturb_increase_distinct(f, 3), DomainError);
  CHECK_THROWS_AS(perturb_increase_distinct(f, 0), DomainError);
}

TEST_CASE("perturbation contract on random repeated-root inputs") {
  oracle::Rng rng(77);
  int tested = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const Built b = random_built(rng, 6, false);
    if (b.distinct == static_cast<int>(b.f.deg())) continue;
    const unsigned s = static_cast<unsigned>(rng.integer(1, b.distinct));
    const auto pr = perturb_increase_distinct(b.f, s);
    ++tested;
    CHECK(pr.p * pr.g == b.f);
    for (unsigned j = 1; j <= 6; ++j) {
      for (int sg : {1, -1}) {
        const auto res = is_hyperbolic(b.f + pr.g * Rational(sg * pr.delta * pow2_inverse(j)));
        CHECK(res.hyperbolic);
        CHECK(res.distinct_roots > b.distinct);
      }
    }
  }
  CHECK(tested > 20);
}

TEST_CASE("rational helpers") {
  CHECK(rational_roots(UniPoly::from_roots(std::vector<Rational>{make_rational(2, 3), -5, -5})) ==
        std::vector<Rational>{-5, make_rational(2, 3)});
  CHECK(rational_roots(lf({1, 0, -2})).empty());
  CHECK(simplest_rational_between(make_rational(1, 3), make_rational(1, 2)) == make_rational(1, 2));
  CHECK(simplest_rational_between(make_rational(3, 10), make_rational(4, 10)) == make_rational(1, 3));
  CHECK(simplest_rational_between(Rational(-7, 2), Rational(-3, 1)) == -3);
}

TEST_CASE("shift_margin bounds the critical values") {
  CHECK(shift_margin(lf({1, 0, -1})) == Rational(1));
  const auto m = shift_margin(lf({1, 0, -1, 0}));
  REQUIRE(m.has_value());
  CHECK(*m > 0);
  CHECK(m->get_d() <= 2.0 / (3.0 * std::sqrt(3.0)));
  CHECK(m->get_d() > 0.38);
  CHECK_FALSE(shift_margin(lf({1, 5})).has_value());
  CHECK_THROWS_AS(shift_margin(lf({1, -2, 1})), DomainError);
}
