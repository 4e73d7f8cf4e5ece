#include "symred/hyperbolic.hpp"

#include <algorithm>
#include <limits>

#include "symred/errors.hpp"
#include "symred/symmetric.hpp"

namespace symred {

namespace {

void require_monic(const UniPoly& f, const char* what) {
  if (f.is_zero() || f.deg() < 1) throw DomainError(std::string(what) + ": degree must be at least 1");
  if (!f.is_monic()) throw DomainError(std::string(what) + ": polynomial must be monic");
}

// 1 + max |c_i / c_n|: every root has absolute value below this.
Rational cauchy_bound(const UniPoly& f) {
  Rational m = 0;
  const auto& c = f.ascending();
  for (std::size_t i = 0; i + 1 < c.size(); ++i) m = std::max(m, Rational(abs(c[i] / f.leading())));
  return m + 1;
}

// One bisection step on an interval that brackets a simple root of f.
void bisect(const UniPoly& f, RootInterval& iv) {
  if (iv.exact()) return;
  Rational m = iv.mid();
  const int sm = f.sign_at(m);
  if (sm == 0) {
    iv.lo = m;
    iv.hi = m;
  } else if (sm * f.sign_at(iv.lo) < 0) {
    iv.hi = m;
  } else {
    iv.lo = m;
  }
}

// Sign of a polynomial with `deg` distinct real roots at its j-th critical
// point (0-based, increasing): deg-1-j roots lie to the right.
int critical_sign(int lead_sign, unsigned deg, std::size_t j) {
  return ((deg - 1 - j) % 2 == 0) ? lead_sign : -lead_sign;
}

// Shrinks the isolating intervals of the critical points of f (roots of f')
// until f has the expected constant sign on each; f then has no root inside.
void separate_critical(const UniPoly& f, const UniPoly& df, std::vector<RootInterval>& crit) {
  const int lead = sgn(f.leading());
  for (std::size_t j = 0; j < crit.size(); ++j) {
    const int want = critical_sign(lead, f.deg(), j);
    auto& iv = crit[j];
    int steps = 0;
    while (!iv.exact() && (f.sign_at(iv.lo) != want || f.sign_at(iv.hi) != want)) {
      if (++steps > 4096) throw DomainError("root isolation: roots are not all real and simple");
      bisect(df, iv);
    }
  }
}

// Lower bound for |p(xi)| at a critical point xi bracketed by an interval
// on which p keeps the sign of p(xi): |p| is unimodal between consecutive
// roots of p, so any point of the interval gives a lower bound.
Rational critical_value_bound(const UniPoly& p, const RootInterval& iv) {
  if (iv.exact()) return abs(p.evaluate(iv.lo));
  return std::max(Rational(abs(p.evaluate(iv.lo))), Rational(abs(p.evaluate(iv.hi))));
}

// Lower bound of |p| at the root bracketed by iv (a root of some q coprime
// to p); refines iv with q until the Lipschitz slack is small.
Rational value_bound_at_root(const UniPoly& p, const UniPoly& q, RootInterval iv) {
  const UniPoly dp = p.derivative();
  for (;;) {
    if (iv.exact()) return abs(p.evaluate(iv.lo));
    const Rational w = iv.hi - iv.lo;
    const Rational m = std::max(Rational(abs(iv.lo)), Rational(abs(iv.hi)));
    Rational lip = 0;
    Rational mp = 1;
    for (unsigned i = 0; i < dp.ascending().size(); ++i) {
      lip += abs(dp.ascending()[i]) * mp;
      mp *= m;
    }
    const Rational at_mid = abs(p.evaluate(iv.mid()));
    if (at_mid > 2 * lip * w) return at_mid - lip * w;
    bisect(q, iv);
  }
}

struct RootUnit {
  UniPoly factor;   // monic, square-free, all roots real
  unsigned degree;
  unsigned multiplicity;
  Rational first_root;  // approximate smallest root, for ordering
  bool rational;
};

}  // namespace

std::vector<Rational> power_sums_from_coeffs(const UniPoly& f, unsigned up_to) {
  require_monic(f, "power_sums_from_coeffs");
  const unsigned n = f.deg();
  std::vector<Rational> out{Rational(n)};
  if (up_to == 0) return out;
  const std::vector<Rational> e = f.elementary_values();
  const auto p = newton_convert<Rational>(NewtonDirection::p_from_e, e, up_to, n, Rational(1));
  out.insert(out.end(), p.begin(), p.end());
  return out;
}

SymMatrix sylvester_matrix(const UniPoly& f) {
  require_monic(f, "sylvester_matrix");
  const unsigned n = f.deg();
  const auto p = power_sums_from_coeffs(f, 2 * n - 2);
  SymMatrix s(n);
  for (unsigned j = 0; j < n; ++j) {
    for (unsigned k = j; k < n; ++k) s.set(j, k, p[j + k]);
  }
  return s;
}

HyperbolicityResult is_hyperbolic(const UniPoly& f) {
  const InertiaResult in = inertia(sylvester_matrix(f));
  return {in.signature == in.rank, in.rank, in.signature};
}

bool has_only_nonneg_roots(const UniPoly& f) {
  require_monic(f, "has_only_nonneg_roots");
  if (!is_hyperbolic(f).hyperbolic) return false;
  for (const auto& e : f.elementary_values()) {
    if (e < 0) return false;
  }
  return true;
}

std::vector<RootInterval> isolate_real_roots(const UniPoly& f, const Rational& width) {
  if (f.is_zero()) throw EmptyPolynomialError("isolate_real_roots of zero");
  const unsigned n = f.deg();
  if (n == 0) return {};
  if (n == 1) {
    Rational r = -f.coeff(0) / f.coeff(1);
    return {RootInterval{r, r}};
  }
  const UniPoly df = f.derivative();
  std::vector<RootInterval> crit = isolate_real_roots(df, width);
  if (crit.size() != n - 1) throw DomainError("isolate_real_roots: roots are not all real and simple");
  separate_critical(f, df, crit);

  const Rational bound = cauchy_bound(f);
  std::vector<RootInterval> out;
  out.reserve(n);
  for (unsigned j = 0; j < n; ++j) {
    RootInterval iv{j == 0 ? Rational(-bound) : crit[j - 1].hi, j + 1 == n ? bound : crit[j].lo};
    if (f.sign_at(iv.lo) * f.sign_at(iv.hi) >= 0) {
      throw DomainError("isolate_real_roots: roots are not all real and simple");
    }
    while (!iv.exact() && iv.hi - iv.lo > width) bisect(f, iv);
    out.push_back(iv);
  }
  return out;
}

Rational simplest_rational_between(const Rational& lo, const Rational& hi) {
  if (lo > hi) return simplest_rational_between(hi, lo);
  if (lo <= 0 && hi >= 0) return 0;
  if (hi < 0) return -simplest_rational_between(-hi, -lo);
  Integer a;
  mpz_fdiv_q(a.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (Rational(a) == lo) return lo;
  if (Rational(a + 1) <= hi) return Rational(a + 1);
  // lo, hi in (a, a+1): recurse on the reciprocals of the fractional parts.
  Rational inner = simplest_rational_between(1 / (hi - a), 1 / (lo - a));
  return Rational(a) + 1 / inner;
}

std::vector<Rational> rational_roots(const UniPoly& f) {
  if (f.is_zero()) throw EmptyPolynomialError("rational_roots of zero");
  if (f.deg() == 0) return {};
  const UniPoly sqf = f.normalized().exact_div(gcd(f, f.derivative()));
  // A rational root u/v of the integer primitive multiple has v | lead; an
  // isolating width below 1/lead^2 leaves it as the simplest rational.
  Integer lcm_den = 1;
  for (const auto& c : sqf.ascending()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  const Integer lead = abs(lcm_den);
  const Rational width = make_rational(Integer(1), lead * lead + 1);
  std::vector<Rational> out;
  for (const auto& iv : isolate_real_roots(sqf, width)) {
    Rational cand = simplest_rational_between(iv.lo, iv.hi);
    if (sqf.evaluate(cand) == 0) out.push_back(cand);
  }
  return out;
}

RootProfile hyperbolic_roots(const UniPoly& f, double tolerance) {
  if (!(tolerance > 0)) throw DomainError("hyperbolic_roots: tolerance must be positive");
  const auto hyp = is_hyperbolic(f);
  if (!hyp.hyperbolic) throw DomainError("hyperbolic_roots: polynomial is not hyperbolic");
  const Rational width(tolerance);
  RootProfile prof;
  const auto factors = square_free_decomposition(f);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].deg() == 0) continue;
    for (const auto& iv : isolate_real_roots(factors[i], width)) {
      prof.roots.push_back({iv.mid().get_d(), static_cast<unsigned>(i + 1)});
    }
  }
  std::sort(prof.roots.begin(), prof.roots.end(),
            [](const RootProfile::Root& a, const RootProfile::Root& b) { return a.value < b.value; });
  prof.distinct_count = static_cast<int>(prof.roots.size());
  prof.all_real = true;
  if (prof.distinct_count != hyp.distinct_roots) {
    throw InternalError("hyperbolic_roots: distinct count disagrees with rank of S(f)");
  }
  return prof;
}

std::optional<Rational> shift_margin(const UniPoly& f) {
  if (f.is_zero() || f.deg() <= 1) return std::nullopt;
  const HyperbolicityResult h = is_hyperbolic(f.normalized());
  if (!h.hyperbolic || h.distinct_roots != static_cast<int>(f.deg())) {
    throw DomainError("shift_margin: f must have simple real roots");
  }
  const UniPoly df = f.derivative();
  auto crit = isolate_real_roots(df.normalized(), make_rational(1, 1 << 20));
  separate_critical(f, df, crit);
  std::optional<Rational> delta;
  for (const auto& iv : crit) {
    const Rational b = critical_value_bound(f, iv);
    if (!delta || b < *delta) delta = b;
  }
  return delta;
}

Perturbation perturb_increase_distinct(const UniPoly& f, unsigned s, unsigned zero_order) {
  require_monic(f, "perturb_increase_distinct");
  if (!is_hyperbolic(f).hyperbolic) throw DomainError("perturb_increase_distinct: f is not hyperbolic");
  UniPoly work = f;
  if (zero_order > 0) {
    if (f.zero_order() <= zero_order) {
      throw DomainError("perturb_increase_distinct: root at 0 must have multiplicity above the zero order");
    }
    work = f.exact_div(UniPoly::monomial(zero_order));
  }
  const unsigned n = work.deg();
  const int k = is_hyperbolic(work).distinct_roots;
  if (static_cast<unsigned>(k) == n) {
    throw DomainError("perturb_increase_distinct: all roots already distinct, nothing to do");
  }
  if (s < 1 || s > static_cast<unsigned>(k)) {
    throw DomainError("perturb_increase_distinct: s must lie in 1.." + std::to_string(k));
  }

  // Distinct roots grouped into exact factors: rational roots individually,
  // the irrational roots of each multiplicity class as one block.
  std::vector<RootUnit> units;
  const auto factors = square_free_decomposition(work);
  const Rational probe_width = make_rational(1, 1 << 20);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].deg() == 0) continue;
    const unsigned mult = static_cast<unsigned>(i + 1);
    UniPoly rest = factors[i];
    for (const auto& r : rational_roots(factors[i])) {
      const UniPoly lin = UniPoly::from_roots(std::span<const Rational>(&r, 1));
      units.push_back({lin, 1, mult, r, true});
      rest = rest.exact_div(lin);
    }
    if (rest.deg() > 0) {
      const auto ivs = isolate_real_roots(rest, probe_width);
      units.push_back({rest, rest.deg(), mult, ivs.front().mid(), false});
    }
  }
  std::sort(units.begin(), units.end(),
            [](const RootUnit& a, const RootUnit& b) { return a.first_root < b.first_root; });

  // First unit: a root of maximal multiplicity, preferring a single
  // rational root, then the smallest block.
  unsigned max_mult = 0;
  for (const auto& u : units) max_mult = std::max(max_mult, u.multiplicity);
  std::size_t first = units.size();
  for (std::size_t i = 0; i < units.size(); ++i) {
    if (units[i].multiplicity != max_mult) continue;
    if (first == units.size() || units[i].degree < units[first].degree) first = i;
  }
  std::vector<bool> chosen(units.size(), false);
  chosen[first] = true;
  unsigned deg_p = units[first].degree;
  for (std::size_t i = 0; i < units.size() && deg_p < s; ++i) {
    if (!chosen[i] && deg_p + units[i].degree <= s) {
      chosen[i] = true;
      deg_p += units[i].degree;
    }
  }
  if (deg_p != s) {
    throw DomainError("perturb_increase_distinct: no rational factor of degree " + std::to_string(s) +
                      " through a multiple root");
  }

  UniPoly p = UniPoly::constant(1);
  for (std::size_t i = 0; i < units.size(); ++i) {
    if (chosen[i]) p = p * units[i].factor;
  }
  const UniPoly g = work.exact_div(p);

  // delta: p +- eps keeps s distinct real roots while eps stays below every
  // |critical value| of p, and avoids the unchosen roots of f while eps
  // stays below |p| there.
  std::optional<Rational> delta;
  auto lower = [&](const Rational& v) {
    if (!delta || v < *delta) delta = v;
  };
  if (p.deg() >= 2) {
    const UniPoly dp = p.derivative();
    auto crit = isolate_real_roots(dp, probe_width);
    separate_critical(p, dp, crit);
    for (const auto& iv : crit) lower(critical_value_bound(p, iv));
  }
  for (std::size_t i = 0; i < units.size(); ++i) {
    if (chosen[i]) continue;
    if (units[i].rational) {
      lower(abs(p.evaluate(units[i].first_root)));
    } else {
      for (const auto& iv : isolate_real_roots(units[i].factor, probe_width)) {
        lower(value_bound_at_root(p, units[i].factor, iv));
      }
    }
  }
  Perturbation out;
  out.p = p;
  out.delta = delta.value_or(Rational(1));
  out.g = zero_order > 0 ? g * UniPoly::monomial(zero_order) : g;
  if (!(out.delta > 0)) throw InternalError("perturb_increase_distinct: non-positive delta");
  return out;
}

}  // namespace symred
