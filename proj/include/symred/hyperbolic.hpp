#ifndef SYMRED_HYPERBOLIC_HPP
#define SYMRED_HYPERBOLIC_HPP

#include <optional>
#include <vector>

#include "symred/rational.hpp"
#include "symred/sym_matrix.hpp"
#include "symred/unipoly.hpp"

namespace symred {

/// Power sums p_0..p_{up_to} of the roots of a monic f, from its
/// coefficients via the Newton recurrence. p_0 = deg f.
std::vector<Rational> power_sums_from_coeffs(const UniPoly& f, unsigned up_to);

/// Hankel matrix (p_{j+k})_{j,k=0}^{n-1} of the root power sums of a monic f
/// of degree n >= 1.
SymMatrix sylvester_matrix(const UniPoly& f);

struct HyperbolicityResult {
  bool hyperbolic = false;
  int distinct_roots = 0;       // rank of S(f)
  int distinct_real_roots = 0;  // signature of S(f)
};

/// f is hyperbolic iff S(f) is positive semidefinite, i.e. its signature
/// equals its rank.
HyperbolicityResult is_hyperbolic(const UniPoly& f);

/// Hyperbolic with every root >= 0: the e_i of the roots are all
/// nonnegative.
bool has_only_nonneg_roots(const UniPoly& f);

/// Closed rational interval [lo, hi]; lo == hi marks an exact root.
struct RootInterval {
  Rational lo;
  Rational hi;
  bool exact() const { return lo == hi; }
  Rational mid() const { return (lo + hi) / 2; }
};

/// Isolating intervals, in increasing order and of width <= width, for the
/// roots of a square-free polynomial whose roots are all real. Exact
/// rational roots hit during bisection come back as degenerate intervals.
std::vector<RootInterval> isolate_real_roots(const UniPoly& squarefree, const Rational& width);

struct RootProfile {
  struct Root {
    double value;
    unsigned multiplicity;
  };
  std::vector<Root> roots;  // increasing
  int distinct_count = 0;
  bool all_real = false;
};

/// Roots of a hyperbolic f: multiplicities from the exact square-free
/// decomposition, locations by exact rational bisection to `tolerance`.
/// Throws DomainError if f is not hyperbolic.
RootProfile hyperbolic_roots(const UniPoly& f, double tolerance = 1e-12);

struct Perturbation {
  UniPoly g;
  Rational delta;
  /// The degree-s factor whose shift p +- eps splits the repeated roots.
  UniPoly p;
};

/// Rational roots of a nonzero polynomial whose roots are all real,
/// increasing, each listed once.
std::vector<Rational> rational_roots(const UniPoly& f);

/// Simplest (smallest denominator) rational in [lo, hi].
Rational simplest_rational_between(const Rational& lo, const Rational& hi);

/// For hyperbolic f with simple roots: an exact delta > 0 below every
/// |f(xi)| at the critical points xi, so f +- eps keeps deg f distinct real
/// roots for 0 < eps < delta. Empty for degree <= 1 (no constraint).
std::optional<Rational> shift_margin(const UniPoly& f);

/// For hyperbolic f of degree n with k < n distinct roots: factor
/// f = p * g with p the product of (t - x_i) over s distinct roots (one of
/// them a multiple root), so that f +- eps*g = (p +- eps) g is hyperbolic
/// with more distinct roots for 0 < eps < delta. With zero_order m > 0 the
/// construction runs on f / t^m and the result is multiplied back by t^m,
/// which keeps an m-fold root at zero.
Perturbation perturb_increase_distinct(const UniPoly& f, unsigned s, unsigned zero_order = 0);

}  // namespace symred

#endif  // SYMRED_HYPERBOLIC_HPP
