#ifndef SYMRED_UNIPOLY_HPP
#define SYMRED_UNIPOLY_HPP

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "symred/multipoly.hpp"
#include "symred/rational.hpp"

namespace symred {

/// Dense univariate polynomial over the rationals.
///
/// Storage is ascending (coefficient of t^i at index i) with no trailing
/// zeros, so the leading coefficient is nonzero unless the polynomial is
/// zero. The factory from_leading_first accepts the conventional a_0..a_n
/// listing with a_0 the leading coefficient.
class UniPoly {
 public:
  UniPoly() = default;

  static UniPoly from_ascending(std::vector<Rational> coeffs);
  static UniPoly from_leading_first(std::span<const Rational> coeffs);
  static UniPoly constant(const Rational& c);
  /// t^k
  static UniPoly monomial(unsigned k, const Rational& c = 1);
  /// prod (t - r)
  static UniPoly from_roots(std::span<const Rational> roots);
  /// Monic polynomial t^n - z_1 t^{n-1} + z_2 t^{n-2} - ... + (-1)^n z_n
  /// whose roots have elementary symmetric values z.
  static UniPoly from_elementary(std::span<const Rational> z);

  /// Univariate view of a one-variable MultiPoly.
  static UniPoly from_multipoly(const MultiPoly& p);

  bool is_zero() const { return coeffs_.empty(); }
  std::optional<unsigned> degree() const;
  /// Degree, throwing EmptyPolynomialError on the zero polynomial.
  unsigned deg() const;
  const Rational& leading() const;
  bool is_monic() const { return !is_zero() && leading() == 1; }

  /// Coefficient of t^i (zero beyond the degree).
  Rational coeff(unsigned i) const;
  const std::vector<Rational>& ascending() const { return coeffs_; }
  std::vector<Rational> leading_first() const;
  /// Elementary symmetric values (e_1..e_n) of the roots of a monic f.
  std::vector<Rational> elementary_values() const;

  /// Divides by the leading coefficient.
  UniPoly normalized() const;
  UniPoly derivative() const;

  Rational evaluate(const Rational& t) const;
  double evaluate(double t) const;
  int sign_at(const Rational& t) const { return sgn(evaluate(t)); }

  UniPoly& operator+=(const UniPoly& rhs);
  UniPoly& operator-=(const UniPoly& rhs);
  UniPoly& operator*=(const Rational& c);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
  UniPoly pow(unsigned e) const;

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  /// Euclidean division; throws EmptyPolynomialError for a zero divisor.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;
  /// Exact quotient; throws DomainError when the remainder is nonzero.
  UniPoly exact_div(const UniPoly& divisor) const;

  /// Multiplicity of the root at t = 0.
  unsigned zero_order() const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic gcd (zero only when both inputs are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Square-free factors: result[i] is the product of the distinct roots of
/// multiplicity i+1 (monic; constant 1 when there are none). f must be
/// nonzero.
std::vector<UniPoly> square_free_decomposition(const UniPoly& f);

/// Formal derivative.
inline UniPoly uni_derivative(const UniPoly& f) { return f.derivative(); }

}  // namespace symred

#endif  // SYMRED_UNIPOLY_HPP
