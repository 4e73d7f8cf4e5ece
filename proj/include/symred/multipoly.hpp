#ifndef SYMRED_MULTIPOLY_HPP
#define SYMRED_MULTIPOLY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "symred/rational.hpp"

namespace symred {

/// Exponent vector x_1^a_1 ... x_n^a_n. Its length is the ambient variable
/// count of the owning polynomial.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t n) : exps_(n, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

  std::size_t size() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }

  std::uint64_t total_degree() const;

  Monomial operator*(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> exps_;
};

/// Graded lexicographic order: higher total degree is bigger; ties are
/// broken by the first differing exponent, larger exponent bigger (so
/// x1 > x2 > ... > xn).
struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial with exact rational coefficients in a
/// fixed number of variables. No zero coefficient is ever stored.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational, GradedLexLess>;

  explicit MultiPoly(std::size_t n = 0) : n_(n) {}

  static MultiPoly constant(std::size_t n, const Rational& c);
  /// The variable x_{index+1} (index is zero-based).
  static MultiPoly variable(std::size_t n, std::size_t index);
  static MultiPoly term(const Monomial& m, const Rational& c);

  std::size_t num_vars() const { return n_; }
  const TermMap& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (zero when absent).
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;

  /// Total degree; std::nullopt for the zero polynomial.
  std::optional<std::uint64_t> degree() const;

  /// Maximal term under GradedLexLess. Throws EmptyPolynomialError on zero.
  std::pair<Monomial, Rational> lex_leading() const;

  /// Adds c * m in place (drops the term if it cancels).
  void add_term(const Monomial& m, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& rhs);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
  friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
  friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
  friend MultiPoly operator*(MultiPoly lhs, const Rational& c) { return lhs *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly rhs) { return rhs *= c; }
  MultiPoly operator-() const;

  MultiPoly pow(std::uint32_t e) const;

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  Rational evaluate(std::span<const Rational> point) const;
  double evaluate(std::span<const double> point) const;

  /// Replaces x_i by images[i]; every image must have the same variable
  /// count m, which becomes the variable count of the result.
  MultiPoly substitute(std::span<const MultiPoly> images) const;

  /// Exchanges variables i and j (zero-based).
  MultiPoly swap_variables(std::size_t i, std::size_t j) const;

  /// Text form accepted by the parser, terms in decreasing graded order.
  /// Variables print as <prefix><index+1>.
  std::string to_string(const std::string& prefix = "x") const;

 private:
  std::size_t n_;
  TermMap terms_;
};

enum class PolyOp { add, sub, mul };

/// Binary arithmetic dispatch; throws DimensionError when variable counts
/// differ.
MultiPoly poly_arith(PolyOp op, const MultiPoly& lhs, const MultiPoly& rhs);
MultiPoly poly_scale(const MultiPoly& lhs, const Rational& c);

/// Flattened double-precision form for repeated evaluation in grid scans.
class CompiledPoly {
 public:
  CompiledPoly() = default;
  explicit CompiledPoly(const MultiPoly& p);

  std::size_t num_vars() const { return n_; }
  double operator()(std::span<const double> point) const;

 private:
  std::size_t n_ = 0;
  std::uint32_t max_exp_ = 0;
  std::vector<double> coeffs_;
  std::vector<std::uint32_t> exps_;  // row-major, num_terms x n_
};

}  // namespace symred

#endif  // SYMRED_MULTIPOLY_HPP
