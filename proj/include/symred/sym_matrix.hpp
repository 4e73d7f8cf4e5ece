#ifndef SYMRED_SYM_MATRIX_HPP
#define SYMRED_SYM_MATRIX_HPP

#include <string>
#include <vector>

#include "symred/rational.hpp"

namespace symred {

/// Square symmetric rational matrix, row-major.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t dim) : dim_(dim), a_(dim * dim, Rational(0)) {}
  /// Throws DomainError if `rows` is not square and symmetric.
  static SymMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t dim() const { return dim_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }
  /// Sets both (i, j) and (j, i).
  void set(std::size_t i, std::size_t j, const Rational& v);

  std::vector<std::vector<Rational>> rows() const;
  std::string to_string() const;

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> a_;
};

struct InertiaResult {
  int rank = 0;
  int signature = 0;
  int positive = 0;
  int negative = 0;
  int zero = 0;
};

/// Exact inertia by symmetric Gaussian elimination (congruence). When every
/// remaining diagonal entry vanishes but an off-diagonal a_ij does not, row
/// and column j are added to row and column i, which leaves a nonzero pivot
/// 2 a_ij without changing the inertia.
InertiaResult inertia(const SymMatrix& m);

}  // namespace symred

#endif  // SYMRED_SYM_MATRIX_HPP
