#ifndef SYMRED_LEMMA42_HPP
#define SYMRED_LEMMA42_HPP

#include <optional>
#include <vector>

#include "symred/rational.hpp"
#include "symred/search.hpp"

namespace symred {

/// Linear optimization over the slice of hyperbolic coefficient vectors
/// z = (e_1, ..., e_n) of root vectors x with e_1..e_s fixed.
///
/// The slice is explored in root coordinates: n - s roots are free, and the
/// remaining monic degree-s factor q is the unique one making the leading
/// s + 1 coefficients of q * prod(t - y_i) match. A sample is feasible when
/// q is hyperbolic. Objectives are exact; only the reported roots of q are
/// numeric.
struct SliceExperiment {
  unsigned n = 0;
  unsigned s = 0;
  std::vector<Rational> fixed;      // a_1..a_s (values of e_1..e_s)
  std::vector<Rational> objective;  // c, length n
  unsigned sample_count = 2000;
  SearchConfig cfg;
};

struct SliceSample {
  std::vector<Rational> fixed_coeffs;
  std::vector<double> root_sample;  // increasing
  std::vector<Rational> coefficient_vector;  // z
  Rational objective;
};

struct SliceReport {
  bool empty_slice = true;
  /// c_i == 0 for every i > s, so c.z is the same on the whole slice.
  bool objective_constant = false;
  /// Every feasible sample attained exactly the same objective value.
  bool samples_agree = false;
  std::size_t feasible_samples = 0;
  /// Best sample after descent; absent for an empty slice (objective +inf).
  std::optional<SliceSample> best;
  /// Distinct roots of the best sample after merging roots closer than
  /// cluster_tolerance.
  int clustered_distinct = 0;
  /// Exact rank of S(z) at the best sample.
  int exact_rank = 0;
  double cluster_tolerance = 0.0;
  /// clustered_distinct <= s
  bool within_bound = false;
  /// Minimum of c.z over root vectors with at most s distinct values that
  /// meet the constraints numerically (absent if none was found).
  std::optional<double> pattern_restricted_min;
};

/// Throws DomainError unless 2 <= s <= n, |fixed| = s and |objective| = n.
SliceReport lemma42_experiment(const SliceExperiment& exp);

/// Number of groups after single-linkage clustering of sorted values.
int clustered_count(std::vector<double> values, double tolerance);

}  // namespace symred

#endif  // SYMRED_LEMMA42_HPP
