#ifndef SYMRED_SEARCH_HPP
#define SYMRED_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symred/grid_kernels.hpp"
#include "symred/multipoly.hpp"
#include "symred/reduction.hpp"

namespace symred {

/// Search budget and domain. Box bounds are exact so that grid points are
/// exact rationals.
struct SearchConfig {
  Rational lo = -10;
  Rational hi = 10;
  unsigned grid_resolution = 33;
  unsigned descent_steps = 40;
  double tolerance = 1e-9;
  std::uint64_t seed = 0;
  /// Largest grid (in points) any single scan may visit.
  std::uint64_t grid_budget = 20'000'000;
  /// Use the OpenMP kernels; the serial ones give identical results.
  bool parallel = true;

  /// Throws DomainError on lo >= hi, resolution < 2, tolerance <= 0.
  void validate() const;
  double cell_width() const { return Rational(hi - lo).get_d() / (grid_resolution - 1); }
};

enum class VerdictStatus { counterexample_found, no_counterexample_found, zero_found, no_zero_found };

std::string to_string(VerdictStatus s);

struct Witness {
  MultiplicityPattern pattern;
  SearchMode mode = SearchMode::real_line;
  std::vector<Rational> t;      // reduced coordinates
  std::vector<Rational> point;  // lifted point in R^n
  Rational value;               // exact F(point)
};

/// "no counterexample found" is evidence, not a proof of nonnegativity.
struct Verdict {
  VerdictStatus status = VerdictStatus::no_counterexample_found;
  std::optional<Witness> witness;
  double best_value = 0.0;
};

struct InstanceMinimum {
  double value = 0.0;
  std::vector<double> argmin;
  /// Best grid point before descent, as exact coordinates.
  std::vector<Rational> grid_argmin;
  double grid_value = 0.0;
};

/// Effective box of an instance: in orthant mode a nonpositive lower bound
/// is raised to hi * 2^-20 so that every t_j stays positive.
std::pair<Rational, Rational> instance_box(const SearchConfig& cfg, SearchMode mode);

/// Grid scan over box^k then coordinate descent with step halving from the
/// best grid point. Zero-variable instances evaluate to their constant.
InstanceMinimum minimize_instance(const ReducedInstance& inst, const SearchConfig& cfg);

/// Half-degree refutation search. A counterexample is reported only after
/// exact re-evaluation at a rational point gives a negative value.
Verdict check_nonnegativity(const MultiPoly& f, SearchMode mode, const SearchConfig& cfg);

/// Degree-principle zero search: grid sign changes refined by exact
/// bisection, then near-zero minima of F^2. A witness satisfies
/// |F(witness)| <= tolerance exactly.
Verdict find_zero(const MultiPoly& f, const SearchConfig& cfg);

struct GridOracleResult {
  double value = 0.0;
  std::vector<double> argmin;
};

/// Exhaustive grid minimum over box^n with no symmetry reduction. Throws
/// BudgetError when resolution^n exceeds the budget.
GridOracleResult oracle_min_full(const MultiPoly& f, const SearchConfig& cfg);

/// True when the full grid over box^n has neighbouring points of opposite
/// sign or a grid point where F vanishes exactly.
bool oracle_sign_change(const MultiPoly& f, const SearchConfig& cfg);

/// Exact coordinate lo + (hi - lo) * i / (resolution - 1).
Rational grid_coordinate(const Rational& lo, const Rational& hi, unsigned resolution, std::uint32_t i);

}  // namespace symred

#endif  // SYMRED_SEARCH_HPP
