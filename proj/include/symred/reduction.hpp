#ifndef SYMRED_REDUCTION_HPP
#define SYMRED_REDUCTION_HPP

#include <span>
#include <string>
#include <vector>

#include "symred/multipoly.hpp"
#include "symred/rational.hpp"

namespace symred {

/// real_line: points of R^n with at most k distinct coordinates.
/// orthant: points of the nonnegative orthant with at most k distinct
/// nonzero coordinates.
enum class SearchMode { real_line, orthant };

enum class Principle { degree, half_degree };

/// How many coordinates share each distinct value: parts[j] copies of t_j,
/// followed by zero_block zeros.
struct MultiplicityPattern {
  std::vector<unsigned> parts;  // weakly decreasing, positive
  unsigned zero_block = 0;

  unsigned total() const;
  std::size_t num_parts() const { return parts.size(); }
  /// e.g. "(2,1)" or "(2,1)+0^1"
  std::string to_string() const;

  friend bool operator==(const MultiplicityPattern&, const MultiplicityPattern&) = default;
};

struct ReducedInstance {
  MultiplicityPattern pattern;
  MultiPoly reduced;  // variables t_1..t_k, k = pattern.num_parts()
  SearchMode mode = SearchMode::real_line;
};

/// Real-line: partitions of n into at most k parts. Orthant: for each zero
/// block z = 0..n, partitions of n - z into at most k parts. Within a block,
/// parts are listed in decreasing lexicographic order.
std::vector<MultiplicityPattern> enumerate_patterns(unsigned n, unsigned k, SearchMode mode);

/// F restricted to the pattern: x-group j becomes t_j, the zero block 0.
ReducedInstance reduce_polynomial(const MultiPoly& f, const MultiplicityPattern& pattern,
                                  SearchMode mode = SearchMode::real_line);

/// Same pattern applied to several polynomials (shared substitution).
std::vector<ReducedInstance> reduce_system(std::span<const MultiPoly> system,
                                           const MultiplicityPattern& pattern, SearchMode mode);

/// parts[j] copies of t[j] then zero_block zeros.
std::vector<Rational> lift_point(const MultiplicityPattern& pattern, std::span<const Rational> t,
                                 SearchMode mode = SearchMode::real_line);
std::vector<double> lift_point(const MultiplicityPattern& pattern, std::span<const double> t);

/// k = min(n, d) for the degree principle, min(n, max(2, floor(d/2))) for
/// the half-degree principle.
unsigned principle_k(Principle principle, unsigned n, unsigned d);

/// Every reduction of F over enumerate_patterns(n, k, mode).
std::vector<ReducedInstance> principle_instances(const MultiPoly& f, Principle principle,
                                                 SearchMode mode);

}  // namespace symred

#endif  // SYMRED_REDUCTION_HPP
