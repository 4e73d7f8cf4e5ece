#include "symred/reduction.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "symred/errors.hpp"
#include "symred/symmetric.hpp"

namespace symred {

namespace {

// Partitions of `remaining` into at most `slots` parts, each <= max_part,
// appended in decreasing lexicographic order.
void partitions(unsigned remaining, unsigned slots, unsigned max_part, std::vector<unsigned>& cur,
                std::vector<std::vector<unsigned>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  if (slots == 0) return;
  for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions(remaining - part, slots - 1, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

unsigned MultiplicityPattern::total() const {
  return std::accumulate(parts.begin(), parts.end(), 0u) + zero_block;
}

std::string MultiplicityPattern::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
  os << ")";
  if (zero_block > 0) os << "+0^" << zero_block;
  return os.str();
}

std::vector<MultiplicityPattern> enumerate_patterns(unsigned n, unsigned k, SearchMode mode) {
  if (k < 1 || k > n) {
    throw DomainError("enumerate_patterns: k = " + std::to_string(k) + " outside 1.." + std::to_string(n));
  }
  std::vector<MultiplicityPattern> out;
  const unsigned max_zero = mode == SearchMode::orthant ? n : 0;
  for (unsigned z = 0; z <= max_zero; ++z) {
    std::vector<std::vector<unsigned>> parts;
    std::vector<unsigned> cur;
    partitions(n - z, k, n - z, cur, parts);
    for (auto& p : parts) out.push_back({std::move(p), z});
  }
  return out;
}

ReducedInstance reduce_polynomial(const MultiPoly& f, const MultiplicityPattern& pattern, SearchMode mode) {
  if (!is_symmetric(f)) throw SymmetryError("reduce_polynomial: input is not symmetric");
  return std::move(reduce_system(std::span<const MultiPoly>(&f, 1), pattern, mode).front());
}

std::vector<ReducedInstance> reduce_system(std::span<const MultiPoly> system,
                                           const MultiplicityPattern& pattern, SearchMode mode) {
  for (const auto& f : system) {
    if (pattern.total() != f.num_vars()) {
      throw DimensionError("reduce_polynomial: pattern " + pattern.to_string() + " does not sum to n = " +
                           std::to_string(f.num_vars()));
    }
  }
  if (mode == SearchMode::real_line && pattern.zero_block != 0) {
    throw DomainError("reduce_polynomial: zero block only exists in orthant mode");
  }
  const std::size_t k = pattern.num_parts();
  std::vector<MultiPoly> images;
  for (std::size_t j = 0; j < k; ++j) {
    for (unsigned c = 0; c < pattern.parts[j]; ++c) images.push_back(MultiPoly::variable(k, j));
  }
  for (unsigned c = 0; c < pattern.zero_block; ++c) images.push_back(MultiPoly(k));
  std::vector<ReducedInstance> out;
  for (const auto& f : system) out.push_back({pattern, f.substitute(images), mode});
  return out;
}

std::vector<Rational> lift_point(const MultiplicityPattern& pattern, std::span<const Rational> t,
                                 SearchMode mode) {
  if (t.size() != pattern.num_parts()) throw DimensionError("lift_point: value count differs from part count");
  std::vector<Rational> x;
  x.reserve(pattern.total());
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (mode == SearchMode::orthant && t[j] <= 0) {
      throw DomainError("lift_point: orthant values must be positive");
    }
    x.insert(x.end(), pattern.parts[j], t[j]);
  }
  x.insert(x.end(), pattern.zero_block, Rational(0));
  return x;
}

std::vector<double> lift_point(const MultiplicityPattern& pattern, std::span<const double> t) {
  if (t.size() != pattern.num_parts()) throw DimensionError("lift_point: value count differs from part count");
  std::vector<double> x;
  x.reserve(pattern.total());
  for (std::size_t j = 0; j < t.size(); ++j) x.insert(x.end(), pattern.parts[j], t[j]);
  x.insert(x.end(), pattern.zero_block, 0.0);
  return x;
}

unsigned principle_k(Principle principle, unsigned n, unsigned d) {
  const unsigned k = principle == Principle::degree ? d : std::max(2u, d / 2);
  return std::min(n, k);
}

std::vector<ReducedInstance> principle_instances(const MultiPoly& f, Principle principle, SearchMode mode) {
  if (!is_symmetric(f)) throw SymmetryError("principle_instances: input is not symmetric");
  const unsigned d = static_cast<unsigned>(f.degree().value_or(0));
  if (d < 1) throw DomainError("principle_instances: degree must be at least 1");
  const unsigned n = static_cast<unsigned>(f.num_vars());
  std::vector<ReducedInstance> out;
  for (const auto& pat : enumerate_patterns(n, principle_k(principle, n, d), mode)) {
    out.push_back(reduce_system(std::span<const MultiPoly>(&f, 1), pat, mode).front());
  }
  return out;
}

}  // namespace symred
