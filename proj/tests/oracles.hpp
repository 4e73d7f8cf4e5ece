// Independent reference computations for the test suites. Nothing here calls
// the library algorithm it is used to check.
#ifndef SYMRED_TESTS_ORACLES_HPP
#define SYMRED_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "symred/multipoly.hpp"
#include "symred/rational.hpp"

namespace oracle {

using symred::Rational;

// e_k of concrete values by subset enumeration.
inline Rational elementary_by_subsets(unsigned k, const std::vector<Rational>& x) {
  const std::size_t n = x.size();
  Rational sum = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<unsigned>(__builtin_popcountll(mask)) != k) continue;
    Rational prod = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) prod *= x[i];
    }
    sum += prod;
  }
  return sum;
}

inline Rational power_sum_of(unsigned k, const std::vector<Rational>& x) {
  Rational s = 0;
  for (const auto& v : x) {
    Rational p = 1;
    for (unsigned i = 0; i < k; ++i) p *= v;
    s += p;
  }
  return s;
}

// Leading-first coefficients of prod (t - r).
inline std::vector<Rational> coeffs_from_roots(const std::vector<Rational>& roots) {
  std::vector<Rational> c{1};
  for (const auto& r : roots) {
    c.push_back(0);
    for (std::size_t i = c.size() - 1; i >= 1; --i) c[i] -= r * c[i - 1];
  }
  return c;
}

// Leading-first product of two leading-first coefficient vectors.
inline std::vector<Rational> multiply(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> c(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

// Direct term-by-term evaluation.
inline Rational eval(const symred::MultiPoly& f, const std::vector<Rational>& x) {
  Rational sum = 0;
  for (const auto& [m, c] : f.terms()) {
    Rational prod = c;
    for (std::size_t i = 0; i < x.size(); ++i) {
      for (std::uint32_t e = 0; e < m[i]; ++e) prod *= x[i];
    }
    sum += prod;
  }
  return sum;
}

inline double eval(const symred::MultiPoly& f, const std::vector<double>& x) {
  double sum = 0;
  for (const auto& [m, c] : f.terms()) {
    double prod = c.get_d();
    for (std::size_t i = 0; i < x.size(); ++i) prod *= std::pow(x[i], static_cast<double>(m[i]));
    sum += prod;
  }
  return sum;
}

// Characteristic polynomial det(tI - A), leading first, by Faddeev-LeVerrier.
inline std::vector<Rational> char_poly(const std::vector<std::vector<Rational>>& a) {
  const std::size_t n = a.size();
  std::vector<Rational> c(n + 1);
  c[0] = 1;
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{k-1} I, c_k = -tr(A M_k) / k
    std::vector<std::vector<Rational>> next(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t l = 0; l < n; ++l) next[i][j] += a[i][l] * m[l][j];
      }
      next[i][i] += c[k - 1];
    }
    m = std::move(next);
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) tr += a[i][l] * m[l][i];
    }
    c[k] = -tr / static_cast<long>(k);
  }
  return c;
}

inline int sign_changes(const std::vector<Rational>& c) {
  int changes = 0, last = 0;
  for (const auto& v : c) {
    const int s = sgn(v);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};

// For a symmetric matrix the characteristic polynomial is real-rooted, so
// Descartes' rule counts positive and negative eigenvalues exactly.
inline Inertia inertia_by_descartes(const std::vector<std::vector<Rational>>& a) {
  auto c = char_poly(a);
  Inertia in;
  while (!c.empty() && c.back() == 0) {
    c.pop_back();
    ++in.zero;
  }
  in.positive = sign_changes(c);
  std::vector<Rational> neg = c;
  const std::size_t deg = neg.size() - 1;
  for (std::size_t i = 0; i < neg.size(); ++i) {
    if ((deg - i) % 2 == 1) neg[i] = -neg[i];
  }
  in.negative = sign_changes(neg);
  return in;
}

// sup over the box [-R, R]^n of sum_i |dF/dx_i|, a Lipschitz constant for
// the max-norm.
inline double lipschitz_bound(const symred::MultiPoly& f, double radius) {
  double l = 0;
  for (const auto& [m, c] : f.terms()) {
    const auto deg = m.total_degree();
    if (deg == 0) continue;
    l += std::abs(c.get_d()) * static_cast<double>(deg) * std::pow(radius, static_cast<double>(deg - 1));
  }
  return l;
}

// Number of partitions of n into at most k parts.
inline std::uint64_t partitions_at_most(unsigned n, unsigned k) {
  std::vector<std::vector<std::uint64_t>> t(n + 1, std::vector<std::uint64_t>(k + 1, 0));
  for (unsigned j = 0; j <= k; ++j) t[0][j] = 1;
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = 1; j <= k; ++j) t[i][j] = t[i][j - 1] + (i >= j ? t[i - j][j] : 0);
  }
  return t[n][k];
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
  Rational rational(long lo, long hi, long max_den) {
    const long den = integer(1, max_den);
    return symred::make_rational(integer(lo * den, hi * den), den);
  }
  bool coin() { return integer(0, 1) == 1; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace oracle

#endif  // SYMRED_TESTS_ORACLES_HPP
