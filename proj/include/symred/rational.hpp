#ifndef SYMRED_RATIONAL_HPP
#define SYMRED_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace symred {

/// Exact fraction. GMP keeps every mpq_class result in lowest terms with a
/// positive denominator; values built from raw numerator/denominator pairs
/// go through make_rational, which canonicalizes.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p" or "p/q"; throws std::invalid_argument on malformed text or a
/// zero denominator.
Rational parse_rational(const std::string& text);

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Best rational approximation of x with denominator at most max_den
/// (continued-fraction convergents and semiconvergents).
Rational rationalize(double x, std::int64_t max_den = 1000000);

/// 2^-k as an exact value.
Rational pow2_inverse(unsigned k);

inline int sign(const Rational& q) { return sgn(q); }

}  // namespace symred

#endif  // SYMRED_RATIONAL_HPP
