#include "symred/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace symred {

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  }
  if (q.get_den() == 0) {
    throw std::invalid_argument("zero denominator: '" + text + "'");
  }
  q.canonicalize();
  return q;
}

Rational rationalize(double x, std::int64_t max_den) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument("cannot rationalize a non-finite value");
  }
  // Exact binary value of x, then continued-fraction expansion of it.
  Rational exact(x);
  if (exact.get_den() <= max_den) {
    return exact;
  }
  Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  Integer num = exact.get_num();
  Integer den = exact.get_den();
  const Integer cap = static_cast<long>(max_den);
  while (den != 0) {
    Integer a;
    mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    Integer q2 = a * q1 + q0;
    if (q2 > cap) {
      // Largest admissible semiconvergent, kept if it beats the last
      // convergent.
      Integer k = (cap - q0) / q1;
      Rational semi = make_rational(k * p1 + p0, k * q1 + q0);
      Rational conv = make_rational(p1, q1);
      Rational d_semi = abs(semi - exact);
      Rational d_conv = abs(conv - exact);
      return d_semi < d_conv ? semi : conv;
    }
    Integer p2 = a * p1 + p0;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    Integer r = num - a * den;
    num = den;
    den = r;
  }
  return make_rational(p1, q1);
}

Rational pow2_inverse(unsigned k) {
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, k);
  return make_rational(Integer(1), den);
}

}  // namespace symred
