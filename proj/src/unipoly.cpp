#include "symred/unipoly.hpp"

#include <sstream>

#include "symred/errors.hpp"

namespace symred {

UniPoly UniPoly::from_ascending(std::vector<Rational> coeffs) {
  UniPoly p;
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

UniPoly UniPoly::from_leading_first(std::span<const Rational> coeffs) {
  return from_ascending(std::vector<Rational>(coeffs.rbegin(), coeffs.rend()));
}

UniPoly UniPoly::constant(const Rational& c) { return from_ascending({c}); }

UniPoly UniPoly::monomial(unsigned k, const Rational& c) {
  std::vector<Rational> v(k + 1, Rational(0));
  v[k] = c;
  return from_ascending(std::move(v));
}

UniPoly UniPoly::from_roots(std::span<const Rational> roots) {
  UniPoly p = constant(1);
  for (const auto& r : roots) p = p * from_ascending({-r, Rational(1)});
  return p;
}

UniPoly UniPoly::from_elementary(std::span<const Rational> z) {
  const std::size_t n = z.size();
  std::vector<Rational> asc(n + 1);
  asc[n] = 1;
  for (std::size_t j = 1; j <= n; ++j) asc[n - j] = (j % 2 == 0) ? z[j - 1] : Rational(-z[j - 1]);
  return from_ascending(std::move(asc));
}

UniPoly UniPoly::from_multipoly(const MultiPoly& p) {
  if (p.num_vars() != 1) throw DimensionError("univariate view needs exactly one variable");
  std::vector<Rational> asc(p.degree().value_or(0) + 1, Rational(0));
  for (const auto& [m, c] : p.terms()) asc[m[0]] = c;
  return from_ascending(std::move(asc));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<unsigned> UniPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<unsigned>(coeffs_.size() - 1);
}

unsigned UniPoly::deg() const {
  if (coeffs_.empty()) throw EmptyPolynomialError("degree of the zero polynomial");
  return static_cast<unsigned>(coeffs_.size() - 1);
}

const Rational& UniPoly::leading() const {
  if (coeffs_.empty()) throw EmptyPolynomialError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational UniPoly::coeff(unsigned i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

std::vector<Rational> UniPoly::leading_first() const {
  return std::vector<Rational>(coeffs_.rbegin(), coeffs_.rend());
}

std::vector<Rational> UniPoly::elementary_values() const {
  if (!is_monic()) throw DomainError("elementary values need a monic polynomial");
  const unsigned n = deg();
  std::vector<Rational> z(n);
  for (unsigned j = 1; j <= n; ++j) {
    z[j - 1] = (j % 2 == 0) ? coeffs_[n - j] : Rational(-coeffs_[n - j]);
  }
  return z;
}

UniPoly UniPoly::normalized() const {
  UniPoly out(*this);
  Rational inv = 1 / leading();
  out *= inv;
  return out;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return from_ascending(std::move(d));
}

Rational UniPoly::evaluate(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

double UniPoly::evaluate(double t) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + it->get_d();
  return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
  for (auto& a : coeffs_) a *= c;
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly::from_ascending(std::move(out));
}

UniPoly UniPoly::pow(unsigned e) const {
  UniPoly result = constant(1);
  for (unsigned i = 0; i < e; ++i) result = result * *this;
  return result;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
  if (divisor.is_zero()) throw EmptyPolynomialError("division by the zero polynomial");
  UniPoly rem(*this);
  const unsigned dd = divisor.deg();
  if (rem.is_zero() || rem.deg() < dd) return {UniPoly{}, rem};
  std::vector<Rational> quot(rem.deg() - dd + 1, Rational(0));
  const Rational& lead = divisor.leading();
  while (!rem.is_zero() && rem.deg() >= dd) {
    const unsigned shift = rem.deg() - dd;
    Rational q = rem.leading() / lead;
    quot[shift] = q;
    for (unsigned i = 0; i <= dd; ++i) rem.coeffs_[i + shift] -= q * divisor.coeffs_[i];
    rem.trim();
  }
  return {from_ascending(std::move(quot)), rem};
}

UniPoly UniPoly::exact_div(const UniPoly& divisor) const {
  auto [q, r] = divmod(divisor);
  if (!r.is_zero()) throw DomainError("inexact polynomial division");
  return q;
}

unsigned UniPoly::zero_order() const {
  if (is_zero()) throw EmptyPolynomialError("zero order of the zero polynomial");
  unsigned k = 0;
  while (coeffs_[k] == 0) ++k;
  return k;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || i == 0) {
      os << mag.get_str();
      if (i > 0) os << "*";
    }
    if (i > 0) os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = x.divmod(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.is_zero() ? x : x.normalized();
}

std::vector<UniPoly> square_free_decomposition(const UniPoly& f) {
  if (f.is_zero()) throw EmptyPolynomialError("square-free decomposition of zero");
  // Yun's algorithm.
  std::vector<UniPoly> out;
  UniPoly monic = f.normalized();
  if (monic.deg() == 0) return out;
  UniPoly df = monic.derivative();
  UniPoly a = gcd(monic, df);
  UniPoly b = monic.exact_div(a);
  UniPoly c = df.exact_div(a);
  UniPoly d = c - b.derivative();
  while (b.deg() > 0) {
    UniPoly g = gcd(b, d);
    out.push_back(g);
    b = b.exact_div(g);
    c = d.exact_div(g);
    d = c - b.derivative();
  }
  while (!out.empty() && out.back().deg() == 0) out.pop_back();
  return out;
}

}  // namespace symred
