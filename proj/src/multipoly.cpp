#include "symred/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "symred/errors.hpp"

namespace symred {

namespace {

void require_same_vars(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": variable counts differ (" + std::to_string(a) +
                         " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

std::uint64_t Monomial::total_degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out(exps_);
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += other.exps_[i];
  return out;
}

bool GradedLexLess::operator()(const Monomial& a, const Monomial& b) const {
  const auto da = a.total_degree();
  const auto db = b.total_degree();
  if (da != db) return da < db;
  const auto& ea = a.exponents();
  const auto& eb = b.exponents();
  // Larger leading exponent means larger monomial.
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

MultiPoly MultiPoly::constant(std::size_t n, const Rational& c) {
  MultiPoly p(n);
  p.add_term(Monomial(n), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t n, std::size_t index) {
  if (index >= n) {
    throw DimensionError("variable index " + std::to_string(index + 1) + " exceeds n = " +
                         std::to_string(n));
  }
  Monomial m(n);
  m[index] = 1;
  return term(m, 1);
}

MultiPoly MultiPoly::term(const Monomial& m, const Rational& c) {
  MultiPoly p(m.size());
  p.add_term(m, c);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total_degree() == 0);
}

Rational MultiPoly::constant_term() const { return coefficient(Monomial(n_)); }

Rational MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<std::uint64_t> MultiPoly::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first.total_degree();
}

std::pair<Monomial, Rational> MultiPoly::lex_leading() const {
  if (terms_.empty()) throw EmptyPolynomialError("leading term of the zero polynomial");
  const auto& [m, c] = *terms_.rbegin();
  return {m, c};
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  require_same_vars(m.size(), n_, "add_term");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  require_same_vars(n_, rhs.n_, "add");
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  require_same_vars(n_, rhs.n_, "sub");
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
  require_same_vars(lhs.n_, rhs.n_, "mul");
  MultiPoly out(lhs.n_);
  for (const auto& [ma, ca] : lhs.terms_) {
    for (const auto& [mb, cb] : rhs.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) { return *this = *this * rhs; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coef] : terms_) coef *= c;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

MultiPoly MultiPoly::pow(std::uint32_t e) const {
  MultiPoly result = constant(n_, 1);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  require_same_vars(point.size(), n_, "evaluate");
  Rational sum = 0;
  Rational term;
  for (const auto& [m, c] : terms_) {
    term = c;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::uint32_t k = 0; k < m[i]; ++k) term *= point[i];
    }
    sum += term;
  }
  return sum;
}

double MultiPoly::evaluate(std::span<const double> point) const {
  require_same_vars(point.size(), n_, "evaluate");
  return CompiledPoly(*this)(point);
}

MultiPoly MultiPoly::substitute(std::span<const MultiPoly> images) const {
  require_same_vars(images.size(), n_, "substitute");
  std::size_t m = images.empty() ? 0 : images.front().num_vars();
  for (const auto& img : images) require_same_vars(img.num_vars(), m, "substitute images");

  // powers[i][k] = images[i]^k, filled lazily.
  std::vector<std::vector<MultiPoly>> powers(n_);
  auto power = [&](std::size_t i, std::uint32_t k) -> const MultiPoly& {
    auto& row = powers[i];
    if (row.empty()) row.push_back(MultiPoly::constant(m, 1));
    while (row.size() <= k) row.push_back(row.back() * images[i]);
    return row[k];
  };

  MultiPoly out(m);
  for (const auto& [mono, c] : terms_) {
    MultiPoly t = MultiPoly::constant(m, c);
    for (std::size_t i = 0; i < n_ && !t.is_zero(); ++i) {
      if (mono[i] > 0) t = t * power(i, mono[i]);
    }
    out += t;
  }
  return out;
}

MultiPoly MultiPoly::swap_variables(std::size_t i, std::size_t j) const {
  MultiPoly out(n_);
  for (const auto& [m, c] : terms_) {
    Monomial s = m;
    std::swap(s[i], s[j]);
    out.terms_.emplace(std::move(s), c);
  }
  return out;
}

std::string MultiPoly::to_string(const std::string& prefix) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || m.total_degree() == 0) {
      os << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < n_; ++i) {
      if (m[i] == 0) continue;
      if (wrote) os << "*";
      os << prefix << (i + 1);
      if (m[i] > 1) os << "^" << m[i];
      wrote = true;
    }
  }
  return os.str();
}

MultiPoly poly_arith(PolyOp op, const MultiPoly& lhs, const MultiPoly& rhs) {
  switch (op) {
    case PolyOp::add:
      return lhs + rhs;
    case PolyOp::sub:
      return lhs - rhs;
    case PolyOp::mul:
      return lhs * rhs;
  }
  throw InternalError("unknown polynomial operation");
}

MultiPoly poly_scale(const MultiPoly& lhs, const Rational& c) { return lhs * c; }

CompiledPoly::CompiledPoly(const MultiPoly& p) : n_(p.num_vars()) {
  coeffs_.reserve(p.num_terms());
  exps_.reserve(p.num_terms() * n_);
  for (const auto& [m, c] : p.terms()) {
    coeffs_.push_back(c.get_d());
    for (std::size_t i = 0; i < n_; ++i) {
      exps_.push_back(m[i]);
      max_exp_ = std::max(max_exp_, m[i]);
    }
  }
}

double CompiledPoly::operator()(std::span<const double> point) const {
  double sum = 0.0;
  const std::uint32_t* e = exps_.data();
  for (std::size_t t = 0; t < coeffs_.size(); ++t, e += n_) {
    double v = coeffs_[t];
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::uint32_t k = 0; k < e[i]; ++k) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

}  // namespace symred
