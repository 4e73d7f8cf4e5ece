#ifndef SYMRED_SYMMETRIC_HPP
#define SYMRED_SYMMETRIC_HPP

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "symred/errors.hpp"
#include "symred/multipoly.hpp"

namespace symred {

/// True iff F is invariant under the adjacent transpositions (x_i x_{i+1}),
/// which generate the symmetric group.
bool is_symmetric(const MultiPoly& f);

/// e_k in n variables; requires 1 <= k <= n.
MultiPoly elementary_symmetric(unsigned k, std::size_t n);

/// p_k = x_1^k + ... + x_n^k; requires k >= 1.
MultiPoly power_sum(unsigned k, std::size_t n);

enum class NewtonDirection { p_from_e, e_from_p };

namespace detail {

template <class T>
T scaled(const T& v, const Rational& c) {
  return v * c;
}

}  // namespace detail

/// Newton identities
///   k (-1)^k e_k + sum_{i=1}^{k} (-1)^{i+k} p_i e_{k-i} = 0,   e_0 = 1,
/// solved for the highest-index unknown.
///
/// p_from_e: `values` holds e_1..e_m with m >= min(up_to, n); e_j for j > n is
/// taken as zero. Returns p_1..p_{up_to}.
/// e_from_p: `values` holds p_1..p_m with m >= up_to. Returns e_1..e_{up_to}.
///
/// T is Rational or MultiPoly; `one` supplies the unit (and the ambient
/// variable count for polynomials).
template <class T>
std::vector<T> newton_convert(NewtonDirection dir, std::span<const T> values, unsigned up_to,
                              std::size_t n, const T& one) {
  if (up_to < 1) throw DomainError("newton_convert: upTo must be at least 1");
  const T zero = detail::scaled(one, Rational(0));
  std::vector<T> e{one};  // e[0] = 1
  std::vector<T> p{zero};  // p[0] unused
  if (dir == NewtonDirection::p_from_e) {
    const std::size_t need = std::min<std::size_t>(up_to, n);
    if (values.size() < need) throw DomainError("newton_convert: insufficient elementary values");
    for (unsigned j = 1; j <= up_to; ++j) e.push_back(j <= n ? values[j - 1] : zero);
    for (unsigned k = 1; k <= up_to; ++k) {
      // p_k = -k (-1)^k e_k - sum_{i<k} (-1)^{i+k} p_i e_{k-i}
      T pk = detail::scaled(e[k], Rational(k % 2 == 0 ? -static_cast<long>(k) : static_cast<long>(k)));
      for (unsigned i = 1; i < k; ++i) {
        T prod = p[i] * e[k - i];
        if ((i + k) % 2 == 0) {
          pk -= prod;
        } else {
          pk += prod;
        }
      }
      p.push_back(pk);
    }
    return {p.begin() + 1, p.end()};
  }
  if (values.size() < up_to) throw DomainError("newton_convert: insufficient power sums");
  for (unsigned j = 1; j <= up_to; ++j) p.push_back(values[j - 1]);
  for (unsigned k = 1; k <= up_to; ++k) {
    // e_k = (1/k) sum_{i=1}^{k} (-1)^{i+1} p_i e_{k-i}
    T ek = zero;
    for (unsigned i = 1; i <= k; ++i) {
      T prod = p[i] * e[k - i];
      if (i % 2 == 1) {
        ek += prod;
      } else {
        ek -= prod;
      }
    }
    e.push_back(detail::scaled(ek, make_rational(1, k)));
  }
  return {e.begin() + 1, e.end()};
}

/// G in variables z_1..z_n with F = G(e_1, ..., e_n).
struct GPoly {
  MultiPoly inner;
  std::uint64_t source_degree = 0;
  std::size_t n = 0;

  /// sum_i i * (exponent of z_i), maximized over monomials; 0 for zero G.
  std::uint64_t weighted_degree() const;
  /// Throws InternalError unless weighted degree <= source_degree and no
  /// z_j with j > min(n, source_degree) appears.
  void check_invariants() const;
};

/// Weighted degree of a single z-monomial (weight of z_i is i).
std::uint64_t weighted_degree(const Monomial& m);

/// Rewrites a symmetric F in the elementary symmetric basis by repeatedly
/// cancelling the graded-lex leading term a x^g with
/// a e_1^{g1-g2} e_2^{g2-g3} ... e_n^{gn}. Throws SymmetryError for a
/// non-symmetric input.
GPoly decompose_to_elementary(const MultiPoly& f);

/// As above, also reporting the number of reduction steps taken.
GPoly decompose_to_elementary(const MultiPoly& f, std::size_t& steps);

/// G(e_1, ..., e_n) expanded back to a polynomial in x_1..x_n.
MultiPoly expand_elementary(const GPoly& g);

/// G = g1(z_1..z_k) + sum_{i>k} tail[i](z_1..z_{d-i}) * z_i with k = floor(d/2).
/// tail keys are 1-based z indices.
struct StructuralSplit {
  GPoly g1;
  std::map<std::size_t, GPoly> tail;

  GPoly reassemble() const;
};

StructuralSplit structural_split(const GPoly& g);

}  // namespace symred

#endif  // SYMRED_SYMMETRIC_HPP
