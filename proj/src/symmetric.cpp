#include "symred/symmetric.hpp"

#include <algorithm>
#include <string>

namespace symred {

namespace {

// Number of monomials of total degree <= d in n variables, C(n+d, d),
// saturating at SIZE_MAX.
std::size_t monomial_count(std::size_t n, std::uint64_t d) {
  Integer c;
  mpz_bin_uiui(c.get_mpz_t(), n + d, d);
  return c.fits_ulong_p() ? c.get_ui() : SIZE_MAX;
}

void for_each_subset(std::size_t n, unsigned k, std::size_t start, Monomial& m,
                     MultiPoly& out) {
  if (k == 0) {
    out.add_term(m, 1);
    return;
  }
  for (std::size_t i = start; i + k <= n; ++i) {
    m[i] = 1;
    for_each_subset(n, k - 1, i + 1, m, out);
    m[i] = 0;
  }
}

}  // namespace

bool is_symmetric(const MultiPoly& f) {
  const std::size_t n = f.num_vars();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (f.swap_variables(i, i + 1) != f) return false;
  }
  return true;
}

MultiPoly elementary_symmetric(unsigned k, std::size_t n) {
  if (k < 1 || k > n) {
    throw DomainError("elementary_symmetric: k = " + std::to_string(k) + " outside 1.." +
                      std::to_string(n));
  }
  MultiPoly out(n);
  Monomial m(n);
  for_each_subset(n, k, 0, m, out);
  return out;
}

MultiPoly power_sum(unsigned k, std::size_t n) {
  if (k < 1) throw DomainError("power_sum: k must be at least 1");
  MultiPoly out(n);
  for (std::size_t i = 0; i < n; ++i) {
    Monomial m(n);
    m[i] = k;
    out.add_term(m, 1);
  }
  return out;
}

std::uint64_t weighted_degree(const Monomial& m) {
  std::uint64_t w = 0;
  for (std::size_t i = 0; i < m.size(); ++i) w += (i + 1) * std::uint64_t{m[i]};
  return w;
}

std::uint64_t GPoly::weighted_degree() const {
  std::uint64_t w = 0;
  for (const auto& [m, c] : inner.terms()) w = std::max(w, symred::weighted_degree(m));
  return w;
}

void GPoly::check_invariants() const {
  if (inner.num_vars() != n) throw InternalError("GPoly: variable count differs from n");
  if (weighted_degree() > source_degree) {
    throw InternalError("GPoly: weighted degree " + std::to_string(weighted_degree()) +
                        " exceeds source degree " + std::to_string(source_degree));
  }
  const std::uint64_t limit = std::min<std::uint64_t>(n, source_degree);
  for (const auto& [m, c] : inner.terms()) {
    for (std::size_t i = limit; i < m.size(); ++i) {
      if (m[i] != 0) throw InternalError("GPoly: z_" + std::to_string(i + 1) + " beyond the degree");
    }
  }
}

GPoly decompose_to_elementary(const MultiPoly& f) {
  std::size_t steps = 0;
  return decompose_to_elementary(f, steps);
}

GPoly decompose_to_elementary(const MultiPoly& f, std::size_t& steps) {
  if (!is_symmetric(f)) throw SymmetryError("decompose_to_elementary: input is not symmetric");
  const std::size_t n = f.num_vars();
  const std::uint64_t d = f.degree().value_or(0);

  std::vector<MultiPoly> e;
  for (std::size_t k = 1; k <= n; ++k) e.push_back(elementary_symmetric(static_cast<unsigned>(k), n));
  // e_powers[i][j] = e_{i+1}^j
  std::vector<std::vector<MultiPoly>> e_powers(n);
  auto e_power = [&](std::size_t i, std::uint32_t j) -> const MultiPoly& {
    auto& row = e_powers[i];
    if (row.empty()) row.push_back(MultiPoly::constant(n, 1));
    while (row.size() <= j) row.push_back(row.back() * e[i]);
    return row[j];
  };

  const std::size_t bound = monomial_count(n, d);
  GPoly g{MultiPoly(n), d, n};
  MultiPoly residual = f;
  steps = 0;
  while (!residual.is_zero()) {
    if (++steps > bound) throw InternalError("decompose_to_elementary: step bound exceeded");
    auto [gamma, a] = residual.lex_leading();
    Monomial z(n);
    MultiPoly h = MultiPoly::constant(n, a);
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint32_t next = (i + 1 < n) ? gamma[i + 1] : 0;
      if (gamma[i] < next) {
        throw InternalError("decompose_to_elementary: leading exponent not weakly decreasing");
      }
      z[i] = gamma[i] - next;
      if (z[i] > 0) h = h * e_power(i, z[i]);
    }
    residual -= h;
    g.inner.add_term(z, a);
  }
  return g;
}

MultiPoly expand_elementary(const GPoly& g) {
  std::vector<MultiPoly> e;
  for (std::size_t k = 1; k <= g.n; ++k) e.push_back(elementary_symmetric(static_cast<unsigned>(k), g.n));
  return g.inner.substitute(e);
}

GPoly StructuralSplit::reassemble() const {
  GPoly out = g1;
  for (const auto& [idx, part] : tail) {
    out.inner += part.inner * MultiPoly::variable(out.n, idx - 1);
  }
  return out;
}

StructuralSplit structural_split(const GPoly& g) {
  g.check_invariants();
  const std::uint64_t d = g.source_degree;
  const std::size_t k = static_cast<std::size_t>(d / 2);
  StructuralSplit split{GPoly{MultiPoly(g.n), d, g.n}, {}};
  for (const auto& [m, c] : g.inner.terms()) {
    std::size_t high = 0;
    std::size_t high_count = 0;
    for (std::size_t i = k; i < m.size(); ++i) {
      if (m[i] > 0) {
        high = i + 1;
        high_count += m[i];
      }
    }
    if (high_count == 0) {
      split.g1.inner.add_term(m, c);
      continue;
    }
    if (high_count > 1) {
      throw InternalError("structural_split: monomial with two variables of index > floor(d/2)");
    }
    Monomial rest = m;
    rest[high - 1] = 0;
    auto [it, inserted] = split.tail.try_emplace(high, GPoly{MultiPoly(g.n), d - high, g.n});
    it->second.inner.add_term(rest, c);
  }
  for (const auto& [idx, part] : split.tail) part.check_invariants();
  return split;
}

}  // namespace symred
