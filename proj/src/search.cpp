#include "symred/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "symred/errors.hpp"
#include "symred/hyperbolic.hpp"
#include "symred/symmetric.hpp"
#include "symred/unipoly.hpp"

namespace symred {

namespace {

GridSpec make_grid(std::size_t dims, const Rational& lo, const Rational& hi, unsigned resolution) {
  return GridSpec{std::vector<double>(dims, lo.get_d()), std::vector<double>(dims, hi.get_d()), resolution};
}

void check_budget(const GridSpec& g, const SearchConfig& cfg) {
  if (g.num_points() > cfg.grid_budget) {
    throw BudgetError("grid of " + std::to_string(g.resolution) + "^" + std::to_string(g.dims()) +
                      " points exceeds the budget of " + std::to_string(cfg.grid_budget));
  }
}

std::vector<Rational> exact_grid_point(const GridSpec& g, std::uint64_t linear, const Rational& lo,
                                       const Rational& hi) {
  std::vector<Rational> t;
  for (auto i : g.unravel(linear)) t.push_back(grid_coordinate(lo, hi, g.resolution, i));
  return t;
}

Rational clamp(const Rational& v, const Rational& lo, const Rational& hi) {
  if (v < lo) return lo;
  if (v > hi) return hi;
  return v;
}

std::vector<Rational> rationalize_point(const std::vector<double>& x, const Rational& lo, const Rational& hi) {
  std::vector<Rational> t;
  for (double v : x) t.push_back(clamp(rationalize(v), lo, hi));
  return t;
}

Witness make_witness(const MultiPoly& f, const ReducedInstance& inst, std::vector<Rational> t,
                     const Rational& reduced_value) {
  Witness w;
  w.pattern = inst.pattern;
  w.mode = inst.mode;
  w.point = lift_point(inst.pattern, t, inst.mode);
  w.t = std::move(t);
  w.value = f.evaluate(w.point);
  if (w.value != reduced_value) {
    throw InternalError("witness: lifted value differs from the reduced value");
  }
  return w;
}

// Exact bisection of r along the segment a -> b, where r(a) and r(b) have
// opposite signs. Returns a point with |r| <= tol.
std::optional<std::vector<Rational>> bisect_segment(const MultiPoly& r, const std::vector<Rational>& a,
                                                    const std::vector<Rational>& b, const Rational& tol) {
  std::vector<MultiPoly> images;
  for (std::size_t j = 0; j < a.size(); ++j) {
    images.push_back(MultiPoly::constant(1, a[j]) + MultiPoly::variable(1, 0) * Rational(b[j] - a[j]));
  }
  const UniPoly u = UniPoly::from_multipoly(r.substitute(images));
  auto at = [&](const Rational& lam) {
    std::vector<Rational> p(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) p[j] = a[j] + lam * (b[j] - a[j]);
    return p;
  };
  Rational lo = 0, hi = 1;
  const int s_lo = u.sign_at(lo);
  if (s_lo == 0) return at(lo);
  if (u.sign_at(hi) == 0) return at(hi);
  for (int it = 0; it < 2000; ++it) {
    const Rational mid = (lo + hi) / 2;
    const Rational v = u.evaluate(mid);
    if (abs(v) <= tol) {
      const Rational q = simplest_rational_between(lo, hi);
      return at(abs(u.evaluate(q)) <= tol ? q : mid);
    }
    if (sgn(v) == s_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::nullopt;
}

}  // namespace

void SearchConfig::validate() const {
  if (!(lo < hi)) throw DomainError("search box must satisfy lo < hi");
  if (grid_resolution < 2) throw DomainError("grid resolution must be at least 2");
  if (!(tolerance > 0)) throw DomainError("tolerance must be positive");
}

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::counterexample_found:
      return "counterexample-found";
    case VerdictStatus::no_counterexample_found:
      return "no-counterexample-found";
    case VerdictStatus::zero_found:
      return "zero-found";
    case VerdictStatus::no_zero_found:
      return "no-zero-found";
  }
  return "unknown";
}

Rational grid_coordinate(const Rational& lo, const Rational& hi, unsigned resolution, std::uint32_t i) {
  return lo + (hi - lo) * make_rational(static_cast<long>(i), static_cast<long>(resolution - 1));
}

std::pair<Rational, Rational> instance_box(const SearchConfig& cfg, SearchMode mode) {
  if (mode == SearchMode::orthant && cfg.lo <= 0) {
    if (cfg.hi <= 0) throw DomainError("orthant search needs a box with hi > 0");
    return {cfg.hi * pow2_inverse(20), cfg.hi};
  }
  return {cfg.lo, cfg.hi};
}

InstanceMinimum minimize_instance(const ReducedInstance& inst, const SearchConfig& cfg) {
  cfg.validate();
  const std::size_t k = inst.pattern.num_parts();
  if (inst.reduced.num_vars() != k) throw DimensionError("minimize_instance: reduced polynomial arity");
  InstanceMinimum out;
  if (k == 0) {
    out.value = out.grid_value = inst.reduced.constant_term().get_d();
    return out;
  }
  const auto [lo, hi] = instance_box(cfg, inst.mode);
  const GridSpec grid = make_grid(k, lo, hi, cfg.grid_resolution);
  check_budget(grid, cfg);
  const CompiledPoly f(inst.reduced);
  const GridMin gm = grid_min(f, grid, cfg.parallel);
  out.grid_value = gm.value;
  out.grid_argmin = exact_grid_point(grid, gm.linear, lo, hi);

  std::vector<double> x = grid.point(gm.linear);
  double fx = gm.value;
  const double dlo = lo.get_d(), dhi = hi.get_d();
  double h = (dhi - dlo) / (cfg.grid_resolution - 1);
  std::vector<double> y(k);
  for (unsigned step = 0; step < cfg.descent_steps; ++step) {
    bool improved = true;
    for (int sweep = 0; improved && sweep < 16; ++sweep) {
      improved = false;
      for (std::size_t j = 0; j < k; ++j) {
        for (double dir : {1.0, -1.0}) {
          y = x;
          y[j] = std::clamp(x[j] + dir * h, dlo, dhi);
          const double fy = f(y);
          if (fy < fx) {
            x = y;
            fx = fy;
            improved = true;
          }
        }
      }
    }
    h /= 2;
  }
  out.value = fx;
  out.argmin = std::move(x);
  return out;
}

Verdict check_nonnegativity(const MultiPoly& f, SearchMode mode, const SearchConfig& cfg) {
  cfg.validate();
  if (!is_symmetric(f)) throw SymmetryError("check_nonnegativity: input is not symmetric");
  Verdict verdict;
  verdict.status = VerdictStatus::no_counterexample_found;
  verdict.best_value = std::numeric_limits<double>::infinity();
  for (const auto& inst : principle_instances(f, Principle::half_degree, mode)) {
    const InstanceMinimum m = minimize_instance(inst, cfg);
    verdict.best_value = std::min(verdict.best_value, m.value);
    if (inst.pattern.num_parts() == 0) {
      const Rational v = inst.reduced.constant_term();
      if (v < 0 && (!verdict.witness || v < verdict.witness->value)) {
        verdict.witness = make_witness(f, inst, {}, v);
      }
      continue;
    }
    const auto [lo, hi] = instance_box(cfg, mode);
    for (auto cand : {rationalize_point(m.argmin, lo, hi), m.grid_argmin}) {
      const Rational v = inst.reduced.evaluate(cand);
      if (v < 0 && (!verdict.witness || v < verdict.witness->value)) {
        verdict.witness = make_witness(f, inst, std::move(cand), v);
      }
    }
  }
  if (verdict.witness) verdict.status = VerdictStatus::counterexample_found;
  return verdict;
}

Verdict find_zero(const MultiPoly& f, const SearchConfig& cfg) {
  cfg.validate();
  if (!is_symmetric(f)) throw SymmetryError("find_zero: input is not symmetric");
  const Rational tol(cfg.tolerance);
  Verdict verdict;
  verdict.status = VerdictStatus::no_zero_found;
  verdict.best_value = std::numeric_limits<double>::infinity();
  const auto instances = principle_instances(f, Principle::degree, SearchMode::real_line);

  // Pass 1: grid points that vanish, and sign changes between neighbours.
  for (const auto& inst : instances) {
    const std::size_t k = inst.pattern.num_parts();
    const GridSpec grid = make_grid(k, cfg.lo, cfg.hi, cfg.grid_resolution);
    check_budget(grid, cfg);
    const auto values = grid_values(CompiledPoly(inst.reduced), grid, cfg.parallel);
    for (std::uint64_t i = 0; i < values.size(); ++i) {
      verdict.best_value = std::min(verdict.best_value, std::abs(values[i]));
      if (std::abs(values[i]) <= cfg.tolerance) {
        auto t = exact_grid_point(grid, i, cfg.lo, cfg.hi);
        const Rational v = inst.reduced.evaluate(t);
        if (abs(v) <= tol) {
          verdict.status = VerdictStatus::zero_found;
          verdict.witness = make_witness(f, inst, std::move(t), v);
          verdict.best_value = std::abs(v.get_d());
          return verdict;
        }
      }
    }
    if (auto sc = first_sign_change(values, grid, cfg.parallel)) {
      const auto a = exact_grid_point(grid, sc->from, cfg.lo, cfg.hi);
      const auto b = exact_grid_point(grid, sc->to, cfg.lo, cfg.hi);
      if (auto t = bisect_segment(inst.reduced, a, b, tol)) {
        const Rational v = inst.reduced.evaluate(*t);
        verdict.status = VerdictStatus::zero_found;
        verdict.witness = make_witness(f, inst, std::move(*t), v);
        verdict.best_value = std::abs(v.get_d());
        return verdict;
      }
    }
  }

  // Pass 2: touching zeros, found as near-zero minima of F^2.
  for (const auto& inst : instances) {
    ReducedInstance squared{inst.pattern, inst.reduced * inst.reduced, inst.mode};
    const InstanceMinimum m = minimize_instance(squared, cfg);
    verdict.best_value = std::min(verdict.best_value, std::sqrt(std::max(0.0, m.value)));
    auto t = rationalize_point(m.argmin, cfg.lo, cfg.hi);
    const Rational v = inst.reduced.evaluate(t);
    if (abs(v) <= tol) {
      verdict.status = VerdictStatus::zero_found;
      verdict.witness = make_witness(f, inst, std::move(t), v);
      verdict.best_value = std::abs(v.get_d());
      return verdict;
    }
  }
  return verdict;
}

GridOracleResult oracle_min_full(const MultiPoly& f, const SearchConfig& cfg) {
  cfg.validate();
  const GridSpec grid = make_grid(f.num_vars(), cfg.lo, cfg.hi, cfg.grid_resolution);
  check_budget(grid, cfg);
  const GridMin gm = grid_min(CompiledPoly(f), grid, cfg.parallel);
  return {gm.value, grid.point(gm.linear)};
}

bool oracle_sign_change(const MultiPoly& f, const SearchConfig& cfg) {
  cfg.validate();
  const GridSpec grid = make_grid(f.num_vars(), cfg.lo, cfg.hi, cfg.grid_resolution);
  check_budget(grid, cfg);
  const auto values = grid_values(CompiledPoly(f), grid, cfg.parallel);
  if (first_sign_change(values, grid, cfg.parallel)) return true;
  for (std::uint64_t i = 0; i < values.size(); ++i) {
    if (std::abs(values[i]) <= cfg.tolerance && f.evaluate(exact_grid_point(grid, i, cfg.lo, cfg.hi)) == 0) {
      return true;
    }
  }
  return false;
}

}  // namespace symred
