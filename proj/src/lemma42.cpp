#include "symred/lemma42.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "symred/errors.hpp"
#include "symred/hyperbolic.hpp"
#include "symred/symmetric.hpp"
#include "symred/unipoly.hpp"

namespace symred {

namespace {

struct Candidate {
  UniPoly q;  // degree-s factor
  UniPoly f;  // q * prod(t - y_i)
  Rational objective;
};

// Monic q of degree s with the leading s+1 coefficients of q * r equal to
// those of t^n - a_1 t^{n-1} + a_2 t^{n-2} - ...
UniPoly complete_factor(const std::vector<Rational>& a, const UniPoly& r) {
  const unsigned s = static_cast<unsigned>(a.size());
  const unsigned m = r.deg();  // n - s
  // Leading-first coefficient j of r and of the target.
  auto r_lead = [&](unsigned j) { return j <= m ? r.coeff(m - j) : Rational(0); };
  std::vector<Rational> q_lead(s + 1);
  q_lead[0] = 1;
  for (unsigned j = 1; j <= s; ++j) {
    Rational target = (j % 2 == 0) ? a[j - 1] : Rational(-a[j - 1]);
    for (unsigned i = 0; i < j; ++i) target -= q_lead[i] * r_lead(j - i);
    q_lead[j] = target;
  }
  return UniPoly::from_leading_first(q_lead);
}

std::optional<Candidate> evaluate_candidate(const SliceExperiment& exp, const std::vector<Rational>& free_roots) {
  const UniPoly r = UniPoly::from_roots(free_roots);
  UniPoly q = complete_factor(exp.fixed, r);
  if (!is_hyperbolic(q).hyperbolic) return std::nullopt;
  UniPoly f = q * r;
  const auto z = f.elementary_values();
  Rational obj = 0;
  for (unsigned i = 0; i < exp.n; ++i) obj += exp.objective[i] * z[i];
  return Candidate{std::move(q), std::move(f), std::move(obj)};
}

std::vector<double> root_vector(const Candidate& c, const std::vector<Rational>& free_roots) {
  std::vector<double> roots;
  for (const auto& root : hyperbolic_roots(c.q).roots) roots.insert(roots.end(), root.multiplicity, root.value);
  for (const auto& y : free_roots) roots.push_back(y.get_d());
  std::sort(roots.begin(), roots.end());
  return roots;
}

// Solves the dense system a x = b in place (partial pivoting); false when
// singular.
bool solve_dense(std::vector<std::vector<double>> a, std::vector<double>& b) {
  const std::size_t k = b.size();
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < k; ++r) {
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    }
    if (std::abs(a[piv][c]) < 1e-300) return false;
    std::swap(a[c], a[piv]);
    std::swap(b[c], b[piv]);
    for (std::size_t r = c + 1; r < k; ++r) {
      const double f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < k; ++j) a[r][j] -= f * a[c][j];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t c = k; c-- > 0;) {
    for (std::size_t j = c + 1; j < k; ++j) b[c] -= a[c][j] * b[j];
    b[c] /= a[c][c];
  }
  return true;
}

// e_1..e_n of a double root vector.
std::vector<double> elementary_of(const std::vector<double>& x) {
  std::vector<double> e(x.size() + 1, 0.0);
  e[0] = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j >= 1; --j) e[j] += e[j - 1] * x[i];
  }
  return {e.begin() + 1, e.end()};
}

// Minimum of c.z over root vectors with <= s distinct values meeting the
// slice constraints, by multistart Newton on the power-sum equations.
std::optional<double> pattern_restricted_minimum(const SliceExperiment& exp, double radius) {
  const auto p_exact = newton_convert<Rational>(NewtonDirection::p_from_e, exp.fixed, exp.s, exp.n, Rational(1));
  std::vector<double> target;
  for (const auto& v : p_exact) target.push_back(v.get_d());
  std::optional<double> best;
  for (const auto& pat : enumerate_patterns(exp.n, exp.s, SearchMode::real_line)) {
    const std::size_t k = pat.num_parts();
    unsigned res = std::min(exp.cfg.grid_resolution, 17u);
    while (res > 2 && std::pow(static_cast<double>(res), static_cast<double>(k)) > 20000.0) --res;
    GridSpec starts{std::vector<double>(k, -radius), std::vector<double>(k, radius), res};
    for (std::uint64_t idx = 0; idx < starts.num_points(); ++idx) {
      std::vector<double> t = starts.point(idx);
      bool converged = false;
      for (int it = 0; it < 60 && !converged; ++it) {
        std::vector<double> rhs(k);
        std::vector<std::vector<double>> jac(k, std::vector<double>(k));
        double worst = 0.0;
        for (std::size_t j = 1; j <= k; ++j) {
          double val = -target[j - 1];
          for (std::size_t i = 0; i < k; ++i) {
            val += pat.parts[i] * std::pow(t[i], static_cast<double>(j));
            jac[j - 1][i] = pat.parts[i] * static_cast<double>(j) * std::pow(t[i], static_cast<double>(j - 1));
          }
          rhs[j - 1] = -val;
          worst = std::max(worst, std::abs(val) / (1.0 + std::abs(target[j - 1])));
        }
        if (worst < 1e-12) {
          converged = true;
          break;
        }
        if (!solve_dense(jac, rhs)) break;
        for (std::size_t i = 0; i < k; ++i) t[i] += rhs[i];
      }
      if (!converged) continue;
      bool feasible = true;
      for (std::size_t j = k + 1; j <= exp.s && feasible; ++j) {
        double val = -target[j - 1];
        for (std::size_t i = 0; i < k; ++i) val += pat.parts[i] * std::pow(t[i], static_cast<double>(j));
        feasible = std::abs(val) <= 1e-7 * (1.0 + std::abs(target[j - 1]));
      }
      if (!feasible) continue;
      const auto z = elementary_of(lift_point(pat, t));
      double obj = 0.0;
      for (unsigned i = 0; i < exp.n; ++i) obj += exp.objective[i].get_d() * z[i];
      if (!best || obj < *best) best = obj;
    }
  }
  return best;
}

}  // namespace

int clustered_count(std::vector<double> values, double tolerance) {
  if (values.empty()) return 0;
  std::sort(values.begin(), values.end());
  int groups = 1;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] - values[i - 1] > tolerance) ++groups;
  }
  return groups;
}

SliceReport lemma42_experiment(const SliceExperiment& exp) {
  exp.cfg.validate();
  if (exp.s < 2 || exp.s > exp.n) throw DomainError("lemma42: s must satisfy 2 <= s <= n");
  if (exp.fixed.size() != exp.s) throw DimensionError("lemma42: expected s fixed coefficients");
  if (exp.objective.size() != exp.n) throw DimensionError("lemma42: objective must have length n");

  SliceReport rep;
  rep.cluster_tolerance = 1e-4 * Rational(exp.cfg.hi - exp.cfg.lo).get_d();
  rep.objective_constant = std::all_of(exp.objective.begin() + exp.s, exp.objective.end(),
                                       [](const Rational& c) { return c == 0; });

  // Every root lies in the ball p_2 = a_1^2 - 2 a_2.
  const Rational p2 = exp.fixed[0] * exp.fixed[0] - 2 * exp.fixed[1];
  if (p2 < 0) return rep;
  const double radius = std::sqrt(p2.get_d());
  const Rational r_bound = make_rational(static_cast<long>(std::ceil(radius * 1024.0)) + 1, 1024);
  const Rational lo = std::max(exp.cfg.lo, Rational(-r_bound));
  const Rational hi = std::min(exp.cfg.hi, r_bound);
  if (!(lo < hi)) return rep;

  const unsigned free_count = exp.n - exp.s;
  std::mt19937_64 rng(exp.cfg.seed);
  constexpr unsigned kLevels = 1u << 20;
  std::uniform_int_distribution<unsigned> level(0, kLevels);
  auto draw = [&]() -> Rational { return lo + (hi - lo) * make_rational(level(rng), kLevels); };

  std::optional<Candidate> best;
  std::vector<Rational> best_free;
  std::optional<Rational> first_objective;
  rep.samples_agree = true;
  const unsigned samples = free_count == 0 ? 1 : exp.sample_count;
  for (unsigned i = 0; i < samples; ++i) {
    std::vector<Rational> y(free_count);
    for (auto& v : y) v = draw();
    auto cand = evaluate_candidate(exp, y);
    if (!cand) continue;
    ++rep.feasible_samples;
    if (!first_objective) first_objective = cand->objective;
    if (cand->objective != *first_objective) rep.samples_agree = false;
    if (!best || cand->objective < best->objective) {
      best = std::move(cand);
      best_free = y;
    }
  }
  if (!best) {
    rep.samples_agree = false;
    return rep;
  }
  rep.empty_slice = false;

  // Coordinate descent on the free roots with step halving; every accepted
  // move stays feasible and strictly lowers the exact objective.
  if (free_count > 0) {
    Rational h = (hi - lo) / exp.cfg.grid_resolution;
    for (unsigned step = 0; step < exp.cfg.descent_steps; ++step) {
      bool improved = true;
      for (int sweep = 0; improved && sweep < 16; ++sweep) {
        improved = false;
        for (unsigned j = 0; j < free_count; ++j) {
          for (int dir : {1, -1}) {
            std::vector<Rational> y = best_free;
            y[j] = std::clamp(Rational(y[j] + dir * h), lo, hi);
            auto cand = evaluate_candidate(exp, y);
            if (cand && cand->objective < best->objective) {
              best = std::move(cand);
              best_free = std::move(y);
              improved = true;
            }
          }
        }
      }
      h /= 2;
    }
  }

  SliceSample sample;
  sample.fixed_coeffs = exp.fixed;
  sample.root_sample = root_vector(*best, best_free);
  sample.coefficient_vector = best->f.elementary_values();
  sample.objective = best->objective;
  rep.clustered_distinct = clustered_count(sample.root_sample, rep.cluster_tolerance);
  rep.exact_rank = is_hyperbolic(best->f).distinct_roots;
  // A constant objective is minimized by every slice point, pattern points included.
  rep.within_bound = rep.objective_constant || rep.clustered_distinct <= static_cast<int>(exp.s);
  rep.best = std::move(sample);
  rep.pattern_restricted_min = pattern_restricted_minimum(exp, radius);
  return rep;
}

}  // namespace symred
