#include "symred/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "symred/errors.hpp"
#include "symred/hyperbolic.hpp"
#include "symred/lemma42.hpp"
#include "symred/parser.hpp"
#include "symred/reduction.hpp"
#include "symred/search.hpp"
#include "symred/symmetric.hpp"

namespace symred {

namespace {

using nlohmann::ordered_json;

struct Options {
  std::size_t n = 0;  // 0: deduce from the input
  bool orthant = false;
  std::string box = "-10:10";
  unsigned grid = 33;
  double tol = 1e-9;
  unsigned steps = 40;
  std::uint64_t seed = 0;
  bool json = false;
  std::string principle = "half";
  bool serial = false;

  std::string polynomial;
  std::string coeffs;
  unsigned s = 2;
  std::string fixed;
  std::string objective;
  unsigned samples = 2000;
  double root_tol = 1e-12;
};

std::string decimal(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

ordered_json approx(double v) { return ordered_json{{"approx", decimal(v)}}; }

ordered_json exact_list(const std::vector<Rational>& v) {
  ordered_json arr = ordered_json::array();
  for (const auto& q : v) arr.push_back(q.get_str());
  return arr;
}

std::string join(const std::vector<Rational>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
  return s;
}

std::string mode_name(SearchMode m) { return m == SearchMode::orthant ? "orthant" : "real-line"; }

ordered_json pattern_json(const MultiplicityPattern& p) {
  return ordered_json{{"parts", p.parts}, {"zero_block", p.zero_block}};
}

SearchConfig search_config(const Options& o) {
  SearchConfig cfg;
  const auto colon = o.box.find(':');
  if (colon == std::string::npos) throw ParseError("--box expects LO:HI", 1, 1);
  try {
    cfg.lo = parse_rational(o.box.substr(0, colon));
    cfg.hi = parse_rational(o.box.substr(colon + 1));
  } catch (const std::invalid_argument&) {
    throw ParseError("--box expects rational bounds LO:HI", 1, colon + 1);
  }
  cfg.grid_resolution = o.grid;
  cfg.descent_steps = o.steps;
  cfg.tolerance = o.tol;
  cfg.seed = o.seed;
  cfg.parallel = !o.serial;
  cfg.validate();
  return cfg;
}

ordered_json config_json(const Options& o, const SearchConfig& cfg, std::size_t n) {
  return ordered_json{{"n", n},
                      {"mode", o.orthant ? "orthant" : "real-line"},
                      {"box", {cfg.lo.get_str(), cfg.hi.get_str()}},
                      {"grid", cfg.grid_resolution},
                      {"steps", cfg.descent_steps},
                      {"tol", approx(cfg.tolerance)},
                      {"seed", cfg.seed},
                      {"principle", o.principle}};
}

MultiPoly read_polynomial(const Options& o) {
  return parse_polynomial(o.polynomial, o.n == 0 ? std::nullopt : std::optional<std::size_t>(o.n));
}

Principle principle_of(const Options& o) {
  if (o.principle == "half") return Principle::half_degree;
  if (o.principle == "degree") return Principle::degree;
  throw DomainError("--principle must be 'degree' or 'half'");
}

void print_verdict(std::ostream& out, const Verdict& v) {
  out << "verdict: " << to_string(v.status) << "\n";
  if (v.witness) {
    out << "witness pattern: " << v.witness->pattern.to_string() << "\n";
    out << "witness t: " << join(v.witness->t) << "\n";
    out << "witness point: " << join(v.witness->point) << "\n";
    out << "witness value: " << v.witness->value.get_str() << "\n";
  }
  out << "best value (approx): " << decimal(v.best_value) << "\n";
  if (v.status == VerdictStatus::no_counterexample_found) {
    out << "note: no counterexample on the searched grid; this is evidence, not a proof of nonnegativity\n";
  }
}

ordered_json verdict_json(const Verdict& v) {
  return ordered_json{{"status", to_string(v.status)}, {"best_value", approx(v.best_value)}};
}

ordered_json witness_json(const Witness& w) {
  return ordered_json{{"pattern", pattern_json(w.pattern)},
                      {"mode", mode_name(w.mode)},
                      {"t", exact_list(w.t)},
                      {"point", exact_list(w.point)},
                      {"value", w.value.get_str()}};
}

int cmd_decompose(const Options& o, ordered_json& rep, std::ostream& out) {
  const MultiPoly f = read_polynomial(o);
  const GPoly g = decompose_to_elementary(f);
  const StructuralSplit split = structural_split(g);
  ordered_json tail = ordered_json::object();
  for (const auto& [i, part] : split.tail) tail["z" + std::to_string(i)] = part.inner.to_string("z");
  rep["result"] = {{"n", g.n},
                   {"source_degree", g.source_degree},
                   {"g", g.inner.to_string("z")},
                   {"g1", split.g1.inner.to_string("z")},
                   {"tail", tail}};
  if (!o.json) {
    out << "G = " << g.inner.to_string("z") << "\n";
    out << "n = " << g.n << ", degree d = " << g.source_degree << ", floor(d/2) = " << g.source_degree / 2 << "\n";
    out << "G1 = " << split.g1.inner.to_string("z") << "\n";
    for (const auto& [i, part] : split.tail) {
      out << "coefficient of z" << i << " = " << part.inner.to_string("z") << "\n";
    }
  }
  return kExitClean;
}

int cmd_hyperbolic(const Options& o, ordered_json& rep, std::ostream& out, std::ostream& err) {
  const auto coeffs = parse_rational_list(o.coeffs);
  UniPoly f = UniPoly::from_leading_first(coeffs);
  if (f.is_zero() || f.deg() < 1) throw DomainError("hyperbolic: need a polynomial of degree at least 1");
  if (!f.is_monic()) {
    err << "warning: normalizing by the leading coefficient " << f.leading().get_str() << "\n";
    f = f.normalized();
  }
  const SymMatrix s = sylvester_matrix(f);
  const InertiaResult in = inertia(s);
  const bool hyp = in.signature == in.rank;
  ordered_json result{{"polynomial", f.to_string()},
                      {"coefficients", exact_list(f.leading_first())},
                      {"sylvester", ordered_json::array()},
                      {"rank", in.rank},
                      {"signature", in.signature},
                      {"hyperbolic", hyp},
                      {"distinct_roots", in.rank},
                      {"distinct_real_roots", in.signature}};
  for (const auto& row : s.rows()) result["sylvester"].push_back(exact_list(row));
  std::vector<RootProfile::Root> roots;
  if (hyp) {
    roots = hyperbolic_roots(f, o.root_tol).roots;
    result["nonnegative_roots"] = has_only_nonneg_roots(f);
    ordered_json arr = ordered_json::array();
    for (const auto& r : roots) arr.push_back({{"value", approx(r.value)}, {"multiplicity", r.multiplicity}});
    result["roots"] = arr;
  }
  rep["result"] = result;
  if (!o.json) {
    out << "f = " << f.to_string() << "\n";
    out << "S(f) = " << s.to_string() << "\n";
    out << (hyp ? "hyperbolic" : "not hyperbolic") << "; rank " << in.rank << ", signature " << in.signature << "\n";
    if (hyp) {
      out << "roots:";
      for (const auto& r : roots) {
        char buf[64];
        std::snprintf(buf, sizeof buf, " %.12g (x%u)", r.value, r.multiplicity);
        out << buf;
      }
      out << "\n";
    }
  }
  return kExitClean;
}

int cmd_reduce(const Options& o, ordered_json& rep, std::ostream& out) {
  const MultiPoly f = read_polynomial(o);
  const Principle pr = principle_of(o);
  const SearchMode mode = o.orthant ? SearchMode::orthant : SearchMode::real_line;
  const auto d = static_cast<unsigned>(f.degree().value_or(0));
  const auto instances = principle_instances(f, pr, mode);
  const unsigned k = principle_k(pr, static_cast<unsigned>(f.num_vars()), d);
  ordered_json arr = ordered_json::array();
  for (const auto& inst : instances) {
    arr.push_back({{"pattern", pattern_json(inst.pattern)}, {"reduced", inst.reduced.to_string("t")}});
  }
  rep["result"] = {{"n", f.num_vars()}, {"degree", d}, {"k", k}, {"mode", mode_name(mode)}, {"instances", arr}};
  if (!o.json) {
    out << "k = " << k << " (" << (pr == Principle::degree ? "degree" : "half-degree") << " principle, "
        << mode_name(mode) << "), " << instances.size() << " instances\n";
    for (const auto& inst : instances) {
      out << inst.pattern.to_string() << ": " << inst.reduced.to_string("t") << "\n";
    }
  }
  return kExitClean;
}

int cmd_check(const Options& o, ordered_json& rep, std::ostream& out, bool zero) {
  const MultiPoly f = read_polynomial(o);
  const SearchConfig cfg = search_config(o);
  rep["config"] = config_json(o, cfg, f.num_vars());
  if (zero && o.orthant) throw DomainError("find-zero searches the real line only");
  const Verdict v = zero ? find_zero(f, cfg)
                         : check_nonnegativity(f, o.orthant ? SearchMode::orthant : SearchMode::real_line, cfg);
  rep["verdict"] = verdict_json(v);
  if (v.witness) rep["witness"] = witness_json(*v.witness);
  if (!o.json) print_verdict(out, v);
  return v.status == VerdictStatus::counterexample_found ? kExitCounterexample : kExitClean;
}

int cmd_lemma42(const Options& o, ordered_json& rep, std::ostream& out) {
  SliceExperiment exp;
  exp.n = static_cast<unsigned>(o.n);
  exp.s = o.s;
  exp.fixed = parse_rational_list(o.fixed);
  exp.objective = parse_rational_list(o.objective);
  exp.sample_count = o.samples;
  exp.cfg = search_config(o);
  if (exp.n == 0) exp.n = static_cast<unsigned>(exp.objective.size());
  rep["config"] = config_json(o, exp.cfg, exp.n);
  const SliceReport r = lemma42_experiment(exp);
  ordered_json result{{"s", exp.s},
                      {"fixed", exact_list(exp.fixed)},
                      {"objective_vector", exact_list(exp.objective)},
                      {"empty_slice", r.empty_slice},
                      {"objective_constant", r.objective_constant},
                      {"samples_agree", r.samples_agree},
                      {"feasible_samples", r.feasible_samples},
                      {"cluster_tolerance", approx(r.cluster_tolerance)}};
  if (r.best) {
    ordered_json roots = ordered_json::array();
    for (double x : r.best->root_sample) roots.push_back(approx(x));
    result["best_objective"] = r.best->objective.get_str();
    result["best_coefficients"] = exact_list(r.best->coefficient_vector);
    result["best_roots"] = roots;
    result["clustered_distinct"] = r.clustered_distinct;
    result["exact_rank"] = r.exact_rank;
    result["within_bound"] = r.within_bound;
  } else {
    result["best_objective"] = "inf";
  }
  result["pattern_restricted_min"] = r.pattern_restricted_min ? approx(*r.pattern_restricted_min) : ordered_json();
  rep["result"] = result;
  if (!o.json) {
    if (r.empty_slice) {
      out << "empty slice: no hyperbolic completion found; minimum is +inf\n";
    } else {
      out << "feasible samples: " << r.feasible_samples << "\n";
      out << "best objective: " << r.best->objective.get_str() << " (approx " << decimal(r.best->objective.get_d())
          << ")\n";
      out << "best coefficients: " << join(r.best->coefficient_vector) << "\n";
      out << "best roots:";
      for (double x : r.best->root_sample) out << " " << decimal(x);
      out << "\n";
      out << "clustered distinct roots: " << r.clustered_distinct << " (tolerance " << decimal(r.cluster_tolerance)
          << "), bound s = " << exp.s << ": " << (r.within_bound ? "holds" : "violated") << "\n";
      out << "exact rank of S(z): " << r.exact_rank << "\n";
      if (r.objective_constant) {
        out << "objective is constant on the slice; samples agree exactly: " << (r.samples_agree ? "yes" : "no")
            << "\n";
      }
      out << "minimum over <= s distinct roots: "
          << (r.pattern_restricted_min ? decimal(*r.pattern_restricted_min) : std::string("none found")) << "\n";
    }
  }
  return kExitClean;
}

void add_search_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--n", o.n, "Number of variables (default: largest index used)");
  cmd->add_flag("--orthant", o.orthant, "Restrict to the nonnegative orthant");
  cmd->add_option("--box", o.box, "Search box LO:HI (rationals)");
  cmd->add_option("--grid", o.grid, "Grid points per axis");
  cmd->add_option("--tol", o.tol, "Zero tolerance");
  cmd->add_option("--steps", o.steps, "Coordinate-descent halvings");
  cmd->add_option("--seed", o.seed, "Sampling seed");
  cmd->add_option("--principle", o.principle, "degree | half");
  cmd->add_flag("--serial", o.serial, "Use the serial grid kernels");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Positivity and zero search for symmetric polynomials"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Machine-readable report");

  auto* decompose = app.add_subcommand("decompose", "Rewrite a symmetric polynomial in e_1..e_n");
  auto* hyperbolic = app.add_subcommand("hyperbolic", "Sylvester-matrix real-rootedness test");
  auto* reduce = app.add_subcommand("reduce", "List the reduced instances of a principle");
  auto* check = app.add_subcommand("check", "Search for a counterexample to F >= 0");
  auto* find_zero_cmd = app.add_subcommand("find-zero", "Search for a real zero of F");
  auto* lemma42 = app.add_subcommand("lemma42", "Linear optimization over a fixed-coefficient slice");

  for (auto* cmd : {decompose, reduce, check, find_zero_cmd}) {
    cmd->add_option("polynomial", o.polynomial, "Polynomial in x1..xn")->required();
    cmd->add_flag("--json", o.json, "Machine-readable report");
  }
  for (auto* cmd : {decompose, reduce}) {
    cmd->add_option("--n", o.n, "Number of variables (default: largest index used)");
  }
  reduce->add_flag("--orthant", o.orthant, "Orthant test sets");
  reduce->add_option("--principle", o.principle, "degree | half");
  add_search_flags(check, o);
  add_search_flags(find_zero_cmd, o);
  add_search_flags(lemma42, o);
  lemma42->add_flag("--json", o.json, "Machine-readable report");
  lemma42->add_option("--s", o.s, "Number of fixed leading coefficients");
  lemma42->add_option("--fixed", o.fixed, "a_1,...,a_s (values of e_1..e_s)")->required();
  lemma42->add_option("--objective", o.objective, "c_1,...,c_n")->required();
  lemma42->add_option("--samples", o.samples, "Root-space samples");
  hyperbolic->add_option("--coeffs", o.coeffs, "Coefficients, leading first")->required();
  hyperbolic->add_option("--root-tol", o.root_tol, "Root bisection tolerance");
  hyperbolic->add_flag("--json", o.json, "Machine-readable report");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitClean;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  ordered_json rep;
  int code = kExitClean;
  try {
    if (decompose->parsed()) {
      rep["verb"] = "decompose";
      code = cmd_decompose(o, rep, out);
    } else if (hyperbolic->parsed()) {
      rep["verb"] = "hyperbolic";
      code = cmd_hyperbolic(o, rep, out, err);
    } else if (reduce->parsed()) {
      rep["verb"] = "reduce";
      code = cmd_reduce(o, rep, out);
    } else if (check->parsed()) {
      rep["verb"] = "check";
      code = cmd_check(o, rep, out, false);
    } else if (find_zero_cmd->parsed()) {
      rep["verb"] = "find-zero";
      code = cmd_check(o, rep, out, true);
    } else if (lemma42->parsed()) {
      rep["verb"] = "lemma42";
      code = cmd_lemma42(o, rep, out);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  if (o.json) {
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    rep["timing"] = {{"elapsed_ms", approx(ms)}};
    out << rep.dump(2) << "\n";
  }
  return code;
}

}  // namespace symred
