// powmean: complex-valued power-mean estimators for the Cauchy distribution,
// with a Monte Carlo verification harness.

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "powmean/cauchy.hpp"
#include "powmean/estimators.hpp"
#include "powmean/io.hpp"
#include "powmean/mixture.hpp"
#include "powmean/montecarlo.hpp"
#include "powmean/version.hpp"

using nlohmann::json;
using namespace powmean;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitValidation = 2;
constexpr int kExitRegime = 3;
constexpr int kExitNonConvergence = 4;

json jcomplex(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

std::string fmt(double v) {
  if (v == 0.0) v = 0.0;  // display -0 as 0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt6(double v) {
  if (v == 0.0) v = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// The JSON record deliberately has no wall-clock field: identical config and
// seed must reproduce byte-identical output. Wall time goes to the console.
void write_record(const std::string& path, const std::string& command,
                  const json& config, const json& results,
                  std::uint64_t seed) {
  if (path.empty()) return;
  json record{{"command", command},
              {"config", config},
              {"results", results},
              {"seed", seed},
              {"software_version", kVersion}};
  std::ofstream out(path);
  if (!out) throw validation_error("cannot open JSON output '" + path + "'");
  out << record.dump(2) << "\n";
}

ComplexParam parse_gamma(const std::string& text) {
  const Complex g = parse_complex(text);
  if (!(g.imag() > 0.0)) {
    throw validation_error("gamma must lie in the open upper half-plane");
  }
  return ComplexParam(g.real(), g.imag());
}

struct EstimateArgs {
  std::string input;
  double p = -1.0;
  std::string alpha = "0+1i";
  bool truncated = false;
  double disc_a = 0.0;
  std::string json_path;
};

int run_estimate(const EstimateArgs& a) {
  const Sample s = read_sample_file(a.input);
  const Complex alpha = parse_complex(a.alpha);
  EstimateResult est =
      a.truncated ? truncated_power_mean(a.p, alpha, s)
                  : quasi_arithmetic_mean(GeneratorSpec(a.p, alpha), s);
  std::printf("n=%zu p=%s alpha=%s%s\n", s.size(), fmt6(a.p).c_str(),
              format_complex_short(alpha).c_str(),
              a.truncated ? " (truncated statistic)" : "");
  std::printf("estimate: mu=%s sigma=%s  (%s)\n",
              fmt(est.estimate.real()).c_str(),
              fmt(est.estimate.imag()).c_str(),
              format_complex(est.estimate).c_str());
  if (!a.truncated) {
    est.variance_proxy =
        empirical_variance_proxy(GeneratorSpec(a.p, alpha), s);
    std::printf("V^f_n = %s\n", fmt(*est.variance_proxy).c_str());
  }
  if (est.nonintegrable) {
    std::printf(
        "warning: p = -1 with real alpha is a non-integrable regime; the "
        "estimate has no moments\n");
  }
  json results{{"estimate", jcomplex(est.estimate)},
               {"n", s.size()},
               {"nonintegrable_warning", est.nonintegrable}};
  if (est.variance_proxy.has_value()) {
    results["variance_proxy"] = *est.variance_proxy;
  }
  if (a.disc_a > 0.0) {
    const ConfidenceDisc d =
        confidence_disc(GeneratorSpec(a.p, alpha), s, a.disc_a);
    std::printf("disc(a=%s): center=%s radius=%s level=%s%s\n",
                fmt6(a.disc_a).c_str(), format_complex(d.center).c_str(),
                fmt(d.radius).c_str(), fmt6(d.level).c_str(),
                d.degenerate ? " (degenerate: zero variance proxy)" : "");
    results["disc"] = json{{"center", jcomplex(d.center)},
                           {"radius", d.radius},
                           {"level", d.level},
                           {"degenerate", d.degenerate}};
  }
  json config{{"input", a.input},
              {"p", a.p},
              {"alpha", a.alpha},
              {"truncated", a.truncated},
              {"disc_a", a.disc_a}};
  write_record(a.json_path, "estimate", config, results, 0);
  return kExitOk;
}

struct MixtureArgs {
  std::string input;
  double alpha_exp = 0.1;
  std::string json_path;
};

int run_mixture(const MixtureArgs& a) {
  const Sample s = read_sample_file(a.input);
  const MixtureEstimate est = estimate_mixture(s, a.alpha_exp);
  std::printf("n=%zu alpha_exp=%s branch=%s\n", s.size(),
              fmt6(a.alpha_exp).c_str(),
              est.branch == MixtureBranch::direct ? "direct" : "ratio");
  std::printf("t_hat=%s  (raw ratio %s%+.6gi)\n", fmt(est.t_hat).c_str(),
              fmt6(est.t_raw).c_str(), est.t_imag);
  std::printf("labeling A: t=%s\n", fmt(est.t_hat).c_str());
  std::printf("  gamma1: mu=%s sigma=%s (weight %s)\n",
              fmt(est.gamma1_hat.real()).c_str(),
              fmt(est.gamma1_hat.imag()).c_str(),
              fmt6(1.0 - est.t_hat).c_str());
  std::printf("  gamma2: mu=%s sigma=%s (weight %s)\n",
              fmt(est.gamma2_hat.real()).c_str(),
              fmt(est.gamma2_hat.imag()).c_str(), fmt6(est.t_hat).c_str());
  std::printf("labeling B: t=%s with components swapped\n",
              fmt(1.0 - est.t_hat).c_str());
  std::printf("a1=%s a2=%s\n", format_complex(est.a1).c_str(),
              format_complex(est.a2).c_str());
  if (est.low_quality) {
    std::printf(
        "warning: low-quality estimate (weight ratio far outside [0,1] or a "
        "component left the upper half-plane)\n");
  }
  json results{{"a1", jcomplex(est.a1)},
               {"a2", jcomplex(est.a2)},
               {"gamma1_hat", jcomplex(est.gamma1_hat)},
               {"gamma2_hat", jcomplex(est.gamma2_hat)},
               {"t_hat", est.t_hat},
               {"t_raw", est.t_raw},
               {"t_imag", est.t_imag},
               {"branch",
                est.branch == MixtureBranch::direct ? "direct" : "ratio"},
               {"low_quality", est.low_quality}};
  json config{{"input", a.input}, {"alpha_exp", a.alpha_exp}};
  write_record(a.json_path, "mixture", config, results, 0);
  return kExitOk;
}

struct MleArgs {
  std::string input;
  std::string start = "0+1i";
  double tol = 1e-10;
  std::size_t max_iter = 500;
  std::string json_path;
};

int run_mle(const MleArgs& a) {
  const Sample s = read_sample_file(a.input);
  const Complex start = parse_complex(a.start);
  const MleResult r = mle_fixed_point(s, start, a.tol, a.max_iter);
  std::printf("n=%zu start=%s tol=%s max_iter=%zu\n", s.size(),
              format_complex_short(start).c_str(), fmt6(a.tol).c_str(),
              a.max_iter);
  for (std::size_t i = 0; i < r.steps.size(); ++i) {
    std::printf("iter %3zu  |step| = %s\n", i + 1, fmt6(r.steps[i]).c_str());
  }
  std::printf("gamma_hat: mu=%s sigma=%s\n", fmt(r.gamma_hat.real()).c_str(),
              fmt(r.gamma_hat.imag()).c_str());
  json results{{"gamma_hat", jcomplex(r.gamma_hat)},
               {"converged", r.converged},
               {"iterations", r.iterations},
               {"steps", r.steps}};
  if (r.converged) {
    const double residual =
        std::abs(mle_map(s.span(), r.gamma_hat) - r.gamma_hat);
    std::printf(
        "verification: |Q(gamma_hat) - gamma_hat| = %s (< 2*tol: %s)\n",
        fmt6(residual).c_str(), residual < 2.0 * a.tol ? "yes" : "no");
    std::printf("converged in %zu iterations\n", r.iterations);
    results["residual"] = residual;
  } else {
    std::printf("did NOT converge after %zu iterations; partial result above\n",
                r.iterations);
  }
  json config{{"input", a.input},
              {"start", a.start},
              {"tol", a.tol},
              {"max_iter", a.max_iter}};
  write_record(a.json_path, "mle", config, results, 0);
  return r.converged ? kExitOk : kExitNonConvergence;
}

struct SimCommon {
  std::uint64_t seed = 20240817u;
  std::size_t reps = 1000;
  unsigned threads = 0;
  std::string json_path;
};

int run_variance_sweep(const SimCommon& c, const std::vector<double>& ps,
                       const std::string& alpha_s, const std::string& gamma_s,
                       std::size_t n) {
  const Complex alpha = parse_complex(alpha_s);
  const ComplexParam gamma = parse_gamma(gamma_s);
  const auto rows =
      variance_sweep(ps, alpha, gamma, n, c.reps, c.seed, c.threads);
  std::printf("variance sweep: alpha=%s gamma=%s n=%zu reps=%zu seed=%" PRIu64
              "\n",
              format_complex_short(alpha).c_str(),
              format_complex_short(gamma.gamma()).c_str(), n, c.reps, c.seed);
  std::printf("%10s  %16s  %16s  %10s\n", "p", "n*Var (emp)", "V(p) theory",
              "rel.gap");
  json jrows = json::array();
  for (const auto& row : rows) {
    if (row.theoretical.has_value()) {
      std::printf("%10s  %16s  %16s  %10s\n", fmt6(row.p).c_str(),
                  fmt6(row.empirical_scaled_var).c_str(),
                  fmt6(*row.theoretical).c_str(), fmt6(row.rel_gap).c_str());
    } else {
      std::printf("%10s  %16s  [%s]\n", fmt6(row.p).c_str(),
                  fmt6(row.empirical_scaled_var).c_str(),
                  row.regime_note.c_str());
    }
    json jr{{"p", row.p}, {"empirical_scaled_var", row.empirical_scaled_var}};
    if (row.theoretical.has_value()) {
      jr["theoretical"] = *row.theoretical;
      jr["rel_gap"] = row.rel_gap;
    } else {
      jr["regime_note"] = row.regime_note;
    }
    jrows.push_back(jr);
  }
  json config{{"p_grid", ps}, {"alpha", alpha_s}, {"gamma", gamma_s},
              {"n", n},       {"reps", c.reps},   {"seed", c.seed}};
  write_record(c.json_path, "simulate variance-sweep", config,
               json{{"rows", jrows}}, c.seed);
  return kExitOk;
}

int run_tables(const SimCommon& c, int which,
               const std::vector<std::size_t>& n_list,
               const std::vector<double>& t_list) {
  const TableReport rep =
      reproduce_tables(which, n_list, t_list, c.reps, c.seed, c.threads);
  std::printf(
      "Table %d: (mu1, sigma1, mu2, sigma2) = (%s, %s, %s, %s), alpha = 1/10, "
      "reps = %zu, seed = %" PRIu64 "\n",
      rep.which, fmt6(rep.mu1).c_str(), fmt6(rep.sigma1).c_str(),
      fmt6(rep.mu2).c_str(), fmt6(rep.sigma2).c_str(), c.reps, c.seed);
  std::printf("%10s", "n \\ t");
  for (double t : rep.t_list) std::printf("  %10s", fmt6(t).c_str());
  std::printf("\n");
  json jcells = json::array();
  for (std::size_t n : rep.n_list) {
    std::printf("%10zu", n);
    for (double t : rep.t_list) {
      const double h = rep.cell(n, t);
      std::printf("  %10s", fmt6(h).c_str());
      jcells.push_back(json{{"n", n}, {"t", t}, {"mean_hausdorff", h}});
    }
    std::printf("\n");
  }
  json config{{"which", which}, {"n_list", n_list}, {"t_list", t_list},
              {"reps", c.reps}, {"seed", c.seed}};
  write_record(c.json_path, "simulate tables", config, json{{"cells", jcells}},
               c.seed);
  return kExitOk;
}

int run_coverage(const SimCommon& c, double p, const std::string& alpha_s,
                 const std::string& gamma_s, std::size_t n, double a) {
  const Complex alpha = parse_complex(alpha_s);
  const ComplexParam gamma = parse_gamma(gamma_s);
  const double cov = coverage_experiment(GeneratorSpec(p, alpha), gamma, n, a,
                                         c.reps, c.seed, c.threads);
  std::printf(
      "coverage: %s (target %s, a=%s, p=%s, alpha=%s, gamma=%s, n=%zu, "
      "reps=%zu)\n",
      fmt(cov).c_str(), fmt6(1.0 - a).c_str(), fmt6(a).c_str(),
      fmt6(p).c_str(), format_complex_short(alpha).c_str(),
      format_complex_short(gamma.gamma()).c_str(), n, c.reps);
  json config{{"p", p}, {"alpha", alpha_s}, {"gamma", gamma_s},
              {"n", n}, {"a", a},           {"reps", c.reps},
              {"seed", c.seed}};
  write_record(c.json_path, "simulate coverage", config,
               json{{"coverage", cov}, {"target", 1.0 - a}}, c.seed);
  return kExitOk;
}

int run_unbiasedness(const SimCommon& c, double p, const std::string& alpha_s,
                     const std::string& gamma_s, std::size_t n,
                     bool truncated) {
  const Complex alpha = parse_complex(alpha_s);
  const ComplexParam gamma = parse_gamma(gamma_s);
  Scenario sc = truncated
                    ? Scenario(TruncatedScenario{gamma, p, alpha})
                    : Scenario(QamScenario{gamma, GeneratorSpec(p, alpha)});
  const TrialConfig cfg{c.seed, c.reps, n, sc};
  const UnbiasednessReport r =
      unbiasedness_check(cfg, gamma.gamma(), c.threads);
  std::printf("unbiasedness: mean=%s target=%s |err|=%s z=%s -> %s\n",
              format_complex(r.summary.mean).c_str(),
              format_complex_short(r.target).c_str(),
              fmt6(r.abs_error).c_str(), fmt6(r.z_score).c_str(),
              r.pass ? "PASS" : "FAIL");
  json config{{"p", p},
              {"alpha", alpha_s},
              {"gamma", gamma_s},
              {"n", n},
              {"truncated", truncated},
              {"reps", c.reps},
              {"seed", c.seed}};
  json results{{"mean", jcomplex(r.summary.mean)},
               {"target", jcomplex(r.target)},
               {"abs_error", r.abs_error},
               {"z_score", r.z_score},
               {"std_error", r.summary.std_error},
               {"pass", r.pass}};
  write_record(c.json_path, "simulate unbiasedness", config, results, c.seed);
  return r.pass ? kExitOk : kExitCheckFailed;
}

int run_prs(const SimCommon& c, std::size_t m, const std::string& alpha_s,
            const std::string& gamma_s, std::size_t n) {
  const Complex alpha = parse_complex(alpha_s);
  const ComplexParam gamma = parse_gamma(gamma_s);
  const PrsReport r =
      prs_variance_sandwich_check(m, alpha, gamma, n, c.reps, c.seed,
                                  c.threads);
  std::printf("prs sandwich (m=%zu, n=%zu): n*Var(R)=%s +- %s\n", m, n,
              fmt6(r.empirical_scaled_var).c_str(), fmt6(r.std_error).c_str());
  std::printf("  lower bound %s <= empirical <= upper bound %s -> %s\n",
              fmt6(r.lower_bound).c_str(),
              r.upper_infinite ? "inf" : fmt6(r.upper_bound).c_str(),
              r.pass ? "PASS" : "FAIL");
  if (!r.upper_infinite) {
    std::printf("  exact n*Var(R_{m,n}) from moments: %s\n",
                fmt6(r.theoretical).c_str());
  }
  json config{{"m", m}, {"alpha", alpha_s}, {"gamma", gamma_s},
              {"n", n}, {"reps", c.reps},   {"seed", c.seed}};
  json results{{"empirical_scaled_var", r.empirical_scaled_var},
               {"std_error", r.std_error},
               {"lower_bound", r.lower_bound},
               {"upper_infinite", r.upper_infinite},
               {"pass", r.pass}};
  if (!r.upper_infinite) {
    results["upper_bound"] = r.upper_bound;
    results["theoretical"] = r.theoretical;
  }
  write_record(c.json_path, "simulate prs", config, results, c.seed);
  return r.pass ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "powmean: complex power-mean estimators of the Cauchy location-scale "
      "parameter, with a Monte Carlo verification harness"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  int exit_code = kExitOk;
  auto guard = [&](auto&& fn) {
    try {
      exit_code = fn();
    } catch (const validation_error& e) {
      std::cerr << "validation error: " << e.what() << "\n";
      exit_code = kExitValidation;
    } catch (const regime_error& e) {
      std::cerr << "regime error: " << e.what() << "\n";
      exit_code = kExitRegime;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      exit_code = kExitCheckFailed;
    }
  };

  // estimate
  auto ea = std::make_shared<EstimateArgs>();
  CLI::App* est = app.add_subcommand(
      "estimate", "Quasi-arithmetic power-mean estimate from a CSV sample");
  est->add_option("input", ea->input, "sample file, one real per line")
      ->required();
  est->add_option("--p", ea->p, "power exponent in [-1, 1]")->required();
  est->add_option("--alpha", ea->alpha, "complex shift, e.g. 0+1i");
  est->add_flag("--truncated", ea->truncated,
                "use the truncated statistic (requires 0 < p < 1)");
  est->add_option("--disc", ea->disc_a,
                  "also print the confidence disc at miscoverage a");
  est->add_option("--json", ea->json_path, "write a JSON run record");
  est->callback([&, ea]() { guard([&] { return run_estimate(*ea); }); });

  // mixture
  auto ma = std::make_shared<MixtureArgs>();
  CLI::App* mix = app.add_subcommand(
      "mixture", "Closed-form mixture-Cauchy estimate from a CSV sample");
  mix->add_option("input", ma->input, "sample file")->required();
  mix->add_option("--alpha-exp", ma->alpha_exp,
                  "fractional-moment exponent in (0, 1/6)");
  mix->add_option("--json", ma->json_path, "write a JSON run record");
  mix->callback([&, ma]() { guard([&] { return run_mixture(*ma); }); });

  // mle
  auto la = std::make_shared<MleArgs>();
  CLI::App* mle =
      app.add_subcommand("mle", "Cauchy MLE by the fixed-point iteration of Q");
  mle->add_option("input", la->input, "sample file")->required();
  mle->add_option("--start", la->start, "starting point in H");
  mle->add_option("--tol", la->tol, "convergence tolerance");
  mle->add_option("--max-iter", la->max_iter, "iteration cap");
  mle->add_option("--json", la->json_path, "write a JSON run record");
  mle->callback([&, la]() { guard([&] { return run_mle(*la); }); });

  // simulate with nested subcommands
  CLI::App* sim =
      app.add_subcommand("simulate", "Monte Carlo verification experiments");
  sim->require_subcommand(1);

  auto add_common = [](CLI::App* cmd, std::shared_ptr<SimCommon> c) {
    cmd->add_option("--seed", c->seed, "master seed")->envname("POWMEAN_SEED");
    cmd->add_option("--reps", c->reps, "number of Monte Carlo trials");
    cmd->add_option(
        "--threads", c->threads,
        "worker count (0 = hardware); results do not depend on it");
    cmd->add_option("--json", c->json_path, "write a JSON run record");
  };

  {
    auto c = std::make_shared<SimCommon>();
    auto ps = std::make_shared<std::vector<double>>();
    auto alpha_s = std::make_shared<std::string>("0+1i");
    auto gamma_s = std::make_shared<std::string>("0+1i");
    auto n = std::make_shared<std::size_t>(10000);
    CLI::App* sweep = sim->add_subcommand(
        "variance-sweep", "n*Var(M^f_n) against the asymptotic V(p)");
    sweep->add_option("--p", *ps, "power exponents")->required();
    sweep->add_option("--alpha", *alpha_s, "complex shift");
    sweep->add_option("--gamma", *gamma_s, "true parameter mu+sigma*i");
    sweep->add_option("--n", *n, "sample size per trial");
    add_common(sweep, c);
    sweep->callback([&, c, ps, alpha_s, gamma_s, n]() {
      guard(
          [&] { return run_variance_sweep(*c, *ps, *alpha_s, *gamma_s, *n); });
    });
  }
  {
    auto c = std::make_shared<SimCommon>();
    auto which = std::make_shared<int>(1);
    auto n_list = std::make_shared<std::vector<std::size_t>>(
        std::vector<std::size_t>{100, 1000, 10000});
    auto t_list = std::make_shared<std::vector<double>>(
        std::vector<double>{1.0 / 6.0, 0.25, 1.0 / 3.0, 0.5});
    CLI::App* tab =
        sim->add_subcommand("tables", "mixture-Cauchy estimation error tables");
    tab->add_option("--which", *which, "1: (0,1,20,2); 2: (0,1,5,6)")
        ->check(CLI::Range(1, 2));
    tab->add_option("--n-list", *n_list, "sample sizes (rows)");
    tab->add_option("--t-list", *t_list, "mixture weights (columns)");
    add_common(tab, c);
    tab->callback([&, c, which, n_list, t_list]() {
      guard([&] { return run_tables(*c, *which, *n_list, *t_list); });
    });
  }
  {
    auto c = std::make_shared<SimCommon>();
    auto p = std::make_shared<double>(-1.0);
    auto alpha_s = std::make_shared<std::string>("0+1i");
    auto gamma_s = std::make_shared<std::string>("0+1i");
    auto n = std::make_shared<std::size_t>(1000);
    auto a = std::make_shared<double>(0.05);
    CLI::App* cov =
        sim->add_subcommand("coverage", "empirical confidence-disc coverage");
    cov->add_option("--p", *p, "power exponent");
    cov->add_option("--alpha", *alpha_s, "complex shift");
    cov->add_option("--gamma", *gamma_s, "true parameter");
    cov->add_option("--n", *n, "sample size per trial");
    cov->add_option("--a", *a, "miscoverage level in (0, 1/2)");
    add_common(cov, c);
    cov->callback([&, c, p, alpha_s, gamma_s, n, a]() {
      guard([&] { return run_coverage(*c, *p, *alpha_s, *gamma_s, *n, *a); });
    });
  }
  {
    auto c = std::make_shared<SimCommon>();
    auto p = std::make_shared<double>(-0.5);
    auto alpha_s = std::make_shared<std::string>("0+0i");
    auto gamma_s = std::make_shared<std::string>("0+1i");
    auto n = std::make_shared<std::size_t>(2);
    auto truncated = std::make_shared<bool>(false);
    CLI::App* unb =
        sim->add_subcommand("unbiasedness", "z-score check of E[M^f_n] = gamma");
    unb->add_option("--p", *p, "power exponent");
    unb->add_option("--alpha", *alpha_s, "complex shift");
    unb->add_option("--gamma", *gamma_s, "true parameter");
    unb->add_option("--n", *n, "sample size per trial");
    unb->add_flag("--truncated", *truncated, "use the truncated statistic");
    add_common(unb, c);
    unb->callback([&, c, p, alpha_s, gamma_s, n, truncated]() {
      guard([&] {
        return run_unbiasedness(*c, *p, *alpha_s, *gamma_s, *n, *truncated);
      });
    });
  }
  {
    auto c = std::make_shared<SimCommon>();
    auto m = std::make_shared<std::size_t>(2);
    auto alpha_s = std::make_shared<std::string>("0+1i");
    auto gamma_s = std::make_shared<std::string>("0+1i");
    auto n = std::make_shared<std::size_t>(50);
    CLI::App* prs = sim->add_subcommand(
        "prs", "sums-of-products variance sandwich check");
    prs->add_option("--m", *m, "product order (m >= 2)");
    prs->add_option("--alpha", *alpha_s, "complex shift");
    prs->add_option("--gamma", *gamma_s, "true parameter");
    prs->add_option("--n", *n, "sample size per trial (n >= m)");
    add_common(prs, c);
    prs->callback([&, c, m, alpha_s, gamma_s, n]() {
      guard([&] { return run_prs(*c, *m, *alpha_s, *gamma_s, *n); });
    });
  }

  CLI11_PARSE(app, argc, argv);
  return exit_code;
}
