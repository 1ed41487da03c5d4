#include "powmean/cauchy.hpp"

#include <cmath>
#include <string>

#include "powmean/quadrature.hpp"
#include "powmean/special.hpp"

namespace powmean {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// f(X_1) in L^2 for the Cauchy model: p < 1/2 always required; for real
// alpha additionally p > -1/2 (p = 0 is always fine).
void require_l2_regime(double p, Complex alpha, const char* who) {
  if (p >= 0.5) {
    throw regime_error(std::string(who) +
                       ": f(X) has infinite second moment for p >= 1/2");
  }
  if (alpha.imag() == 0.0 && p != 0.0 && p <= -0.5) {
    throw regime_error(std::string(who) +
                       ": f(X) has infinite second moment for p <= -1/2 with "
                       "real alpha");
  }
}

}  // namespace

Sample sample_cauchy(const ComplexParam& gamma, std::size_t n,
                     SplitMix64& rng) {
  if (n < 1) throw validation_error("sample_cauchy: n >= 1 required");
  std::vector<double> xs(n);
  for (double& x : xs) x = cauchy_draw(gamma, rng);
  return Sample(std::move(xs));
}

double cauchy_density(const ComplexParam& gamma, double x) {
  const double d = x - gamma.mu();
  return (gamma.sigma() / kPi) / (d * d + gamma.sigma() * gamma.sigma());
}

double cauchy_cdf(const ComplexParam& gamma, double x) {
  return 0.5 + std::atan((x - gamma.mu()) / gamma.sigma()) / kPi;
}

double asymptotic_variance_quadrature(double p, Complex alpha,
                                      const ComplexParam& gamma) {
  if (!(p >= -1.0 && p <= 0.0)) {
    throw validation_error(
        "asymptotic_variance_quadrature: p must lie in [-1, 0]");
  }
  if (alpha.imag() < 0.0) {
    throw validation_error(
        "asymptotic_variance_quadrature: alpha must lie in the closed upper "
        "half-plane");
  }
  if (p == 0.0) {
    const LogMoments lm = cauchy_log_moments(alpha, gamma.mu(), gamma.sigma());
    const double var = lm.e_log_abs_sq + lm.e_arg_sq -
                       lm.e_log_abs * lm.e_log_abs - lm.e_arg * lm.e_arg;
    return std::exp(2.0 * lm.e_log_abs) * var;
  }
  if (alpha.imag() == 0.0 && p <= -0.5) {
    throw regime_error(
        "asymptotic_variance_quadrature: asymptotic variance diverges for "
        "p <= -1/2 with real alpha");
  }
  const double e2p =
      cauchy_abs_moment(2.0 * p, alpha, gamma.mu(), gamma.sigma());
  const double ga = std::abs(gamma.gamma() + alpha);
  return (e2p - std::pow(ga, 2.0 * p)) / (p * p) *
         std::pow(ga, 2.0 * (1.0 - p));
}

double asymptotic_variance_cos(double p, double alpha,
                               const ComplexParam& gamma) {
  if (!(p > -0.5 && p < 0.0)) {
    throw validation_error("asymptotic_variance_cos: p must lie in (-1/2, 0)");
  }
  const Complex ga = gamma.gamma() + alpha;
  const double b = 2.0 * principal_arg(ga) / kPi - 1.0;
  return std::norm(ga) / (p * p) *
         (std::cos(p * kPi * b) / std::cos(p * kPi) - 1.0);
}

double asymptotic_variance_gamma(double p) {
  if (!(p >= -1.0 && p < 0.0)) {
    throw validation_error("asymptotic_variance_gamma: p must lie in [-1, 0)");
  }
  const double ratio =
      lanczos_gamma(0.5 - p) / lanczos_gamma(1.0 - p) / std::sqrt(kPi);
  return std::pow(4.0, 1.0 - p) / (p * p) * (ratio - std::pow(4.0, p));
}

ConfidenceDisc confidence_disc(const GeneratorSpec& g,
                               std::span<const double> xs, double a) {
  if (!(a > 0.0 && a <= 0.5)) {
    throw validation_error("confidence_disc: a must lie in (0, 1/2]");
  }
  if (xs.size() < 2) {
    throw regime_error("confidence_disc: n >= 2 required");
  }
  require_l2_regime(g.p(), g.alpha(), "confidence_disc");
  const EstimateResult est = quasi_arithmetic_mean(g, xs);
  const double vproxy = empirical_variance_proxy(g, xs);
  const double r_a = std::sqrt(-2.0 * std::log(a));
  const Complex fprime = generator_derivative(g, est.estimate);
  const double n = static_cast<double>(xs.size());
  const double radius =
      std::sqrt(vproxy) * r_a / (std::sqrt(2.0 * n) * std::abs(fprime));
  return ConfidenceDisc{est.estimate, radius, 1.0 - a, vproxy == 0.0};
}

ConfidenceDisc confidence_disc(const GeneratorSpec& g, const Sample& s,
                               double a) {
  return confidence_disc(g, s.span(), a);
}

Complex mle_map(std::span<const double> xs, Complex theta) {
  const GeneratorSpec g(-1.0, Complex(-theta.real(), theta.imag()));
  return quasi_arithmetic_mean(g, xs).estimate;
}

MleResult mle_fixed_point(std::span<const double> xs, Complex start,
                          double tol, std::size_t max_iter) {
  if (xs.size() < 3) {
    throw regime_error(
        "mle_fixed_point: n >= 3 required for MLE existence and uniqueness");
  }
  if (!(start.imag() > 0.0)) {
    throw validation_error(
        "mle_fixed_point: start must lie in the open upper half-plane");
  }
  if (!(tol > 0.0)) throw validation_error("mle_fixed_point: tol > 0 required");
  MleResult r{start, false, 0, {}};
  Complex cur = start;
  for (std::size_t it = 0; it < max_iter; ++it) {
    const Complex next = mle_map(xs, cur);
    const double step = std::abs(next - cur);
    r.steps.push_back(step);
    cur = next;
    r.iterations = it + 1;
    if (!(cur.imag() > 0.0)) {
      // the iterate left the open upper half-plane: the likelihood is
      // degenerating (e.g. an all-equal sample), no interior MLE to find
      r.converged = false;
      break;
    }
    if (step < tol) {
      r.converged = true;
      break;
    }
  }
  r.gamma_hat = cur;
  return r;
}

MleResult mle_fixed_point(const Sample& s, Complex start, double tol,
                          std::size_t max_iter) {
  return mle_fixed_point(s.span(), start, tol, max_iter);
}

Complex influence_function(const GeneratorSpec& g, const ComplexParam& gamma,
                           double x) {
  const Complex fx = generator_eval(g, x);
  const Complex fg = generator_eval_at(g, gamma.gamma());
  const Complex fprime = generator_derivative(g, gamma.gamma());
  return (fx - fg) / fprime;
}

double inaccuracy_rate(double p, Complex alpha, const ComplexParam& gamma) {
  return 1.0 / asymptotic_variance_quadrature(p, alpha, gamma);
}

}  // namespace powmean
