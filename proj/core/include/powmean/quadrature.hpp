#pragma once

#include <functional>
#include <vector>

#include "powmean/complex_core.hpp"

namespace powmean {

struct QuadResult {
  double value;
  double abs_error;
  int evals;
};

/// Adaptive Gauss-Kronrod 15(7) integration on [a, b]. interior_splits forces
/// initial breakpoints; integrable endpoint singularities are fine because
/// Kronrod nodes are interior and never touch segment ends.
QuadResult gk15_adaptive(const std::function<double(double)>& f, double a,
                         double b, double rel_tol = 1e-12,
                         double abs_tol = 2e-14,
                         std::vector<double> interior_splits = {});

/// E[|X + alpha|^e] for X ~ Cauchy(mu, sigma). Finite iff e < 1 and
/// (Im(alpha) > 0 or e > -1); otherwise throws regime_error. Heavy tails are
/// removed by the x = mu + sigma*tan(theta) and x = 1/s substitutions; the
/// integrable singularity at x = -alpha (real alpha, e < 0) is handled by
/// the u = t^{e+1} substitution.
double cauchy_abs_moment(double e, Complex alpha, double mu, double sigma);

/// E[(X + alpha)^q] for 0 < q < 1, principal branch.
Complex cauchy_frac_moment(double q, Complex alpha, double mu, double sigma);

/// Moments of log(X + alpha), split into modulus and argument parts:
/// Var(log(X+alpha)) = e_log_abs_sq + e_arg_sq - e_log_abs^2 - e_arg^2.
struct LogMoments {
  double e_log_abs;
  double e_log_abs_sq;
  double e_arg;
  double e_arg_sq;
};
LogMoments cauchy_log_moments(Complex alpha, double mu, double sigma);

}  // namespace powmean
