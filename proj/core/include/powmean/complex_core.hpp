#pragma once

#include <complex>

#include "powmean/errors.hpp"

namespace powmean {

using Complex = std::complex<double>;

/// Principal argument with the convention arg(z) in (-pi, pi]: a negative
/// real maps to exactly +pi. A negative-zero imaginary part is treated as
/// +0 so that points on the cut land on the upper edge.
double principal_arg(Complex z);

/// Principal branch of the complex logarithm, log|z| + i*arg(z) with
/// arg(z) in (-pi, pi]. Throws regime_error for z = 0.
Complex principal_log(Complex z);

/// z^p := exp(p*log(z)) on the principal branch. 0^p = 0 for p > 0;
/// 0^p with p <= 0 throws regime_error. p = 1 and p = -1 are exact.
Complex principal_pow(Complex z, double p);

enum class GeneratorKind { power, log };

/// The generator family f_p^(alpha)(x) = (x + alpha)^p for p in [-1,1],
/// degenerating to log(x + alpha) at p = 0. alpha lies in the closed upper
/// half-plane.
class GeneratorSpec {
 public:
  GeneratorSpec(double p, Complex alpha);

  double p() const { return p_; }
  Complex alpha() const { return alpha_; }
  GeneratorKind kind() const {
    return p_ == 0.0 ? GeneratorKind::log : GeneratorKind::power;
  }
  bool alpha_real() const { return alpha_.imag() == 0.0; }

  // p = -1 with real alpha: the quasi-arithmetic mean of Cauchy samples is
  // itself Cauchy distributed, so no moments exist. Constructible but flagged.
  bool nonintegrable_harmonic() const { return p_ == -1.0 && alpha_real(); }

 private:
  double p_;
  Complex alpha_;
};

/// f(x) for real sample values. Pole x = -alpha (only reachable when alpha
/// is real) throws regime_error for p <= 0.
Complex generator_eval(const GeneratorSpec& g, double x);

/// The same map evaluated at a complex point of the closed upper half-plane
/// (used for f(gamma) in influence functions and variances).
Complex generator_eval_at(const GeneratorSpec& g, Complex z);

/// f^{-1}(w): w^{1/p} - alpha for p != 0, exp(w) - alpha for p = 0.
/// w = 0 with p < 0 throws regime_error.
Complex generator_inverse(const GeneratorSpec& g, Complex w);

/// f'(z): p*(z+alpha)^(p-1) for p != 0, (z+alpha)^{-1} for p = 0.
Complex generator_derivative(const GeneratorSpec& g, Complex z);

}  // namespace powmean
