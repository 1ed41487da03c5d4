#include "powmean/complex_core.hpp"

#include <cmath>
#include <string>

namespace powmean {

double principal_arg(Complex z) {
  double im = z.imag();
  if (im == 0.0) im = 0.0;  // -0 -> +0 so negative reals get +pi
  return std::atan2(im, z.real());
}

Complex principal_log(Complex z) {
  if (z == Complex(0.0, 0.0)) {
    throw regime_error("principal_log: argument is zero");
  }
  return {std::log(std::abs(z)), principal_arg(z)};
}

Complex principal_pow(Complex z, double p) {
  if (z == Complex(0.0, 0.0)) {
    if (p > 0.0) return {0.0, 0.0};
    throw regime_error("principal_pow: zero base with exponent <= 0");
  }
  if (p == 1.0) return z;
  if (p == -1.0) return 1.0 / z;
  if (p == 0.0) return {1.0, 0.0};
  const double r = std::abs(z);
  const double theta = principal_arg(z);
  const double mag = std::pow(r, p);
  return {mag * std::cos(p * theta), mag * std::sin(p * theta)};
}

GeneratorSpec::GeneratorSpec(double p, Complex alpha) : p_(p), alpha_(alpha) {
  if (!(p >= -1.0 && p <= 1.0)) {
    throw validation_error("GeneratorSpec: p must lie in [-1, 1], got " +
                           std::to_string(p));
  }
  if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag())) {
    throw validation_error("GeneratorSpec: alpha must be finite");
  }
  if (alpha.imag() < 0.0) {
    throw validation_error(
        "GeneratorSpec: alpha must lie in the closed upper half-plane");
  }
}

Complex generator_eval(const GeneratorSpec& g, double x) {
  const Complex y = x + g.alpha();
  if (y == Complex(0.0, 0.0) && g.p() <= 0.0) {
    throw regime_error("generator_eval: pole at x = -alpha");
  }
  if (g.kind() == GeneratorKind::log) return principal_log(y);
  return principal_pow(y, g.p());
}

Complex generator_eval_at(const GeneratorSpec& g, Complex z) {
  const Complex y = z + g.alpha();
  if (y == Complex(0.0, 0.0) && g.p() <= 0.0) {
    throw regime_error("generator_eval_at: pole at z = -alpha");
  }
  if (g.kind() == GeneratorKind::log) return principal_log(y);
  return principal_pow(y, g.p());
}

Complex generator_inverse(const GeneratorSpec& g, Complex w) {
  if (g.kind() == GeneratorKind::log) return std::exp(w) - g.alpha();
  if (w == Complex(0.0, 0.0)) {
    if (g.p() < 0.0) {
      throw regime_error("generator_inverse: zero value with negative p");
    }
    return -g.alpha();
  }
  return principal_pow(w, 1.0 / g.p()) - g.alpha();
}

Complex generator_derivative(const GeneratorSpec& g, Complex z) {
  const Complex y = z + g.alpha();
  if (y == Complex(0.0, 0.0)) {
    throw regime_error("generator_derivative: pole at z = -alpha");
  }
  if (g.kind() == GeneratorKind::log) return 1.0 / y;
  return g.p() * principal_pow(y, g.p() - 1.0);
}

}  // namespace powmean
