#include "powmean/special.hpp"

#include <cmath>

#include "powmean/errors.hpp"

namespace powmean {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Lanczos g = 7, 9-term coefficient set.
constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

double gamma_core(double x) {
  // valid for x >= 0.5
  const double z = x - 1.0;
  double a = kLanczos[0];
  for (int i = 1; i < 9; ++i) a += kLanczos[i] / (z + i);
  const double t = z + 7.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

}  // namespace

double lanczos_gamma(double x) {
  if (!std::isfinite(x)) throw validation_error("lanczos_gamma: non-finite x");
  if (x < 0.5) {
    const double s = std::sin(kPi * x);
    if (s == 0.0) throw regime_error("lanczos_gamma: pole at nonpositive integer");
    return kPi / (s * gamma_core(1.0 - x));
  }
  return gamma_core(x);
}

}  // namespace powmean
