#include "powmean/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace powmean {

namespace {

void require_nonempty(std::span<const double> xs, const char* who) {
  if (xs.empty()) {
    throw validation_error(std::string(who) + ": empty sample");
  }
}

// Pole checks only fire for real alpha; for alpha in H every x + alpha is
// bounded away from zero.
void check_poles(const GeneratorSpec& g, std::span<const double> xs,
                 const char* who) {
  if (!g.alpha_real() || g.p() > 0.0) return;
  const double pole = -g.alpha().real();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] == pole) {
      throw regime_error(std::string(who) + ": sample value at index " +
                         std::to_string(i) + " equals -alpha");
    }
  }
}

}  // namespace

EstimateResult quasi_arithmetic_mean(const GeneratorSpec& g,
                                     std::span<const double> xs) {
  require_nonempty(xs, "quasi_arithmetic_mean");
  check_poles(g, xs, "quasi_arithmetic_mean");
  Complex acc{0.0, 0.0};
  for (double x : xs) acc += generator_eval(g, x);
  const Complex mean = acc / static_cast<double>(xs.size());
  EstimateResult r{generator_inverse(g, mean), xs.size(), g, std::nullopt,
                   g.nonintegrable_harmonic()};
  return r;
}

EstimateResult geometric_mean(Complex alpha, std::span<const double> xs) {
  return quasi_arithmetic_mean(GeneratorSpec(0.0, alpha), xs);
}

EstimateResult truncated_power_mean(double p, Complex alpha,
                                    std::span<const double> xs) {
  if (!(p > 0.0 && p < 1.0)) {
    throw validation_error("truncated_power_mean: p must lie in (0, 1)");
  }
  require_nonempty(xs, "truncated_power_mean");
  const std::size_t n = xs.size();
  if (n < 2) {
    throw validation_error(
        "truncated_power_mean: n >= 2 required (n^{1/p} - n vanishes at n=1)");
  }
  const GeneratorSpec g(p, alpha);
  const Complex m_p = quasi_arithmetic_mean(g, xs).estimate;
  double m_1 = 0.0;
  for (double x : xs) m_1 += x;
  m_1 /= static_cast<double>(n);
  // (n^{1/p} M_p - n M_1) / (n^{1/p} - n) rewritten with w = n^{1 - 1/p}
  // in (0,1); n^{1/p} itself overflows for small p.
  const double w = std::pow(static_cast<double>(n), 1.0 - 1.0 / p);
  EstimateResult r{(m_p - w * m_1) / (1.0 - w), n, g, std::nullopt, false};
  return r;
}

EstimateResult sums_of_products(std::size_t m, Complex alpha,
                                std::span<const double> xs) {
  if (m < 1) throw validation_error("sums_of_products: m >= 1 required");
  require_nonempty(xs, "sums_of_products");
  const std::size_t n = xs.size();
  if (n < m) {
    throw regime_error("sums_of_products: n >= m required, got n = " +
                       std::to_string(n) + ", m = " + std::to_string(m));
  }
  const double inv_m = 1.0 / static_cast<double>(m);
  // Normalized elementary symmetric recurrence: after i items,
  // ele[k] = e_k(z_1..z_i) / C(i,k). Convex-combination updates keep every
  // intermediate at the scale of the final answer.
  std::vector<Complex> ele(m + 1, Complex{0.0, 0.0});
  ele[0] = Complex{1.0, 0.0};
  for (std::size_t i = 1; i <= n; ++i) {
    const Complex z = principal_pow(xs[i - 1] + alpha, inv_m);
    const double di = static_cast<double>(i);
    const std::size_t kmax = std::min(i, m);
    for (std::size_t k = kmax; k >= 1; --k) {
      const double dk = static_cast<double>(k);
      ele[k] = ((di - dk) * ele[k] + dk * z * ele[k - 1]) / di;
    }
  }
  EstimateResult r{ele[m] - alpha, n, GeneratorSpec(inv_m, alpha),
                   std::nullopt, false};
  return r;
}

double empirical_variance_proxy(const GeneratorSpec& g,
                                std::span<const double> xs) {
  require_nonempty(xs, "empirical_variance_proxy");
  check_poles(g, xs, "empirical_variance_proxy");
  Complex acc{0.0, 0.0};
  double acc_sq = 0.0;
  for (double x : xs) {
    const Complex f = generator_eval(g, x);
    acc += f;
    acc_sq += std::norm(f);
  }
  const double n = static_cast<double>(xs.size());
  const double v = acc_sq / n - std::norm(acc / n);
  return std::max(v, 0.0);
}

double truncation_residual_ratio(double p, Complex x, Complex y) {
  if (!(p > 0.0 && p < 1.0)) {
    throw validation_error("truncation_residual_ratio: p must lie in (0, 1)");
  }
  if (x == Complex(0.0, 0.0) || y == Complex(0.0, 0.0)) return 0.0;
  const Complex s = principal_pow(x, p) + principal_pow(y, p);
  const Complex lhs = principal_pow(s, 1.0 / p) - (x + y);
  const double ax = std::abs(x);
  const double ay = std::abs(y);
  const double den = std::max(std::pow(ax, p) * std::pow(ay, 1.0 - p),
                              std::pow(ax, 1.0 - p) * std::pow(ay, p));
  return std::abs(lhs) / den;
}

}  // namespace powmean
