#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "powmean/complex_core.hpp"
#include "powmean/sample.hpp"

namespace powmean {

/// Result of one estimator evaluation. The estimate lies in the closed upper
/// half-plane up to roundoff for every estimator in this module.
struct EstimateResult {
  Complex estimate;
  std::size_t n = 0;
  GeneratorSpec generator;
  std::optional<double> variance_proxy;  // V^f_n when the caller computed it
  bool nonintegrable = false;  // p = -1 with real alpha: no moments exist
};

/// M^f_n = f^{-1}((1/n) * sum f(x_j)).
/// Span overloads assume finite values; Sample overloads are pre-validated.
EstimateResult quasi_arithmetic_mean(const GeneratorSpec& g,
                                     std::span<const double> xs);
inline EstimateResult quasi_arithmetic_mean(const GeneratorSpec& g,
                                            const Sample& s) {
  return quasi_arithmetic_mean(g, s.span());
}

/// G^(alpha)_n = prod (x_j + alpha)^{1/n} - alpha, computed in log space.
EstimateResult geometric_mean(Complex alpha, std::span<const double> xs);
inline EstimateResult geometric_mean(Complex alpha, const Sample& s) {
  return geometric_mean(alpha, s.span());
}

/// (n^{1/p} M_p - n M_1) / (n^{1/p} - n) for 0 < p < 1, n >= 2. The
/// integrable correction of the positive power mean; tends to the geometric
/// mean as p -> +0.
EstimateResult truncated_power_mean(double p, Complex alpha,
                                    std::span<const double> xs);
inline EstimateResult truncated_power_mean(double p, Complex alpha,
                                           const Sample& s) {
  return truncated_power_mean(p, alpha, s.span());
}

/// R^(alpha)_{m,n}: the average over m-subsets of prod (x_l + alpha)^{1/m},
/// minus alpha. Computed through the normalized elementary-symmetric
/// recurrence in O(n*m); reduces to the geometric mean at m = n and to the
/// arithmetic mean at m = 1.
EstimateResult sums_of_products(std::size_t m, Complex alpha,
                                std::span<const double> xs);
inline EstimateResult sums_of_products(std::size_t m, Complex alpha,
                                       const Sample& s) {
  return sums_of_products(m, alpha, s.span());
}

/// V^f_n = (1/n) sum |f(x_j)|^2 - |(1/n) sum f(x_j)|^2. Nonnegative.
double empirical_variance_proxy(const GeneratorSpec& g,
                                std::span<const double> xs);
inline double empirical_variance_proxy(const GeneratorSpec& g,
                                       const Sample& s) {
  return empirical_variance_proxy(g, s.span());
}

/// |(x^p + y^p)^{1/p} - (x + y)| / max(|x|^p |y|^{1-p}, |x|^{1-p} |y|^p)
/// for x, y in the closed upper half-plane, 0 < p < 1. Zero when either
/// argument is zero. Bounded by a constant C_p over the whole half-plane.
double truncation_residual_ratio(double p, Complex x, Complex y);

}  // namespace powmean
