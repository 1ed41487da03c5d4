#pragma once

#include <cstddef>
#include <vector>

#include "powmean/complex_core.hpp"
#include "powmean/estimators.hpp"
#include "powmean/rng.hpp"
#include "powmean/sample.hpp"

namespace powmean {

/// McCullagh parametrization: the location-scale pair as the single complex
/// number gamma = mu + i*sigma with sigma > 0.
class ComplexParam {
 public:
  ComplexParam(double mu, double sigma) : mu_(mu), sigma_(sigma) {
    if (!(sigma > 0.0)) {
      throw validation_error("ComplexParam: sigma must be positive");
    }
  }
  double mu() const { return mu_; }
  double sigma() const { return sigma_; }
  Complex gamma() const { return {mu_, sigma_}; }

 private:
  double mu_;
  double sigma_;
};

/// n i.i.d. draws by inverse CDF: x = mu + sigma * tan(pi*(U - 1/2)).
Sample sample_cauchy(const ComplexParam& gamma, std::size_t n,
                     SplitMix64& rng);

/// Single inverse-CDF draw; the building block shared with the mixture model.
inline double cauchy_draw(const ComplexParam& gamma, SplitMix64& rng) {
  constexpr double pi = 3.141592653589793238462643383279502884;
  return gamma.mu() + gamma.sigma() * std::tan(pi * (rng.uniform01() - 0.5));
}

double cauchy_density(const ComplexParam& gamma, double x);
double cauchy_cdf(const ComplexParam& gamma, double x);

/// V(p) = Var(f(X_1))/|f'(gamma)|^2 by adaptive quadrature against the
/// density: (E|X+alpha|^{2p} - |gamma+alpha|^{2p})/p^2 * |gamma+alpha|^{2(1-p)}
/// for p < 0, and exp(2E[log|X+alpha|]) * Var(log(X+alpha)) at p = 0.
/// Valid regimes: p in [-1,0) with alpha in H, p in (-1/2,0) with real alpha,
/// or p = 0; other combinations throw regime_error ("diverges").
double asymptotic_variance_quadrature(double p, Complex alpha,
                                      const ComplexParam& gamma);

/// Closed form for real alpha and -1/2 < p < 0:
/// V(p) = (|gamma+alpha|^2/p^2) * (cos(p*pi*b)/cos(p*pi) - 1),
/// b = 2*arg(gamma+alpha)/pi - 1.
double asymptotic_variance_cos(double p, double alpha,
                               const ComplexParam& gamma);

/// Closed form for alpha = gamma = i and -1 <= p < 0:
/// V(p) = (4^{1-p}/p^2) * ((1/sqrt(pi)) * Gamma(1/2-p)/Gamma(1-p) - 4^p).
double asymptotic_variance_gamma(double p);

struct ConfidenceDisc {
  Complex center;
  double radius;
  double level;     // 1 - a
  bool degenerate;  // constant sample, radius 0
};

/// Asymptotic confidence disc B(M^f_n, sqrt(V^f_n) * R_a / (sqrt(2n) |f'(M)|))
/// with R_a = sqrt(-2 ln a). Requires the f(X_1)-in-L^2 regime and n >= 2.
ConfidenceDisc confidence_disc(const GeneratorSpec& g, const Sample& s,
                               double a);
ConfidenceDisc confidence_disc(const GeneratorSpec& g,
                               std::span<const double> xs, double a);

struct MleResult {
  Complex gamma_hat;
  bool converged;
  std::size_t iterations;
  std::vector<double> steps;  // |Y_m - Y_{m-1}| per iteration
};

/// MLE of gamma through the fixed point of Q(theta) = M^{phi_{-conj(theta)}}_n
/// with phi_alpha(x) = (x+alpha)^{-1}. Globally convergent from any start in
/// H; non-convergence within max_iter is flagged, not thrown.
MleResult mle_fixed_point(const Sample& s, Complex start = Complex(0.0, 1.0),
                          double tol = 1e-10, std::size_t max_iter = 500);
MleResult mle_fixed_point(std::span<const double> xs,
                          Complex start = Complex(0.0, 1.0), double tol = 1e-10,
                          std::size_t max_iter = 500);

/// One step of the MLE map Q applied at theta.
Complex mle_map(std::span<const double> xs, Complex theta);

/// IF(x; T, P_gamma) = (f(x) - f(gamma)) / f'(gamma). Bounded in x for
/// p in [-1, 0) with alpha in H.
Complex influence_function(const GeneratorSpec& g, const ComplexParam& gamma,
                           double x);

/// Magnitude of the large/moderate-deviation decay rate: 1 / V(p).
double inaccuracy_rate(double p, Complex alpha, const ComplexParam& gamma);

}  // namespace powmean
