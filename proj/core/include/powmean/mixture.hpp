#pragma once

#include <cstddef>
#include <utility>

#include "powmean/cauchy.hpp"
#include "powmean/complex_core.hpp"
#include "powmean/rng.hpp"
#include "powmean/sample.hpp"

namespace powmean {

/// Two-component mixture Cauchy model C(t; mu1, sigma1, mu2, sigma2):
/// component 1 with weight 1-t, component 2 with weight t. Symmetric under
/// (t, gamma1, gamma2) -> (1-t, gamma2, gamma1).
class MixtureParams {
 public:
  MixtureParams(double t, ComplexParam gamma1, ComplexParam gamma2)
      : t_(t), gamma1_(gamma1), gamma2_(gamma2) {
    if (!(t > 0.0 && t < 1.0)) {
      throw validation_error("MixtureParams: t must lie in (0, 1)");
    }
    if (gamma1.gamma() == gamma2.gamma()) {
      throw validation_error("MixtureParams: components must be distinct");
    }
  }
  double t() const { return t_; }
  const ComplexParam& gamma1() const { return gamma1_; }
  const ComplexParam& gamma2() const { return gamma2_; }

 private:
  double t_;
  ComplexParam gamma1_;
  ComplexParam gamma2_;
};

/// Empirical or population fractional moments B_j = E[X^{j*alpha}], j = 1..3.
struct MomentTriple {
  Complex b1, b2, b3;
  double alpha_exp;  // the exponent alpha in (0, 1/6)
};

enum class MixtureBranch { direct, ratio };

struct MixtureEstimate {
  Complex a1, a2;                  // estimates of (mu_j + sigma_j i)^alpha
  Complex gamma1_hat, gamma2_hat;  // a_j^{1/alpha}
  double t_hat;                    // canonical representative, t_hat <= 1/2
  double t_raw;                    // real part of (a1 - B1)/(a1 - a2) before
                                   // clamping/relabeling
  double t_imag;                   // imaginary part of the ratio (noise
                                   // diagnostic, 0 for exact moments)
  MixtureBranch branch;
  bool low_quality;  // t_raw outside (-0.25, 1.25) or Im(gamma_hat) < 0
};

Sample sample_mixture(const MixtureParams& params, std::size_t n,
                      SplitMix64& rng);

/// Component-wise mean of (x^alpha, x^{2alpha}, x^{3alpha}) on the principal
/// branch; negative x contributes |x|^{j alpha} * exp(i pi j alpha), zero
/// contributes zero.
MomentTriple fractional_moment_vector(std::span<const double> xs,
                                      double alpha_exp);
inline MomentTriple fractional_moment_vector(const Sample& s,
                                             double alpha_exp) {
  return fractional_moment_vector(s.span(), alpha_exp);
}

/// Population moments B_j = (1-t) gamma1^{j alpha} + t gamma2^{j alpha}.
MomentTriple population_moments(const MixtureParams& params, double alpha_exp);

/// Closed-form five-parameter solver. Direct branch takes the quadratic roots
/// a = S/2 +- sqrt(S^2/4 - P); when Re(a1 - a2) is numerically zero the
/// principal square root sits on its branch cut, so the ratio branch solves
/// for a1/a2 + a2/a1 = S^2/P - 2 instead and reconstructs a1 = S q/(1+q).
MixtureEstimate solve_mixture(const MomentTriple& moments);

/// H({a,b},{c,d}) = max(min(|a-c|,|a-d|), min(|b-c|,|b-d|)). The formula is
/// directed exactly as written: H(A, C) and H(C, A) can differ.
double hausdorff_pair_distance(std::pair<Complex, Complex> a,
                               std::pair<Complex, Complex> c);

/// solve_mixture applied to the empirical fractional moments.
MixtureEstimate estimate_mixture(std::span<const double> xs, double alpha_exp);
inline MixtureEstimate estimate_mixture(const Sample& s, double alpha_exp) {
  return estimate_mixture(s.span(), alpha_exp);
}

}  // namespace powmean
