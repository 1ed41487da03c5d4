#include "powmean/mixture.hpp"

#include <algorithm>
#include <cmath>

namespace powmean {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

void require_alpha_exp(double alpha_exp) {
  if (!(alpha_exp > 0.0 && alpha_exp < 1.0 / 6.0)) {
    throw validation_error(
        "alpha_exp must lie in (0, 1/6): the third fractional moment needs a "
        "finite variance");
  }
}

}  // namespace

Sample sample_mixture(const MixtureParams& params, std::size_t n,
                      SplitMix64& rng) {
  if (n < 1) throw validation_error("sample_mixture: n >= 1 required");
  std::vector<double> xs(n);
  for (double& x : xs) {
    const bool second = rng.uniform01() < params.t();
    x = cauchy_draw(second ? params.gamma2() : params.gamma1(), rng);
  }
  return Sample(std::move(xs));
}

MomentTriple fractional_moment_vector(std::span<const double> xs,
                                      double alpha_exp) {
  require_alpha_exp(alpha_exp);
  if (xs.empty()) {
    throw validation_error("fractional_moment_vector: empty sample");
  }
  // Phases for negative arguments: x^{j alpha} = |x|^{j alpha} e^{i pi j alpha}.
  const Complex ph1{std::cos(kPi * alpha_exp), std::sin(kPi * alpha_exp)};
  const Complex ph2{std::cos(2.0 * kPi * alpha_exp),
                    std::sin(2.0 * kPi * alpha_exp)};
  const Complex ph3{std::cos(3.0 * kPi * alpha_exp),
                    std::sin(3.0 * kPi * alpha_exp)};
  Complex s1{0, 0}, s2{0, 0}, s3{0, 0};
  for (double x : xs) {
    if (x == 0.0) continue;  // 0^{j alpha} = 0
    const double m1 = std::pow(std::abs(x), alpha_exp);
    const double m2 = m1 * m1;
    const double m3 = m2 * m1;
    if (x > 0.0) {
      s1 += m1;
      s2 += m2;
      s3 += m3;
    } else {
      s1 += m1 * ph1;
      s2 += m2 * ph2;
      s3 += m3 * ph3;
    }
  }
  const double n = static_cast<double>(xs.size());
  return MomentTriple{s1 / n, s2 / n, s3 / n, alpha_exp};
}

MomentTriple population_moments(const MixtureParams& params,
                                double alpha_exp) {
  require_alpha_exp(alpha_exp);
  const Complex g1 = params.gamma1().gamma();
  const Complex g2 = params.gamma2().gamma();
  const double t = params.t();
  auto blend = [&](double j) {
    return (1.0 - t) * principal_pow(g1, j * alpha_exp) +
           t * principal_pow(g2, j * alpha_exp);
  };
  return MomentTriple{blend(1.0), blend(2.0), blend(3.0), alpha_exp};
}

MixtureEstimate solve_mixture(const MomentTriple& moments) {
  require_alpha_exp(moments.alpha_exp);
  const Complex b1 = moments.b1;
  const Complex b2 = moments.b2;
  const Complex b3 = moments.b3;
  const Complex denom = b2 - b1 * b1;
  const double denom_scale =
      std::max({1.0, std::abs(b2), std::norm(b1)});
  if (std::abs(denom) <= 1e-13 * denom_scale) {
    throw regime_error(
        "solve_mixture: components indistinguishable (B2 - B1^2 is "
        "numerically zero)");
  }
  const Complex s = (b3 - b1 * b2) / denom;  // a1 + a2
  const Complex p = (b1 * b3 - b2 * b2) / denom;  // a1 * a2
  const Complex disc = 0.25 * s * s - p;          // ((a1 - a2)/2)^2
  const Complex w = std::sqrt(disc);

  Complex a1, a2;
  MixtureBranch branch;
  if (std::abs(w) <= 1e-14 * (std::abs(s) + 1.0)) {
    throw regime_error(
        "solve_mixture: components indistinguishable (zero discriminant)");
  }
  if (std::abs(w.real()) >= 1e-8 * std::abs(w)) {
    branch = MixtureBranch::direct;
    a1 = 0.5 * s + w;
    a2 = 0.5 * s - w;
  } else {
    // Re(a1 - a2) ~ 0: sqrt(disc) sits on its branch cut. The ratio
    // u = a1/a2 + a2/a1 = S^2/P - 2 has a discriminant off the cut whenever
    // |a1| != |a2|.
    branch = MixtureBranch::ratio;
    if (std::abs(p) <= 1e-300) {
      throw regime_error("solve_mixture: degenerate product of roots");
    }
    const Complex u = s * s / p - 2.0;
    const Complex v = std::sqrt(u * u - 4.0);
    const Complex q = 0.5 * (u + v);  // a1/a2 or a2/a1
    const Complex one_q = 1.0 + q;
    if (std::abs(one_q) <= 1e-12 * (1.0 + std::abs(q))) {
      throw regime_error(
          "solve_mixture: antipodal roots, ratio branch degenerate");
    }
    a1 = s * q / one_q;
    a2 = s / one_q;
  }

  const Complex t_complex = (a1 - b1) / (a1 - a2);
  double t_raw = t_complex.real();
  const double t_imag = t_complex.imag();
  const double inv_alpha = 1.0 / moments.alpha_exp;
  Complex g1 = principal_pow(a1, inv_alpha);
  Complex g2 = principal_pow(a2, inv_alpha);

  bool low_quality = !(t_raw > -0.25 && t_raw < 1.25);
  if (g1.imag() < 0.0 || g2.imag() < 0.0) low_quality = true;

  constexpr double eps = 1e-6;
  double t_hat = std::clamp(t_raw, eps, 1.0 - eps);
  // Canonical labeling: report the representative with t_hat <= 1/2.
  if (t_hat > 0.5) {
    std::swap(a1, a2);
    std::swap(g1, g2);
    t_hat = 1.0 - t_hat;
  }
  return MixtureEstimate{a1,    a2,    g1,     g2,         t_hat,
                         t_raw, t_imag, branch, low_quality};
}

double hausdorff_pair_distance(std::pair<Complex, Complex> a,
                               std::pair<Complex, Complex> c) {
  const double d11 = std::abs(a.first - c.first);
  const double d12 = std::abs(a.first - c.second);
  const double d21 = std::abs(a.second - c.first);
  const double d22 = std::abs(a.second - c.second);
  return std::max(std::min(d11, d12), std::min(d21, d22));
}

MixtureEstimate estimate_mixture(std::span<const double> xs,
                                 double alpha_exp) {
  if (xs.size() < 3) {
    throw regime_error("estimate_mixture: n >= 3 required");
  }
  return solve_mixture(fractional_moment_vector(xs, alpha_exp));
}

}  // namespace powmean
