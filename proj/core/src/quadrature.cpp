#include "powmean/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace powmean {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Gauss-Kronrod 15(7) nodes and weights on [-1, 1] (positive half).
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {0.129484966168870, 0.279705391489277,
                           0.381830050505119, 0.417959183673469};

struct Seg {
  double a, b, val, err;
};

Seg gk15_once(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double kron = 0.0;
  double gauss = 0.0;
  for (int i = 0; i < 8; ++i) {
    const double dx = h * kXgk[i];
    double fsum;
    if (i == 7) {
      fsum = f(c);
    } else {
      fsum = f(c - dx) + f(c + dx);
    }
    kron += kWgk[i] * fsum;
    if (i % 2 == 1) gauss += kWg[i / 2] * fsum;
  }
  return Seg{a, b, kron * h, std::abs(kron - gauss) * h};
}

}  // namespace

QuadResult gk15_adaptive(const std::function<double(double)>& f, double a,
                         double b, double rel_tol, double abs_tol,
                         std::vector<double> interior_splits) {
  std::vector<double> pts;
  pts.push_back(a);
  std::sort(interior_splits.begin(), interior_splits.end());
  for (double s : interior_splits) {
    if (s > a && s < b) pts.push_back(s);
  }
  pts.push_back(b);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  std::vector<Seg> segs;
  int evals = 0;
  auto eval_seg = [&](double lo, double hi) {
    evals += 15;
    return gk15_once(f, lo, hi);
  };
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    segs.push_back(eval_seg(pts[i], pts[i + 1]));
  }
  auto worse = [](const Seg& x, const Seg& y) { return x.err < y.err; };
  std::make_heap(segs.begin(), segs.end(), worse);

  double total_val = 0.0;
  double total_err = 0.0;
  for (const Seg& s : segs) {
    total_val += s.val;
    total_err += s.err;
  }

  const int max_splits = 3000;
  for (int iter = 0; iter < max_splits; ++iter) {
    if (total_err <= std::max(abs_tol, rel_tol * std::abs(total_val))) break;
    std::pop_heap(segs.begin(), segs.end(), worse);
    const Seg worst = segs.back();
    segs.pop_back();
    total_val -= worst.val;
    total_err -= worst.err;
    const double mid = 0.5 * (worst.a + worst.b);
    for (const Seg& child :
         {eval_seg(worst.a, mid), eval_seg(mid, worst.b)}) {
      total_val += child.val;
      total_err += child.err;
      segs.push_back(child);
      std::push_heap(segs.begin(), segs.end(), worse);
    }
  }

  // Recompute the sums in one deterministic compensated pass.
  double sum = 0.0, comp = 0.0, err = 0.0;
  for (const Seg& s : segs) {
    const double y = s.val - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    err += s.err;
  }
  if (err > 20.0 * std::max(abs_tol, rel_tol * std::abs(sum))) {
    throw std::runtime_error(
        "gk15_adaptive: failed to reach tolerance, abs error estimate " +
        std::to_string(err));
  }
  return QuadResult{sum, err, evals};
}

namespace {

double cauchy_pdf(double x, double mu, double sigma) {
  const double d = x - mu;
  return (sigma / kPi) / (d * d + sigma * sigma);
}

// Generic complex-valued adaptive integral via two real passes.
Complex gk15_complex(const std::function<Complex(double)>& f, double a,
                     double b, std::vector<double> splits = {}) {
  auto re = [&](double t) { return f(t).real(); };
  auto im = [&](double t) { return f(t).imag(); };
  const double vr = gk15_adaptive(re, a, b, 1e-12, 2e-14, splits).value;
  const double vi = gk15_adaptive(im, a, b, 1e-12, 2e-14, splits).value;
  return {vr, vi};
}

double central_cut(Complex alpha, double mu, double sigma) {
  return 4.0 * (1.0 + std::abs(mu) + sigma + std::abs(alpha)) + 4.0;
}

// E[|X+alpha|^e] for real alpha, -1 < e < 1, e != 0, written as
// int_0^inf t^e * rho~(t) dt with rho~(t) = rho(t-a) + rho(-t-a);
// both halves are desingularized by power substitutions.
double abs_moment_real_alpha(double e, double a, double mu, double sigma) {
  auto rho_tilde = [&](double t) {
    return cauchy_pdf(t - a, mu, sigma) + cauchy_pdf(-t - a, mu, sigma);
  };
  // near part: t in (0, 1], u = t^{e+1}/(e+1)
  const double c1 = e + 1.0;
  auto near_f = [&](double u) {
    const double t = std::pow(c1 * u, 1.0 / c1);
    return rho_tilde(t);
  };
  const double near =
      gk15_adaptive(near_f, 0.0, 1.0 / c1, 1e-12, 2e-14).value;
  // far part: t in [1, inf), s = 1/t, then u = s^{1-e}/(1-e)
  const double c2 = 1.0 - e;
  const double ma = mu + a;
  auto h = [&](double s) {
    const double d1 = 1.0 - ma * s;
    const double d2 = 1.0 + ma * s;
    const double ss = sigma * s;
    return (sigma / kPi) *
           (1.0 / (d1 * d1 + ss * ss) + 1.0 / (d2 * d2 + ss * ss));
  };
  auto far_f = [&](double u) {
    const double s = std::pow(c2 * u, 1.0 / c2);
    return h(s);
  };
  const double far = gk15_adaptive(far_f, 0.0, 1.0 / c2, 1e-12, 2e-14).value;
  return near + far;
}

}  // namespace

double cauchy_abs_moment(double e, Complex alpha, double mu, double sigma) {
  if (e == 0.0) return 1.0;
  if (e >= 1.0) {
    throw regime_error("cauchy_abs_moment: E|X+alpha|^e diverges for e >= 1");
  }
  const bool alpha_real = alpha.imag() == 0.0;
  if (alpha_real) {
    if (e <= -1.0) {
      throw regime_error(
          "cauchy_abs_moment: E|X+alpha|^e diverges for e <= -1 with real "
          "alpha");
    }
    return abs_moment_real_alpha(e, alpha.real(), mu, sigma);
  }
  if (e < 0.0) {
    // bounded smooth integrand after x = mu + sigma*tan(theta)
    const double ar = alpha.real();
    const double ai = alpha.imag();
    auto f = [&](double th) {
      const double x = mu + sigma * std::tan(th);
      const double dx = x + ar;
      return std::pow(dx * dx + ai * ai, 0.5 * e) / kPi;
    };
    const double dip = std::atan((-ar - mu) / sigma);
    return gk15_adaptive(f, -kPi / 2, kPi / 2, 1e-12, 2e-14, {dip}).value;
  }
  // 0 < e < 1: central window plus power-substituted tails
  const double A = central_cut(alpha, mu, sigma);
  auto central = [&](double x) {
    return std::pow(std::norm(x + alpha), 0.5 * e) * cauchy_pdf(x, mu, sigma);
  };
  const double mid = gk15_adaptive(central, -A, A, 1e-12, 2e-14).value;
  const double c2 = 1.0 - e;
  auto tail = [&](double sign) {
    auto g = [&](double u) {
      const double s = std::pow(c2 * u, 1.0 / c2);
      const Complex num = sign > 0 ? 1.0 + alpha * s : -1.0 + alpha * s;
      const double d = 1.0 - sign * mu * s;
      const double ss = sigma * s;
      return std::pow(std::norm(num), 0.5 * e) * (sigma / kPi) /
             (d * d + ss * ss);
    };
    const double umax = std::pow(1.0 / A, c2) / c2;
    return gk15_adaptive(g, 0.0, umax, 1e-12, 2e-14).value;
  };
  return mid + tail(+1.0) + tail(-1.0);
}

Complex cauchy_frac_moment(double q, Complex alpha, double mu, double sigma) {
  if (!(q > 0.0 && q < 1.0)) {
    throw validation_error("cauchy_frac_moment: q must lie in (0, 1)");
  }
  const double A = central_cut(alpha, mu, sigma);
  std::vector<double> splits;
  if (alpha.imag() == 0.0) {
    const double pole = -alpha.real();
    if (pole > -A && pole < A) splits.push_back(pole);
  }
  auto central = [&](double x) {
    return principal_pow(x + alpha, q) * cauchy_pdf(x, mu, sigma);
  };
  const Complex mid = gk15_complex(central, -A, A, splits);

  const double c2 = 1.0 - q;
  auto tail = [&](double sign) {
    auto g = [&](double u) -> Complex {
      const double s = std::pow(c2 * u, 1.0 / c2);
      const Complex base = sign > 0 ? 1.0 + alpha * s : -1.0 + alpha * s;
      const double d = 1.0 - sign * mu * s;
      const double ss = sigma * s;
      return principal_pow(base, q) * ((sigma / kPi) / (d * d + ss * ss));
    };
    const double umax = std::pow(1.0 / A, c2) / c2;
    return gk15_complex(g, 0.0, umax);
  };
  return mid + tail(+1.0) + tail(-1.0);
}

LogMoments cauchy_log_moments(Complex alpha, double mu, double sigma) {
  LogMoments out{};
  const double V = 60.0;  // exp(-60) is far below the tolerance floor
  if (alpha.imag() == 0.0) {
    const double a = alpha.real();
    // arg(X+a) is 0 or pi exactly; P(X < -a) from the closed-form CDF.
    const double F = 0.5 + std::atan((-a - mu) / sigma) / kPi;
    out.e_arg = kPi * F;
    out.e_arg_sq = kPi * kPi * F;
    auto rho_tilde = [&](double t) {
      return cauchy_pdf(t - a, mu, sigma) + cauchy_pdf(-t - a, mu, sigma);
    };
    for (int k = 1; k <= 2; ++k) {
      auto near_f = [&](double v) {
        const double t = std::exp(-v);
        const double lg = -v;
        return (k == 1 ? lg : lg * lg) * rho_tilde(t) * t;
      };
      auto far_f = [&](double v) {
        const double t = std::exp(v);
        return (k == 1 ? v : v * v) * rho_tilde(t) * t;
      };
      const double near = gk15_adaptive(near_f, 0.0, V, 1e-12, 2e-14).value;
      const double far = gk15_adaptive(far_f, 0.0, V, 1e-12, 2e-14).value;
      if (k == 1) {
        out.e_log_abs = near + far;
      } else {
        out.e_log_abs_sq = near + far;
      }
    }
    return out;
  }

  const double ar = alpha.real();
  const double ai = alpha.imag();
  for (int k = 1; k <= 2; ++k) {
    auto arg_f = [&](double th) {
      const double x = mu + sigma * std::tan(th);
      const double w = std::atan2(ai, x + ar);
      return (k == 1 ? w : w * w) / kPi;
    };
    const double v =
        gk15_adaptive(arg_f, -kPi / 2, kPi / 2, 1e-12, 2e-14).value;
    if (k == 1) {
      out.e_arg = v;
    } else {
      out.e_arg_sq = v;
    }
  }
  const double A = central_cut(alpha, mu, sigma);
  for (int k = 1; k <= 2; ++k) {
    auto logabs = [&](double x) {
      const double dx = x + ar;
      return 0.5 * std::log(dx * dx + ai * ai);
    };
    auto central = [&](double x) {
      const double lg = logabs(x);
      return (k == 1 ? lg : lg * lg) * cauchy_pdf(x, mu, sigma);
    };
    auto tail = [&](double sign) {
      auto g = [&](double v) {
        const double x = sign * std::exp(v);
        const double lg = logabs(x);
        return (k == 1 ? lg : lg * lg) * cauchy_pdf(x, mu, sigma) *
               std::exp(v);
      };
      return gk15_adaptive(g, std::log(A), std::log(A) + V, 1e-12, 2e-14)
          .value;
    };
    const double v = gk15_adaptive(central, -A, A, 1e-12, 2e-14).value +
                     tail(+1.0) + tail(-1.0);
    if (k == 1) {
      out.e_log_abs = v;
    } else {
      out.e_log_abs_sq = v;
    }
  }
  return out;
}

}  // namespace powmean
