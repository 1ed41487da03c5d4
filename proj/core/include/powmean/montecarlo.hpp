#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "powmean/cauchy.hpp"
#include "powmean/complex_core.hpp"
#include "powmean/estimators.hpp"
#include "powmean/mixture.hpp"

namespace powmean {

/// One-pass complex Welford accumulator with deterministic pairwise merge.
/// Var(Y) = Var(Re Y) + Var(Im Y) = E|Y - EY|^2.
class ComplexAccumulator {
 public:
  void add(Complex y) {
    ++count_;
    const Complex delta = y - mean_;
    mean_ += delta / static_cast<double>(count_);
    m2_ += (std::conj(delta) * (y - mean_)).real();
  }
  void merge(const ComplexAccumulator& o) {
    if (o.count_ == 0) return;
    if (count_ == 0) {
      *this = o;
      return;
    }
    const double na = static_cast<double>(count_);
    const double nb = static_cast<double>(o.count_);
    const Complex delta = o.mean_ - mean_;
    const double n = na + nb;
    mean_ += delta * (nb / n);
    m2_ += o.m2_ + std::norm(delta) * na * nb / n;
    count_ += o.count_;
  }
  std::size_t count() const { return count_; }
  Complex mean() const { return mean_; }
  /// Population variance (1/n). Zero for a single observation.
  double variance() const {
    return count_ > 0 ? m2_ / static_cast<double>(count_) : 0.0;
  }
  /// Unbiased variance (1/(n-1)).
  double variance_unbiased() const {
    return count_ > 1 ? m2_ / static_cast<double>(count_ - 1) : 0.0;
  }

 private:
  std::size_t count_ = 0;
  Complex mean_{0.0, 0.0};
  double m2_ = 0.0;
};

struct TrialSummary {
  Complex mean;
  double variance;  // Var(Re) + Var(Im), population normalization
  std::size_t count;
  double std_error;       // sqrt(variance / count)
  double scaled_variance;  // n * variance, n = per-trial sample size
};

// Scenario payloads; each trial draws one sample of size n and reduces it to
// one complex statistic.
struct QamScenario {
  ComplexParam gamma;
  GeneratorSpec gen;
};
struct TruncatedScenario {
  ComplexParam gamma;
  double p;
  Complex alpha;
};
struct ProductsScenario {
  ComplexParam gamma;
  std::size_t m;
  Complex alpha;
};
struct MleScenario {
  ComplexParam gamma;
  double tol = 1e-10;
  std::size_t max_iter = 500;
};
/// Per-trial statistic is the Hausdorff distance of the estimated pair
/// {a1, a2} to the true pair (as a real value in the complex slot).
struct MixtureScenario {
  MixtureParams params;
  double alpha_exp;
};

using Scenario = std::variant<QamScenario, TruncatedScenario, ProductsScenario,
                              MleScenario, MixtureScenario>;

struct TrialConfig {
  std::uint64_t master_seed;
  std::size_t reps;
  std::size_t n;
  Scenario scenario;
};

/// Runs reps independent trials. Trial i uses an RNG seeded by
/// derive_stream_seed(master_seed, i); results are bit-identical for any
/// worker count. workers = 0 picks the hardware concurrency.
TrialSummary run_trials(const TrialConfig& cfg, unsigned workers = 0);

/// Same engine for an arbitrary per-trial statistic: stat(rng, buf) where buf
/// is a reusable workspace of size n.
TrialSummary run_stat_trials(
    std::uint64_t master_seed, std::size_t reps, std::size_t n,
    const std::function<Complex(SplitMix64&, std::vector<double>&)>& stat,
    unsigned workers = 0);

struct UnbiasednessReport {
  TrialSummary summary;
  Complex target;
  double abs_error;  // |mean - target|
  double z_score;    // abs_error / std_error
  bool pass;         // z <= 4
};

/// Verifies E[estimator] = target in an integrable regime. Valid scenarios:
/// qam with p in (-1, 0] (n >= 2), qam with p = -1 and alpha in H (n >= 2),
/// or the truncated statistic with p in (0,1) (n >= 2). Anything else throws
/// regime_error naming the violated condition.
UnbiasednessReport unbiasedness_check(const TrialConfig& cfg, Complex target,
                                      unsigned workers = 0);

struct VarianceSweepRow {
  double p;
  double empirical_scaled_var;
  std::optional<double> theoretical;  // V(p); empty when the regime diverges
  std::string regime_note;            // diagnostic for divergent rows
  double rel_gap;                     // |emp - theory| / theory when defined
};

std::vector<VarianceSweepRow> variance_sweep(const std::vector<double>& p_grid,
                                             Complex alpha,
                                             const ComplexParam& gamma,
                                             std::size_t n, std::size_t reps,
                                             std::uint64_t master_seed,
                                             unsigned workers = 0);

struct TableCell {
  std::size_t n;
  double t;
  double mean_hausdorff;
};

struct TableReport {
  int which;  // 1 or 2
  double mu1, sigma1, mu2, sigma2;
  std::vector<std::size_t> n_list;
  std::vector<double> t_list;
  std::vector<TableCell> cells;  // row-major: n outer, t inner
  double cell(std::size_t n, double t) const;
};

/// Reproduces the mixture tables: scenario 1 is (mu1,sigma1,mu2,sigma2) =
/// (0,1,20,2), scenario 2 is (0,1,5,6); alpha = 1/10.
TableReport reproduce_tables(int which, const std::vector<std::size_t>& n_list,
                             const std::vector<double>& t_list,
                             std::size_t reps, std::uint64_t master_seed,
                             unsigned workers = 0);

/// Fraction of trials whose confidence disc contains gamma.
double coverage_experiment(const GeneratorSpec& g, const ComplexParam& gamma,
                           std::size_t n, double a, std::size_t reps,
                           std::uint64_t master_seed, unsigned workers = 0);

struct PrsReport {
  double empirical_scaled_var;  // n * Var(R_{m,n}), batch-mean estimate
  double std_error;             // batch-based standard error
  double lower_bound;           // m Var(G_m) b_m / a_m (limit m b_m if a_m = inf)
  double upper_bound;           // m Var(G_m); +inf when E|Y|^{2/m} diverges
  double theoretical;           // exact n*Var(R_{m,n}) when finite, else +inf
  bool upper_infinite;
  bool pass;  // within [lower - 3 SE, upper + 3 SE]
};

/// Checks the sums-of-products variance sandwich
/// m Var(G_m) |E Y^{1/m}|^{2m} / (E|Y|^{2/m})^m <= n Var(R_{m,n})
///                                              <= m Var(G_m)
/// with both bounds evaluated by quadrature of the single-draw moments.
PrsReport prs_variance_sandwich_check(std::size_t m, Complex alpha,
                                      const ComplexParam& gamma, std::size_t n,
                                      std::size_t reps,
                                      std::uint64_t master_seed,
                                      unsigned workers = 0);

}  // namespace powmean
