#include "powmean/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <string>
#include <thread>

#include "powmean/quadrature.hpp"

namespace powmean {

namespace {

unsigned resolve_workers(unsigned workers) {
  if (workers != 0) return workers;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

TrialSummary finalize(const ComplexAccumulator& acc, std::size_t n) {
  TrialSummary s{};
  s.mean = acc.mean();
  s.variance = acc.variance();
  s.count = acc.count();
  s.std_error =
      acc.count() > 0 ? std::sqrt(s.variance / static_cast<double>(s.count))
                      : 0.0;
  s.scaled_variance = static_cast<double>(n) * s.variance;
  return s;
}

// Per-trial statistic for a scenario. The workspace buffer is reused across
// trials of one worker.
std::function<Complex(SplitMix64&, std::vector<double>&)> make_stat(
    const Scenario& scenario) {
  return std::visit(
      [](const auto& sc) -> std::function<Complex(SplitMix64&, std::vector<double>&)> {
        using T = std::decay_t<decltype(sc)>;
        if constexpr (std::is_same_v<T, QamScenario>) {
          return [sc](SplitMix64& rng, std::vector<double>& buf) {
            for (double& x : buf) x = cauchy_draw(sc.gamma, rng);
            return quasi_arithmetic_mean(sc.gen, std::span<const double>(buf))
                .estimate;
          };
        } else if constexpr (std::is_same_v<T, TruncatedScenario>) {
          return [sc](SplitMix64& rng, std::vector<double>& buf) {
            for (double& x : buf) x = cauchy_draw(sc.gamma, rng);
            return truncated_power_mean(sc.p, sc.alpha,
                                        std::span<const double>(buf))
                .estimate;
          };
        } else if constexpr (std::is_same_v<T, ProductsScenario>) {
          return [sc](SplitMix64& rng, std::vector<double>& buf) {
            for (double& x : buf) x = cauchy_draw(sc.gamma, rng);
            return sums_of_products(sc.m, sc.alpha,
                                    std::span<const double>(buf))
                .estimate;
          };
        } else if constexpr (std::is_same_v<T, MleScenario>) {
          return [sc](SplitMix64& rng, std::vector<double>& buf) {
            for (double& x : buf) x = cauchy_draw(sc.gamma, rng);
            return mle_fixed_point(std::span<const double>(buf),
                                   Complex(0.0, 1.0), sc.tol, sc.max_iter)
                .gamma_hat;
          };
        } else {
          static_assert(std::is_same_v<T, MixtureScenario>);
          const Complex a1 = principal_pow(sc.params.gamma1().gamma(),
                                           sc.alpha_exp);
          const Complex a2 = principal_pow(sc.params.gamma2().gamma(),
                                           sc.alpha_exp);
          return [sc, a1, a2](SplitMix64& rng, std::vector<double>& buf) {
            for (double& x : buf) {
              const bool second = rng.uniform01() < sc.params.t();
              x = cauchy_draw(second ? sc.params.gamma2() : sc.params.gamma1(),
                              rng);
            }
            const MixtureEstimate est =
                estimate_mixture(std::span<const double>(buf), sc.alpha_exp);
            return Complex(
                hausdorff_pair_distance({est.a1, est.a2}, {a1, a2}), 0.0);
          };
        }
      },
      scenario);
}

}  // namespace

TrialSummary run_stat_trials(
    std::uint64_t master_seed, std::size_t reps, std::size_t n,
    const std::function<Complex(SplitMix64&, std::vector<double>&)>& stat,
    unsigned workers) {
  if (reps < 1) throw validation_error("run_stat_trials: reps >= 1 required");
  if (n < 1) throw validation_error("run_stat_trials: n >= 1 required");

  constexpr std::size_t kBlock = 64;
  const std::size_t nblocks = (reps + kBlock - 1) / kBlock;
  std::vector<ComplexAccumulator> blocks(nblocks);
  std::vector<std::exception_ptr> failures(nblocks);

  const unsigned nthreads =
      static_cast<unsigned>(std::min<std::size_t>(resolve_workers(workers),
                                                  nblocks));
  std::atomic<std::size_t> next_block{0};
  std::atomic<bool> failed{false};

  auto body = [&]() {
    std::vector<double> buf(n);
    for (;;) {
      const std::size_t b = next_block.fetch_add(1);
      if (b >= nblocks || failed.load(std::memory_order_relaxed)) break;
      const std::size_t lo = b * kBlock;
      const std::size_t hi = std::min(reps, lo + kBlock);
      bool abort = false;
      for (std::size_t trial = lo; trial < hi; ++trial) {
        try {
          SplitMix64 rng(derive_stream_seed(master_seed, trial));
          blocks[b].add(stat(rng, buf));
        } catch (const std::exception& e) {
          failures[b] = std::make_exception_ptr(regime_error(
              "trial " + std::to_string(trial) + ": " + e.what()));
          failed.store(true, std::memory_order_relaxed);
          abort = true;
          break;
        }
      }
      if (abort) break;
    }
  };

  if (nthreads <= 1) {
    body();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (unsigned i = 0; i < nthreads; ++i) pool.emplace_back(body);
    for (auto& t : pool) t.join();
  }

  for (std::size_t b = 0; b < nblocks; ++b) {
    if (failures[b]) std::rethrow_exception(failures[b]);
  }

  // Deterministic ordered reduction over blocks.
  ComplexAccumulator total;
  for (const ComplexAccumulator& acc : blocks) total.merge(acc);
  return finalize(total, n);
}

TrialSummary run_trials(const TrialConfig& cfg, unsigned workers) {
  return run_stat_trials(cfg.master_seed, cfg.reps, cfg.n,
                         make_stat(cfg.scenario), workers);
}

UnbiasednessReport unbiasedness_check(const TrialConfig& cfg, Complex target,
                                      unsigned workers) {
  std::visit(
      [&](const auto& sc) {
        using T = std::decay_t<decltype(sc)>;
        if constexpr (std::is_same_v<T, QamScenario>) {
          const double p = sc.gen.p();
          if (p > 0.0) {
            throw regime_error(
                "unbiasedness_check: positive power means are not integrable; "
                "use the truncated statistic");
          }
          if (p == -1.0 && sc.gen.alpha_real()) {
            throw regime_error(
                "unbiasedness_check: M^f_n is not in L^1 for p = -1 with real "
                "alpha");
          }
          if (cfg.n < 2) {
            throw regime_error("unbiasedness_check: n >= 2 required");
          }
        } else if constexpr (std::is_same_v<T, TruncatedScenario>) {
          if (cfg.n < 2) {
            throw regime_error("unbiasedness_check: n >= 2 required");
          }
        } else {
          throw validation_error(
              "unbiasedness_check: applies to qam or truncated scenarios");
        }
      },
      cfg.scenario);

  const TrialSummary s = run_trials(cfg, workers);
  UnbiasednessReport r{};
  r.summary = s;
  r.target = target;
  r.abs_error = std::abs(s.mean - target);
  r.z_score = s.std_error > 0.0 ? r.abs_error / s.std_error : 0.0;
  r.pass = r.z_score <= 4.0;
  return r;
}

std::vector<VarianceSweepRow> variance_sweep(const std::vector<double>& p_grid,
                                             Complex alpha,
                                             const ComplexParam& gamma,
                                             std::size_t n, std::size_t reps,
                                             std::uint64_t master_seed,
                                             unsigned workers) {
  std::vector<VarianceSweepRow> rows;
  rows.reserve(p_grid.size());
  for (std::size_t i = 0; i < p_grid.size(); ++i) {
    const double p = p_grid[i];
    VarianceSweepRow row{};
    row.p = p;
    const TrialConfig cfg{derive_stream_seed(master_seed, i), reps, n,
                          QamScenario{gamma, GeneratorSpec(p, alpha)}};
    row.empirical_scaled_var = run_trials(cfg, workers).scaled_variance;
    try {
      row.theoretical = asymptotic_variance_quadrature(p, alpha, gamma);
      row.rel_gap = std::abs(row.empirical_scaled_var - *row.theoretical) /
                    *row.theoretical;
    } catch (const regime_error& e) {
      row.regime_note = e.what();
      row.rel_gap = std::numeric_limits<double>::quiet_NaN();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

double TableReport::cell(std::size_t n, double t) const {
  for (const TableCell& c : cells) {
    if (c.n == n && c.t == t) return c.mean_hausdorff;
  }
  throw validation_error("TableReport::cell: no such cell");
}

TableReport reproduce_tables(int which, const std::vector<std::size_t>& n_list,
                             const std::vector<double>& t_list,
                             std::size_t reps, std::uint64_t master_seed,
                             unsigned workers) {
  if (which != 1 && which != 2) {
    throw validation_error("reproduce_tables: which must be 1 or 2");
  }
  TableReport rep{};
  rep.which = which;
  rep.mu1 = 0.0;
  rep.sigma1 = 1.0;
  rep.mu2 = which == 1 ? 20.0 : 5.0;
  rep.sigma2 = which == 1 ? 2.0 : 6.0;
  rep.n_list = n_list;
  rep.t_list = t_list;
  constexpr double kAlphaExp = 0.1;  // the simulations use alpha = 1/10

  std::size_t cell_index = 0;
  for (std::size_t n : n_list) {
    for (double t : t_list) {
      const MixtureParams params(t, ComplexParam(rep.mu1, rep.sigma1),
                                 ComplexParam(rep.mu2, rep.sigma2));
      const TrialConfig cfg{derive_stream_seed(master_seed, cell_index), reps,
                            n, MixtureScenario{params, kAlphaExp}};
      const TrialSummary s = run_trials(cfg, workers);
      rep.cells.push_back(TableCell{n, t, s.mean.real()});
      ++cell_index;
    }
  }
  return rep;
}

double coverage_experiment(const GeneratorSpec& g, const ComplexParam& gamma,
                           std::size_t n, double a, std::size_t reps,
                           std::uint64_t master_seed, unsigned workers) {
  const Complex target = gamma.gamma();
  auto stat = [g, gamma, a, target](SplitMix64& rng,
                                    std::vector<double>& buf) -> Complex {
    for (double& x : buf) x = cauchy_draw(gamma, rng);
    const ConfidenceDisc disc =
        confidence_disc(g, std::span<const double>(buf), a);
    const bool contains = std::abs(target - disc.center) < disc.radius;
    return {contains ? 1.0 : 0.0, 0.0};
  };
  // Validate the regime once up front so a bad (p, alpha) fails loudly
  // rather than inside a worker.
  {
    SplitMix64 probe(derive_stream_seed(master_seed, 0));
    std::vector<double> buf(n);
    for (double& x : buf) x = cauchy_draw(gamma, probe);
    confidence_disc(g, std::span<const double>(buf), a);
  }
  return run_stat_trials(master_seed, reps, n, stat, workers).mean.real();
}

PrsReport prs_variance_sandwich_check(std::size_t m, Complex alpha,
                                      const ComplexParam& gamma, std::size_t n,
                                      std::size_t reps,
                                      std::uint64_t master_seed,
                                      unsigned workers) {
  if (m < 2) {
    throw validation_error("prs_variance_sandwich_check: m >= 2 required");
  }
  if (n < m) {
    throw validation_error("prs_variance_sandwich_check: n >= m required");
  }
  const double dm = static_cast<double>(m);

  // Theory side: A = E|Y|^{2/m}, beta = |E Y^{1/m}|^2.
  const Complex c = cauchy_frac_moment(1.0 / dm, alpha, gamma.mu(),
                                       gamma.sigma());
  const double beta = std::norm(c);
  const double b_m = std::pow(beta, dm);
  double a_m = std::numeric_limits<double>::infinity();
  bool upper_infinite = false;
  try {
    const double big_a =
        cauchy_abs_moment(2.0 / dm, alpha, gamma.mu(), gamma.sigma());
    a_m = std::pow(big_a, dm);
  } catch (const regime_error&) {
    upper_infinite = true;  // E|Y|^{2/m} diverges (m = 2 for the Cauchy law)
  }

  PrsReport rep{};
  rep.upper_infinite = upper_infinite;
  if (upper_infinite) {
    rep.upper_bound = std::numeric_limits<double>::infinity();
    rep.lower_bound = dm * b_m;  // limit of m Var(G_m) b_m / a_m
    rep.theoretical = std::numeric_limits<double>::infinity();
  } else {
    const double var_g = a_m - b_m;
    rep.upper_bound = dm * var_g;
    rep.lower_bound = dm * var_g * b_m / a_m;
    // Exact n*Var(R_{m,n}) from the overlap decomposition:
    // Var = sum_i C(m,i) C(n-m,m-i)/C(n,m) * A^i beta^{m-i} - beta^m.
    const double big_a = std::pow(a_m, 1.0 / dm);
    double var_r = -b_m;
    for (std::size_t i = 0; i <= m; ++i) {
      const long long rem = static_cast<long long>(n) -
                            2 * static_cast<long long>(m) +
                            static_cast<long long>(i);
      if (rem < 0) continue;  // C(n-m, m-i) = 0
      const double di = static_cast<double>(i);
      const double dn = static_cast<double>(n);
      const double lw = std::lgamma(dm + 1) - std::lgamma(di + 1) -
                        std::lgamma(dm - di + 1) + std::lgamma(dn - dm + 1) -
                        std::lgamma(dm - di + 1) -
                        std::lgamma(static_cast<double>(rem) + 1) -
                        (std::lgamma(dn + 1) - std::lgamma(dm + 1) -
                         std::lgamma(dn - dm + 1));
      var_r += std::exp(lw) * std::pow(big_a, di) * std::pow(beta, dm - di);
    }
    rep.theoretical = static_cast<double>(n) * var_r;
  }

  // Empirical side: batch means give a heavy-tail-tolerant standard error.
  // Batches run serially; the per-trial work is O(n*m) and stays trivial at
  // the scales this check uses. Each batch needs enough trials for its own
  // variance estimate to mean something.
  const std::size_t batches =
      std::max<std::size_t>(1, std::min<std::size_t>(100, reps / 20));
  const std::size_t per_batch = reps / batches;
  std::vector<double> batch_vals;
  batch_vals.reserve(batches);
  std::size_t consumed = 0;
  for (std::size_t b = 0; b < batches; ++b) {
    const std::size_t take = b + 1 == batches ? reps - consumed : per_batch;
    ComplexAccumulator acc;
    auto stat = make_stat(Scenario(ProductsScenario{gamma, m, alpha}));
    std::vector<double> buf(n);
    for (std::size_t j = 0; j < take; ++j) {
      SplitMix64 rng(derive_stream_seed(master_seed, consumed + j));
      acc.add(stat(rng, buf));
    }
    consumed += take;
    batch_vals.push_back(static_cast<double>(n) * acc.variance_unbiased());
  }
  (void)workers;
  double mean_v = 0.0;
  for (double v : batch_vals) mean_v += v;
  mean_v /= static_cast<double>(batch_vals.size());
  double var_v = 0.0;
  for (double v : batch_vals) var_v += (v - mean_v) * (v - mean_v);
  var_v /= batch_vals.size() > 1 ? static_cast<double>(batch_vals.size() - 1)
                                 : 1.0;
  rep.empirical_scaled_var = mean_v;
  rep.std_error = std::sqrt(var_v / static_cast<double>(batch_vals.size()));
  rep.pass = mean_v >= rep.lower_bound - 3.0 * rep.std_error &&
             (upper_infinite ||
              mean_v <= rep.upper_bound + 3.0 * rep.std_error);
  return rep;
}

}  // namespace powmean
