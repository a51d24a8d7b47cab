#pragma once

// Empirical phase-transition harness.
//
// Trials sample random pattern matrices, run the certified margin solver and
// estimate feasibility probabilities against the analytic capacity. Three
// ensembles: standard normal, symmetric +-1, and biased +-1 with
// P(+1) = (1+ma)/2. For the biased ensemble a trial tests the stored-pattern
// event for one site: the constraint rows are q_i * h_i with q the site
// column, which is where the correlated capacity lives (an unreduced biased
// matrix is asymptotically always feasible, since x ∝ 1 exploits the common
// mean).
//
// Determinism contract: every sampled entry is a pure function of
// (master seed, stream, trial index, row index) via derive_seed, so sweeps
// are bit-identical across reruns and worker counts. Alpha sweeps couple
// trials through nested prefixes of one growing matrix, making each trial's
// decision sequence monotone along the grid (adding rows never helps), and
// p_feasible exactly nonincreasing.

#include <Eigen/Dense>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gardner/margin.hpp"
#include "gardner/parallel.hpp"
#include "gardner/rng.hpp"

namespace gardner {

class EnsembleKind {
 public:
  enum class Tag { Gaussian, BernoulliSymmetric, BernoulliAsymmetric };

  static EnsembleKind gaussian() { return EnsembleKind(Tag::Gaussian, 0.0); }
  static EnsembleKind bernoulli_symmetric() { return EnsembleKind(Tag::BernoulliSymmetric, 0.0); }
  static EnsembleKind bernoulli_asymmetric(double ma) {
    if (!(ma >= 0.0) || !(ma < 1.0))
      throw std::invalid_argument("EnsembleKind: ma must lie in [0, 1)");
    return EnsembleKind(Tag::BernoulliAsymmetric, ma);
  }

  Tag tag() const { return tag_; }
  double bias() const { return ma_; }

  std::string name() const {
    switch (tag_) {
      case Tag::Gaussian: return "gaussian";
      case Tag::BernoulliSymmetric: return "bernoulli";
      default: return "asymmetric";
    }
  }

 private:
  EnsembleKind(Tag tag, double ma) : tag_(tag), ma_(ma) {}
  Tag tag_;
  double ma_;
};

struct TrialConfig {
  int n = 2;
  double alpha = 1.0;
  double kappa = 0.0;
  EnsembleKind ensemble = EnsembleKind::gaussian();
  std::uint64_t seed = 0;
  double solver_tol = 1e-6;

  void validate() const {
    if (n < 2) throw std::invalid_argument("TrialConfig: n must be >= 2");
    if (!(alpha > 0.0)) throw std::invalid_argument("TrialConfig: alpha must be > 0");
    if (rows_for(alpha, n) < 1) throw std::invalid_argument("TrialConfig: m = round(alpha*n) < 1");
    if (!(solver_tol > 0.0)) throw std::invalid_argument("TrialConfig: solver_tol must be > 0");
  }

  // m = round(alpha * n), ties upward.
  static int rows_for(double alpha, int n) {
    return static_cast<int>(std::floor(alpha * n + 0.5));
  }
};

struct SweepResult {
  enum class Axis { Alpha, Kappa };
  Axis axis = Axis::Alpha;
  std::vector<double> grid;
  std::vector<double> p_feasible;
  std::vector<int> n_trials;
  std::vector<int> n_undecided;
  std::vector<double> wilson_halfwidth;
};

// 95% Wilson score halfwidth for k successes out of n.
inline double wilson_halfwidth(int k, int n) {
  if (n <= 0) return 0.0;
  constexpr double z = 1.959963984540054;  // Phi^{-1}(0.975)
  const double p = static_cast<double>(k) / n;
  const double z2n = z * z / n;
  return z * std::sqrt(p * (1.0 - p) / n + z2n / (4.0 * n)) / (1.0 + z2n);
}

namespace detail {

// Stream tags for seed derivation (keeps independent commands independent).
inline constexpr std::uint64_t kStreamMatrix = 1;
inline constexpr std::uint64_t kStreamSweep = 2;
inline constexpr std::uint64_t kStreamAlphaHat = 3;
inline constexpr std::uint64_t kStreamSphere = 4;

// Raw ensemble row; entry (i, j) depends only on (seed of row i, j).
inline Eigen::RowVectorXd raw_row(const EnsembleKind& ens, int n, std::uint64_t row_seed) {
  Eigen::RowVectorXd row(n);
  SplitMix64 rng(row_seed);
  switch (ens.tag()) {
    case EnsembleKind::Tag::Gaussian:
      for (int j = 0; j < n; ++j) row(j) = rng.normal();
      break;
    case EnsembleKind::Tag::BernoulliSymmetric:
      for (int j = 0; j < n; ++j) row(j) = rng.pm1(0.5);
      break;
    case EnsembleKind::Tag::BernoulliAsymmetric: {
      const double p = (1.0 + ens.bias()) / 2.0;
      for (int j = 0; j < n; ++j) row(j) = rng.pm1(p);
      break;
    }
  }
  return row;
}

// Constraint row presented to the solver. Gaussian / symmetric rows are the
// raw patterns; the biased ensemble uses the site-reduced row q * h with one
// extra draw for q.
inline Eigen::RowVectorXd constraint_row(const EnsembleKind& ens, int n, std::uint64_t row_seed) {
  if (ens.tag() != EnsembleKind::Tag::BernoulliAsymmetric) return raw_row(ens, n, row_seed);
  const double p = (1.0 + ens.bias()) / 2.0;
  SplitMix64 rng(row_seed);
  const double q = rng.pm1(p);
  Eigen::RowVectorXd row(n);
  for (int j = 0; j < n; ++j) row(j) = q * rng.pm1(p);
  return row;
}

inline Eigen::MatrixXd constraint_matrix(const EnsembleKind& ens, int n, int m,
                                         std::uint64_t trial_seed) {
  Eigen::MatrixXd rows(m, n);
  for (int i = 0; i < m; ++i)
    rows.row(i) = constraint_row(ens, n, derive_seed(trial_seed, kStreamMatrix, i));
  return rows;
}

// Decision on an m-row prefix. kappa > 0 uses the certified two-sided rule;
// kappa = 0 decides on the sphere through the dual: margin_upper < tol means
// the origin sits in the hull (no unit direction clears 0), margin_lower > tol
// certifies a positive margin. kappa < 0 is witness-only.
inline Feasibility decide_rows(Eigen::Ref<const Eigen::MatrixXd> rows, double kappa, double tol,
                               int max_iters, std::uint64_t sphere_seed,
                               const Eigen::VectorXd* warm, Eigen::VectorXd* lambda_out) {
  if (kappa < 0.0) {
    PatternMatrix pm(rows);
    const auto found = sphere_heuristic(pm, kappa, 16, sphere_seed);
    return found.witness_found ? Feasibility::Feasible : Feasibility::Undecided;
  }
  SolveOptions opt;
  opt.tol = tol;
  opt.max_iters = max_iters;
  opt.warm_lambda = warm;
  if (kappa > 0.0) {
    opt.stop_if_feasible_at = kappa;
    opt.stop_if_infeasible_at = kappa;
  } else {
    opt.stop_if_feasible_at = tol;  // exit once margin_lower clears tol
    opt.stop_if_infeasible_at = tol;
  }
  const MarginCertificate cert = max_margin_solve(rows, opt);
  if (lambda_out) *lambda_out = cert.lambda;
  if (kappa > 0.0) {
    if (cert.margin_lower >= kappa) return Feasibility::Feasible;
    if (cert.margin_upper < kappa) return Feasibility::Infeasible;
    return Feasibility::Undecided;
  }
  if (cert.margin_lower > tol) return Feasibility::Feasible;
  if (cert.margin_upper < tol) return Feasibility::Infeasible;
  return Feasibility::Undecided;
}

inline constexpr int kTrialMaxIters = 100000;

}  // namespace detail

// Raw ensemble sample; bit-identical for a fixed (config.seed).
inline PatternMatrix sample_matrix(const TrialConfig& config) {
  config.validate();
  const int m = TrialConfig::rows_for(config.alpha, config.n);
  Eigen::MatrixXd rows(m, config.n);
  for (int i = 0; i < m; ++i)
    rows.row(i) = detail::raw_row(config.ensemble, config.n,
                                  derive_seed(config.seed, detail::kStreamMatrix, i));
  return PatternMatrix(std::move(rows));
}

// One feasibility experiment on a fresh sample.
inline Feasibility run_trial(const TrialConfig& config) {
  config.validate();
  const int m = TrialConfig::rows_for(config.alpha, config.n);
  const Eigen::MatrixXd rows = detail::constraint_matrix(config.ensemble, config.n, m, config.seed);
  return detail::decide_rows(rows, config.kappa, config.solver_tol, detail::kTrialMaxIters,
                             derive_seed(config.seed, detail::kStreamSphere), nullptr, nullptr);
}

// Coupled alpha sweep: per trial one matrix of max-m rows; each grid point
// tests a prefix, so decisions are monotone along the grid per trial and
// p_feasible is exactly nonincreasing. Undecided trials are counted, never
// folded into feasible.
inline SweepResult sweep_alpha(int n, double kappa, const EnsembleKind& ensemble,
                               const std::vector<double>& alpha_grid, int trials_per_point,
                               std::uint64_t master_seed, int workers = 0,
                               double solver_tol = 1e-6,
                               const std::atomic<bool>* cancel = nullptr) {
  if (n < 2) throw std::invalid_argument("sweep_alpha: n must be >= 2");
  if (trials_per_point < 0) throw std::invalid_argument("sweep_alpha: negative trial count");
  for (std::size_t k = 1; k < alpha_grid.size(); ++k)
    if (!(alpha_grid[k] > alpha_grid[k - 1]))
      throw std::invalid_argument("sweep_alpha: alpha_grid must be strictly increasing");

  SweepResult out;
  out.axis = SweepResult::Axis::Alpha;
  out.grid = alpha_grid;
  const int points = static_cast<int>(alpha_grid.size());
  out.p_feasible.assign(points, 0.0);
  out.n_trials.assign(points, 0);
  out.n_undecided.assign(points, 0);
  out.wilson_halfwidth.assign(points, 0.0);
  if (points == 0 || trials_per_point == 0) return out;

  std::vector<int> m_of(points);
  for (int k = 0; k < points; ++k) {
    m_of[k] = TrialConfig::rows_for(alpha_grid[k], n);
    if (m_of[k] < 1) throw std::invalid_argument("sweep_alpha: grid point with m < 1");
  }
  const int m_max = m_of[points - 1];

  constexpr int kNotRun = -1;
  std::vector<std::vector<int>> decisions(trials_per_point,
                                          std::vector<int>(points, kNotRun));

  parallel_for(
      trials_per_point, workers,
      [&](int t) {
        const std::uint64_t trial_seed = derive_seed(master_seed, detail::kStreamSweep, t);
        const Eigen::MatrixXd rows = detail::constraint_matrix(ensemble, n, m_max, trial_seed);
        Eigen::VectorXd warm;
        bool have_warm = false;
        bool dead = false;  // a certified-infeasible prefix kills all larger ones
        for (int k = 0; k < points; ++k) {
          if (dead) {
            decisions[t][k] = static_cast<int>(Feasibility::Infeasible);
            continue;
          }
          Eigen::VectorXd lambda_out;
          const Feasibility d = detail::decide_rows(
              rows.topRows(m_of[k]), kappa, solver_tol, detail::kTrialMaxIters,
              derive_seed(trial_seed, detail::kStreamSphere, k),
              have_warm ? &warm : nullptr, &lambda_out);
          decisions[t][k] = static_cast<int>(d);
          if (lambda_out.size() > 0) {
            warm = std::move(lambda_out);
            have_warm = true;
          }
          if (d == Feasibility::Infeasible) dead = true;
        }
      },
      cancel);

  for (int k = 0; k < points; ++k) {
    int feas = 0, undec = 0, ran = 0;
    for (int t = 0; t < trials_per_point; ++t) {
      const int d = decisions[t][k];
      if (d == kNotRun) continue;  // cancelled before this trial ran
      ++ran;
      if (d == static_cast<int>(Feasibility::Feasible)) ++feas;
      if (d == static_cast<int>(Feasibility::Undecided)) ++undec;
    }
    out.n_trials[k] = ran;
    out.n_undecided[k] = undec;
    out.p_feasible[k] = ran > 0 ? static_cast<double>(feas) / ran : 0.0;
    out.wilson_halfwidth[k] = wilson_halfwidth(feas, ran);
  }
  return out;
}

struct AlphaHatResult {
  double alpha_hat = 0.0;
  double ci = 0.0;  // 1.96 * stderr; 0 when trials == 1
  std::vector<int> m_star;
};

// Empirical capacity: per trial, the largest prefix length of one growing
// matrix that is certified Feasible (exponential growth then bisection;
// Undecided counts as not-Feasible). alpha_hat = mean(m*/n).
inline AlphaHatResult estimate_alpha_hat(int n, double kappa, const EnsembleKind& ensemble,
                                         int trials, std::uint64_t master_seed, int workers = 0,
                                         double solver_tol = 1e-6,
                                         const std::atomic<bool>* cancel = nullptr) {
  if (n < 2) throw std::invalid_argument("estimate_alpha_hat: n must be >= 2");
  if (trials < 1) throw std::invalid_argument("estimate_alpha_hat: trials must be >= 1");
  if (!(kappa >= 0.0))
    throw std::invalid_argument("estimate_alpha_hat: requires kappa >= 0");

  const int m_cap = 64 * n;
  std::vector<int> m_star(trials, -1);

  parallel_for(
      trials, workers,
      [&](int t) {
        const std::uint64_t trial_seed = derive_seed(master_seed, detail::kStreamAlphaHat, t);
        Eigen::MatrixXd rows(0, n);
        auto grow_to = [&](int m) {
          const int old = static_cast<int>(rows.rows());
          if (m <= old) return;
          rows.conservativeResize(m, Eigen::NoChange);
          for (int i = old; i < m; ++i)
            rows.row(i) = detail::constraint_row(
                ensemble, n, derive_seed(trial_seed, detail::kStreamMatrix, i));
        };
        auto feasible_at = [&](int m) {
          grow_to(m);
          return detail::decide_rows(rows.topRows(m), kappa, solver_tol,
                                     detail::kTrialMaxIters, 0, nullptr,
                                     nullptr) == Feasibility::Feasible;
        };

        int lo = 0;      // largest known-feasible m (0 = none tested feasible)
        int hi = n;      // candidate upper end
        while (hi < m_cap && feasible_at(hi)) {
          lo = hi;
          hi *= 2;
        }
        if (hi >= m_cap && feasible_at(m_cap)) {
          m_star[t] = m_cap;
          return;
        }
        // invariant: feasible at lo (or lo == 0), not feasible at hi
        while (hi - lo > 1) {
          const int mid = lo + (hi - lo) / 2;
          if (feasible_at(mid))
            lo = mid;
          else
            hi = mid;
        }
        m_star[t] = lo;
      },
      cancel);

  AlphaHatResult out;
  out.m_star = m_star;
  double mean = 0.0;
  int ran = 0;
  for (int v : m_star)
    if (v >= 0) {
      mean += static_cast<double>(v) / n;
      ++ran;
    }
  if (ran == 0) return out;
  mean /= ran;
  out.alpha_hat = mean;
  if (ran > 1) {
    double ss = 0.0;
    for (int v : m_star)
      if (v >= 0) {
        const double d = static_cast<double>(v) / n - mean;
        ss += d * d;
      }
    const double stderr_ = std::sqrt(ss / (ran - 1)) / std::sqrt(static_cast<double>(ran));
    out.ci = 1.959963984540054 * stderr_;
  }
  return out;
}

}  // namespace gardner
