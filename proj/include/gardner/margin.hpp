#pragma once

// Certified max-margin solver for the perceptron feasibility question
//
//   exists x, ||x||_2 <= 1, with  h_i' x - c_i >= kappa  for every row i?
//
// The ball optimum gamma* = max_{||x||<=1} min_i (h_i' x - c_i) is attacked
// through its dual: min over simplex weights lambda of
// ||H' lambda||_2 - c' lambda. For any pair (x, lambda) weak duality gives
//
//   min_i (h_i' x - c_i)  <=  ||H' lambda||_2 - c' lambda,
//
// so every iterate yields a two-sided certificate. The dual is minimized by
// Frank-Wolfe with away steps over the simplex (the minimum-norm-point
// problem when c = 0; an upgrade path to Wolfe's exact min-norm-point
// algorithm exists but the certificate gap, not iterate motion, is the
// stopping rule here, and that is what the Monte Carlo layer consumes).
// When ||H' lambda|| falls below tol with c = 0 the origin lies in the hull
// of the rows up to tol: the ball optimum is pinned in [0, tol] even though
// no unit direction certifies it, and margin_upper stays a valid bound.
//
// For kappa < 0 on the unit sphere the problem is nonconvex; sphere_heuristic
// runs projected subgradient ascent from random restarts and only ever claims
// feasibility, backed by an exact entrywise check of the returned witness.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gardner/rng.hpp"

namespace gardner {

class PatternMatrix {
 public:
  explicit PatternMatrix(Eigen::MatrixXd rows) : rows_(std::move(rows)) {
    if (rows_.rows() < 1 || rows_.cols() < 1)
      throw std::invalid_argument("PatternMatrix: needs at least one row and one column");
    if (!rows_.allFinite())
      throw std::invalid_argument("PatternMatrix: entries must be finite");
  }

  const Eigen::MatrixXd& rows() const { return rows_; }
  Eigen::Index m() const { return rows_.rows(); }
  Eigen::Index n() const { return rows_.cols(); }

 private:
  Eigen::MatrixXd rows_;
};

struct MarginCertificate {
  Eigen::VectorXd x;       // unit primal direction
  Eigen::VectorXd lambda;  // simplex weights
  double margin_lower = 0.0;  // min_i (h_i' x - c_i)
  double margin_upper = 0.0;  // ||H' lambda|| - c' lambda
  double gap = 0.0;           // margin_upper - margin_lower
  bool converged = false;
  int iterations = 0;

  // Width of the certified bracket on the ball optimum; x = 0 supplies the
  // floor max(margin_lower, -max_i c_i), which is 0 in the offset-free case.
  double ball_floor = 0.0;
  double ball_gap() const { return margin_upper - std::max(margin_lower, ball_floor); }
};

struct SolveOptions {
  double tol = 1e-9;
  int max_iters = 200000;
  // Early decision thresholds: stop as soon as margin_lower >= feasible_at, or
  // margin_upper < infeasible_at. Certificates stay valid either way.
  std::optional<double> stop_if_feasible_at;
  std::optional<double> stop_if_infeasible_at;
  const Eigen::VectorXd* warm_lambda = nullptr;  // simplex point, size m
  const Eigen::VectorXd* offsets = nullptr;      // per-row offsets c, size m
};

namespace detail {

// Exact minimizer of ||w + t*u|| - (l0 + t*l1) on [0, tmax] (used only on the
// offset path; the offset-free path has the closed quadratic form).
inline double norm_line_search(const Eigen::VectorXd& w, const Eigen::VectorXd& u, double l1,
                               double tmax) {
  const double A = u.squaredNorm();
  if (A <= 0.0) return 0.0;
  const double B = w.dot(u);
  const double C = w.squaredNorm();
  auto value = [&](double t) { return std::sqrt(std::max(C + 2 * B * t + A * t * t, 0.0)) - l1 * t; };
  constexpr double kInvPhi = 0.61803398874989484820;
  double a = 0.0, b = tmax;
  double x1 = b - kInvPhi * (b - a), x2 = a + kInvPhi * (b - a);
  double f1 = value(x1), f2 = value(x2);
  for (int it = 0; it < 120 && (b - a) > 1e-14 * (1.0 + tmax); ++it) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = value(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = value(x2);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace detail

inline MarginCertificate max_margin_solve(Eigen::Ref<const Eigen::MatrixXd> H,
                                          const SolveOptions& opt = {}) {
  const Eigen::Index m = H.rows(), n = H.cols();
  if (m < 1 || n < 1) throw std::invalid_argument("max_margin_solve: empty matrix");
  if (!(opt.tol > 0.0)) throw std::invalid_argument("max_margin_solve: tol must be > 0");

  const bool has_offsets = opt.offsets != nullptr && opt.offsets->size() == m &&
                           opt.offsets->squaredNorm() > 0.0;
  Eigen::VectorXd c = has_offsets ? *opt.offsets : Eigen::VectorXd();
  const double ball_floor = has_offsets ? -c.maxCoeff() : 0.0;

  Eigen::VectorXd lambda;
  if (opt.warm_lambda != nullptr && opt.warm_lambda->size() <= m &&
      opt.warm_lambda->size() >= 1 && opt.warm_lambda->minCoeff() >= 0.0 &&
      opt.warm_lambda->sum() > 0.5) {
    lambda = Eigen::VectorXd::Zero(m);
    lambda.head(opt.warm_lambda->size()) = *opt.warm_lambda;
    lambda /= lambda.sum();
  } else {
    // Start from the row with the best single-vertex dual value.
    Eigen::Index i0 = 0;
    double best = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < m; ++i) {
      const double v = H.row(i).norm() - (has_offsets ? c(i) : 0.0);
      if (v < best) {
        best = v;
        i0 = i;
      }
    }
    lambda = Eigen::VectorXd::Zero(m);
    lambda(i0) = 1.0;
  }

  Eigen::VectorXd w = H.transpose() * lambda;
  Eigen::VectorXd g(m);
  Eigen::VectorXd fallback_x = Eigen::VectorXd::Unit(n, 0);

  MarginCertificate cert;
  cert.ball_floor = ball_floor;

  // Certificate from the current (lambda, w); optionally refreshes w from
  // lambda first to shed incremental-update drift.
  auto make_cert = [&](bool refresh, int iters) {
    if (refresh) w.noalias() = H.transpose() * lambda;
    const double wn = w.norm();
    Eigen::VectorXd x = (wn > 1e-300) ? Eigen::VectorXd(w / wn) : fallback_x;
    Eigen::VectorXd margins = H * x;
    if (has_offsets) margins -= c;
    const double ml = margins.minCoeff();
    const double mu = has_offsets ? (wn - c.dot(lambda)) : wn;
    cert.x = std::move(x);
    cert.lambda = lambda;
    cert.margin_lower = ml;
    cert.margin_upper = mu;
    cert.gap = mu - ml;
    cert.iterations = iters;
  };

  auto decided = [&]() {
    if (cert.ball_gap() <= opt.tol) return true;
    if (opt.stop_if_feasible_at && cert.margin_lower >= *opt.stop_if_feasible_at) return true;
    if (opt.stop_if_infeasible_at && cert.margin_upper < *opt.stop_if_infeasible_at) return true;
    return false;
  };

  int it = 0;
  for (; it < opt.max_iters; ++it) {
    const double wn2 = w.squaredNorm();
    const double wn = std::sqrt(wn2);
    if (wn > 1e-300) fallback_x = w / wn;

    g.noalias() = H * w;

    // Dual gradient scores: g_i for the min-norm objective, or the normalized
    // form minus offsets when c != 0.
    Eigen::Index s = 0, a = -1;
    double score_s = std::numeric_limits<double>::infinity();
    double score_a = -std::numeric_limits<double>::infinity();
    double lambda_score = 0.0;
    for (Eigen::Index i = 0; i < m; ++i) {
      double sc = has_offsets ? ((wn > 1e-300 ? g(i) / wn : 0.0) - c(i)) : g(i);
      if (sc < score_s) {
        score_s = sc;
        s = i;
      }
      if (lambda(i) > 0.0) {
        lambda_score += lambda(i) * sc;
        if (sc > score_a) {
          score_a = sc;
          a = i;
        }
      }
    }

    // Cheap convergence probes on the incrementally-maintained state; the
    // authoritative check below recomputes everything fresh.
    const double ml_est = (wn > 1e-300)
                              ? (has_offsets ? score_s : score_s / wn)
                              : -std::numeric_limits<double>::infinity();
    const double mu_est = has_offsets ? (wn - c.dot(lambda)) : wn;
    const bool maybe_gap = (mu_est - std::max(ml_est, ball_floor)) <= opt.tol;
    const bool maybe_feas = opt.stop_if_feasible_at && ml_est >= *opt.stop_if_feasible_at;
    const bool maybe_infeas = opt.stop_if_infeasible_at && mu_est < *opt.stop_if_infeasible_at;
    if (maybe_gap || maybe_feas || maybe_infeas || (it % 128 == 127)) {
      make_cert(true, it);
      if (decided()) {
        cert.converged = true;
        return cert;
      }
      continue;  // state refreshed; vertex scores recomputed next pass
    }

    const double gap_fw = lambda_score - score_s;
    const double gap_away = (a >= 0) ? (score_a - lambda_score) : -1.0;

    bool away = gap_away > gap_fw && a >= 0 && lambda(a) < 1.0;
    Eigen::VectorXd u;      // movement of w
    double tmax, t = 0.0;
    Eigen::Index pivot;
    if (away) {
      pivot = a;
      u = w - H.row(a).transpose();
      tmax = lambda(a) / (1.0 - lambda(a));
    } else {
      pivot = s;
      u = H.row(s).transpose() - w;
      tmax = 1.0;
    }

    const double uu = u.squaredNorm();
    if (uu <= 0.0) {
      make_cert(true, it);
      cert.converged = decided();
      return cert;
    }
    if (!has_offsets) {
      t = std::clamp(-w.dot(u) / uu, 0.0, tmax);
    } else {
      const double l1 = away ? (c.dot(lambda) - c(pivot)) : (c(pivot) - c.dot(lambda));
      t = detail::norm_line_search(w, u, l1, tmax);
    }
    if (t <= 0.0) {
      // No progress along the chosen direction; settle with a fresh certificate.
      make_cert(true, it);
      cert.converged = decided();
      return cert;
    }

    if (away) {
      lambda *= (1.0 + t);
      lambda(pivot) -= t;
      if (lambda(pivot) < 1e-15) lambda(pivot) = 0.0;
    } else {
      lambda *= (1.0 - t);
      lambda(pivot) += t;
    }
    w += t * u;
  }

  make_cert(true, it);
  cert.converged = decided();
  return cert;
}

inline MarginCertificate max_margin(const PatternMatrix& H, double tol = 1e-9,
                                    int max_iters = 200000) {
  SolveOptions opt;
  opt.tol = tol;
  opt.max_iters = max_iters;
  return max_margin_solve(H.rows(), opt);
}

enum class Feasibility { Feasible, Infeasible, Undecided };

// Certified feasibility of Hx >= kappa, ||x||_2 = 1, for kappa >= 0. Iteration
// limits surface as Undecided.
inline Feasibility is_feasible(const PatternMatrix& H, double kappa, double tol,
                               int max_iters = 200000) {
  if (!(kappa >= 0.0))
    throw std::invalid_argument("is_feasible: kappa must be >= 0 (use sphere_heuristic)");
  SolveOptions opt;
  opt.tol = tol;
  opt.max_iters = max_iters;
  opt.stop_if_feasible_at = kappa;
  opt.stop_if_infeasible_at = kappa;
  const MarginCertificate cert = max_margin_solve(H.rows(), opt);
  if (cert.margin_lower >= kappa) return Feasibility::Feasible;
  if (cert.margin_upper < kappa) return Feasibility::Infeasible;
  return Feasibility::Undecided;
}

struct SphereSearchResult {
  bool witness_found = false;
  Eigen::VectorXd x;
  double margin = 0.0;
};

// Projected subgradient ascent of min_i h_i' x over the unit sphere from
// random restarts. Only claims feasibility: the returned witness is rechecked
// entrywise in plain double arithmetic with no slack. Never decides
// infeasibility (the sphere problem is nonconvex for kappa < 0).
inline SphereSearchResult sphere_heuristic(const PatternMatrix& H, double kappa, int restarts,
                                           std::uint64_t seed, int steps_per_restart = 600) {
  if (restarts < 1) throw std::invalid_argument("sphere_heuristic: restarts must be >= 1");
  const Eigen::MatrixXd& rows = H.rows();
  const Eigen::Index m = rows.rows(), n = rows.cols();

  double max_row_norm = 0.0;
  for (Eigen::Index i = 0; i < m; ++i) max_row_norm = std::max(max_row_norm, rows.row(i).norm());
  const double step_scale = (max_row_norm > 0.0) ? 1.0 / max_row_norm : 1.0;

  auto exact_witness = [&](const Eigen::VectorXd& x) {
    return ((rows * x).array() >= kappa).all() && std::fabs(x.norm() - 1.0) <= 1e-9;
  };

  for (int r = 0; r < restarts; ++r) {
    SplitMix64 rng(derive_seed(seed, 0x5E, static_cast<std::uint64_t>(r)));
    Eigen::VectorXd x(n);
    do {
      for (Eigen::Index j = 0; j < n; ++j) x(j) = rng.normal();
    } while (x.norm() == 0.0);
    x /= x.norm();

    for (int tstep = 1; tstep <= steps_per_restart; ++tstep) {
      Eigen::VectorXd margins = rows * x;
      Eigen::Index worst;
      const double val = margins.minCoeff(&worst);
      if (val >= kappa && exact_witness(x)) return {true, x, val};
      x += (step_scale / std::sqrt(static_cast<double>(tstep))) * rows.row(worst).transpose();
      const double nrm = x.norm();
      if (nrm == 0.0) break;
      x /= nrm;
    }
    const double final_margin = (rows * x).minCoeff();
    if (final_margin >= kappa && exact_witness(x)) return {true, x, final_margin};
  }
  return {};
}

}  // namespace gardner
