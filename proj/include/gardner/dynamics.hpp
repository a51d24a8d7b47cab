#pragma once

// Pattern storage and sign dynamics for a network of +-1 sites.
//
// Synchronous map: s_k(t+1) = sign( sum_{j != k} s_j(t) X_jk - T_k ), with
// sign(0) := +1. A pattern set is stored by solving, per site k, the
// max-margin problem over the rows P_ik * P_i,(j != k): a certified margin
// >= kappa at every site makes every pattern a strict fixed point with slack
// kappa. Columns of X are unit-norm with a zero diagonal (self-interaction
// excluded, matching the j != k sums).

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gardner/margin.hpp"

namespace gardner {

class PatternSet {
 public:
  explicit PatternSet(Eigen::MatrixXd patterns) : p_(std::move(patterns)) {
    if (p_.rows() < 1 || p_.cols() < 2)
      throw std::invalid_argument("PatternSet: needs >= 1 pattern over >= 2 sites");
    if (!((p_.array() == 1.0) || (p_.array() == -1.0)).all())
      throw std::invalid_argument("PatternSet: entries must be exactly +-1");
  }

  const Eigen::MatrixXd& patterns() const { return p_; }
  Eigen::Index m() const { return p_.rows(); }
  Eigen::Index n() const { return p_.cols(); }

 private:
  Eigen::MatrixXd p_;
};

struct InteractionMatrix {
  Eigen::MatrixXd coupling;    // n x n, column k = incoming weights of site k
  Eigen::VectorXd thresholds;  // per-site, default zero

  InteractionMatrix(Eigen::MatrixXd x, Eigen::VectorXd t)
      : coupling(std::move(x)), thresholds(std::move(t)) {
    if (coupling.rows() != coupling.cols())
      throw std::invalid_argument("InteractionMatrix: coupling must be square");
    if (thresholds.size() != coupling.cols())
      throw std::invalid_argument("InteractionMatrix: thresholds size mismatch");
    for (Eigen::Index k = 0; k < coupling.cols(); ++k) {
      if (std::fabs(coupling.col(k).norm() - 1.0) > 1e-9)
        throw std::invalid_argument("InteractionMatrix: column " + std::to_string(k) +
                                    " is not unit norm");
    }
  }

  explicit InteractionMatrix(Eigen::MatrixXd x)
      : InteractionMatrix(std::move(x), Eigen::VectorXd()) {
    thresholds = Eigen::VectorXd::Zero(coupling.cols());
  }
};

// Storage failed at one site; carries the blocking certificate.
class StorageFailed : public std::runtime_error {
 public:
  StorageFailed(int site, MarginCertificate cert)
      : std::runtime_error("storage failed at site " + std::to_string(site) +
                           " (certified margin upper bound " +
                           std::to_string(cert.margin_upper) + ")"),
        site_(site),
        certificate_(std::move(cert)) {}

  int site() const { return site_; }
  const MarginCertificate& certificate() const { return certificate_; }

 private:
  int site_;
  MarginCertificate certificate_;
};

struct StoreOutcome {
  InteractionMatrix interactions;
  Eigen::VectorXd per_site_margin;  // certified margin of each site's column
};

namespace detail {

// Constraint rows of site k: r_i = P_ik * P_i with the site column removed.
inline Eigen::MatrixXd site_rows(const Eigen::MatrixXd& p, Eigen::Index k) {
  const Eigen::Index m = p.rows(), n = p.cols();
  Eigen::MatrixXd rows(m, n - 1);
  rows.leftCols(k) = p.leftCols(k);
  rows.rightCols(n - 1 - k) = p.rightCols(n - 1 - k);
  rows.array().colwise() *= p.col(k).array();
  return rows;
}

}  // namespace detail

// Stores the patterns site by site. Sites are solved in index order and the
// first site whose margin cannot be certified at kappa aborts with its
// certificate. Nonzero thresholds enter as per-row constraint offsets
// P_ik * T_k.
inline StoreOutcome store_patterns(const PatternSet& patterns, double kappa, double tol = 1e-9,
                                   const Eigen::VectorXd* thresholds = nullptr) {
  if (!(kappa >= 0.0)) throw std::invalid_argument("store_patterns: kappa must be >= 0");
  const Eigen::MatrixXd& p = patterns.patterns();
  const Eigen::Index n = p.cols();
  if (thresholds && thresholds->size() != n)
    throw std::invalid_argument("store_patterns: thresholds size mismatch");

  Eigen::MatrixXd coupling = Eigen::MatrixXd::Zero(n, n);
  Eigen::VectorXd margins(n);

  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::MatrixXd rows = detail::site_rows(p, k);
    SolveOptions opt;
    opt.tol = tol;
    opt.stop_if_infeasible_at = kappa;
    Eigen::VectorXd offsets;
    if (thresholds && (*thresholds)(k) != 0.0) {
      offsets = p.col(k) * (*thresholds)(k);
      opt.offsets = &offsets;
    }
    const MarginCertificate cert = max_margin_solve(rows, opt);
    // Only a certified success counts; an unresolved gap straddling kappa is
    // surfaced as failure with the certificate attached.
    if (cert.margin_lower < kappa) throw StorageFailed(static_cast<int>(k), cert);

    coupling.col(k).head(k) = cert.x.head(k);
    coupling.col(k).tail(n - 1 - k) = cert.x.tail(n - 1 - k);
    margins(k) = cert.margin_lower;
  }

  Eigen::VectorXd t = thresholds ? *thresholds : Eigen::VectorXd::Zero(n);
  return StoreOutcome{InteractionMatrix(std::move(coupling), std::move(t)), std::move(margins)};
}

struct FixedPointReport {
  Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> satisfied;  // (pattern, site)
  int violations = 0;
  bool all_satisfied() const { return violations == 0; }
};

// Checks the strict threshold condition P_ik (sum_{j != k} P_ij X_jk - T_k)
// > kappa for every pattern/site pair, by direct recomputation.
inline FixedPointReport verify_fixed_points(const PatternSet& patterns,
                                            const InteractionMatrix& x, double kappa) {
  const Eigen::MatrixXd& p = patterns.patterns();
  if (p.cols() != x.coupling.cols())
    throw std::invalid_argument("verify_fixed_points: shape mismatch");
  const Eigen::Index m = p.rows(), n = p.cols();

  FixedPointReport report;
  report.satisfied.resize(m, n);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index k = 0; k < n; ++k) {
      const double field =
          p.row(i).dot(x.coupling.col(k)) - p(i, k) * x.coupling(k, k) - x.thresholds(k);
      const bool ok = p(i, k) * field > kappa;
      report.satisfied(i, k) = ok;
      if (!ok) ++report.violations;
    }
  }
  return report;
}

// One synchronous update of every site; sign(0) := +1.
inline Eigen::VectorXd step_dynamics(const Eigen::VectorXd& state, const InteractionMatrix& x) {
  const Eigen::Index n = x.coupling.cols();
  if (state.size() != n) throw std::invalid_argument("step_dynamics: state size mismatch");
  if (!((state.array() == 1.0) || (state.array() == -1.0)).all())
    throw std::invalid_argument("step_dynamics: state entries must be exactly +-1");

  Eigen::VectorXd next(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const double field =
        state.dot(x.coupling.col(k)) - state(k) * x.coupling(k, k) - x.thresholds(k);
    next(k) = (field >= 0.0) ? 1.0 : -1.0;
  }
  return next;
}

}  // namespace gardner
