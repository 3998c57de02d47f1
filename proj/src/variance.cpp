#include <cmath>

#include "twophase/errors.hpp"
#include "twophase/estimators.hpp"

namespace twophase {

Eigen::MatrixXd calibration_residuals(const GlmFit& fit, const WeightSet& weights) {
  const Eigen::MatrixXd& u = fit.score_matrix;
  if (!weights.raked()) return u;
  const Eigen::MatrixXd& g = weights.calibration_aux;
  if (g.rows() != u.rows()) {
    throw InconsistentDesignError("calibration auxiliaries and scores have different row counts");
  }
  // Weighted least squares of U on G with weights d g q^2.
  const Eigen::ArrayXd q = weights.stabiliser.array();
  const Eigen::VectorXd sw =
      (weights.base.array() * weights.raking.array().cwiseMax(0.0) * q * q).sqrt().matrix();
  const Eigen::MatrixXd gw = sw.asDiagonal() * g;
  const Eigen::MatrixXd uw = sw.asDiagonal() * u;
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(gw);
  cod.setThreshold(1e-12);
  const Eigen::MatrixXd b = cod.solve(uw);
  return u - g * b;
}

Eigen::MatrixXd two_phase_variance(const GlmFit& fit, const TwoPhaseDesign& design,
                                   const WeightSet& weights) {
  const auto n = static_cast<Eigen::Index>(weights.rows.size());
  if (fit.rows != weights.rows || fit.score_matrix.rows() != n) {
    throw InconsistentDesignError("fit and weight set refer to different rows");
  }
  const Eigen::Index p = fit.score_matrix.cols();
  const Eigen::MatrixXd& u = fit.score_matrix;
  const Eigen::MatrixXd r = calibration_residuals(fit, weights);

  // Phase-1 term: sum q^2 / pi U U'.
  Eigen::VectorXd w1(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const double qk = weights.stabiliser(k);
    w1(k) = qk * qk * weights.base(k);
  }
  Eigen::MatrixXd meat = u.transpose() * w1.asDiagonal() * u;

  // Phase-2 term, stratum by stratum: a_k = d g q r_k,
  //   (1 - pi_h) sum a a' + c_h sum_{k != l} a_k a_l',  c_h = 1 - pi_h^2 / pi_hh.
  const auto& strata = design.strata();
  const std::size_t n_strata = strata.size();
  std::vector<Eigen::MatrixXd> aa(n_strata, Eigen::MatrixXd::Zero(p, p));
  std::vector<Eigen::VectorXd> sums(n_strata, Eigen::VectorXd::Zero(p));
  for (Eigen::Index k = 0; k < n; ++k) {
    const std::size_t h = design.stratum_index(weights.rows[static_cast<std::size_t>(k)]);
    const Eigen::VectorXd a =
        (weights.base(k) * weights.raking(k) * weights.stabiliser(k)) * r.row(k).transpose();
    aa[h].noalias() += a * a.transpose();
    sums[h] += a;
  }
  for (std::size_t h = 0; h < n_strata; ++h) {
    const auto big = static_cast<double>(strata[h].population);
    const auto small = static_cast<double>(strata[h].sampled);
    if (strata[h].sampled == 0) continue;
    const double diag = 1.0 - small / big;
    double off = 0.0;
    if (strata[h].sampled >= 2) off = 1.0 - small * (big - 1.0) / (big * (small - 1.0));
    meat += (diag - off) * aa[h] + off * (sums[h] * sums[h].transpose());
  }

  Eigen::FullPivLU<Eigen::MatrixXd> lu(fit.jacobian);
  if (!lu.isInvertible()) throw SingularityError("Jacobian is singular in variance computation");
  const Eigen::MatrixXd jinv = lu.inverse();
  Eigen::MatrixXd v = jinv * meat * jinv.transpose();
  return 0.5 * (v + v.transpose());
}

}  // namespace twophase
