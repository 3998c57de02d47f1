#include "twophase/raking.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "twophase/errors.hpp"

namespace twophase {

WeightSet design_weight_set(std::vector<std::size_t> rows, Eigen::VectorXd base) {
  WeightSet w;
  const auto n = base.size();
  w.rows = std::move(rows);
  w.base = std::move(base);
  w.stabiliser = Eigen::VectorXd::Ones(n);
  w.raking = Eigen::VectorXd::Ones(n);
  return w;
}

const char* to_string(Distance distance) {
  return distance == Distance::linear ? "greg" : "raking";
}

Distance parse_distance(const std::string& text) {
  if (text == "greg" || text == "linear") return Distance::linear;
  if (text == "raking" || text == "exponential") return Distance::exponential;
  throw DomainError("unknown calibration distance '" + text + "'");
}

CalibrationProblem make_calibration_problem(Eigen::MatrixXd aux,
                                            std::vector<std::size_t> included,
                                            Eigen::VectorXd base_weights, Eigen::VectorXd q,
                                            Distance distance) {
  CalibrationProblem p;
  if (q.size() == 0) q = Eigen::VectorXd::Ones(aux.rows());
  if (q.size() != aux.rows()) throw DomainError("stabilisers must cover every phase-1 row");
  p.target = aux.transpose() * q;
  p.aux = std::move(aux);
  p.included = std::move(included);
  p.base_weights = std::move(base_weights);
  p.stabilisers = std::move(q);
  p.distance = distance;
  return p;
}

namespace {

std::string aux_label(const CalibrationProblem& p, Eigen::Index j) {
  if (static_cast<std::size_t>(j) < p.aux_names.size()) {
    return p.aux_names[static_cast<std::size_t>(j)];
  }
  return "G" + std::to_string(j);
}

}  // namespace

CalibrationResult solve_calibration(const CalibrationProblem& problem,
                                    const CalibrationOptions& options) {
  const Eigen::Index k = problem.aux.cols();
  const Eigen::Index n = static_cast<Eigen::Index>(problem.included.size());
  const Eigen::Index big_n = problem.aux.rows();
  if (problem.base_weights.size() != n) {
    throw DomainError("base weights must align with the included rows");
  }
  if (problem.stabilisers.size() != big_n) {
    throw DomainError("stabilisers must cover every phase-1 row");
  }
  if (problem.target.size() != k) throw DomainError("target has the wrong dimension");
  if (!problem.aux.allFinite() || !problem.target.allFinite()) {
    throw DomainError("auxiliaries and target must be finite");
  }
  if (n < k) {
    throw CollinearityError("calibration needs at least as many included rows (" +
                            std::to_string(n) + ") as auxiliaries (" + std::to_string(k) + ")");
  }

  Eigen::MatrixXd g_inc(n, k);
  Eigen::VectorXd b(n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const std::size_t i = problem.included[static_cast<std::size_t>(r)];
    g_inc.row(r) = problem.aux.row(static_cast<Eigen::Index>(i));
    b(r) = problem.base_weights(r) * problem.stabilisers(static_cast<Eigen::Index>(i));
    if (!(b(r) > 0.0) || !std::isfinite(b(r))) {
      throw DomainError("base weights times stabilisers must be positive and finite");
    }
  }

  // Reparametrise G -> G A: weighted centring (only valid when a constant
  // column is in the span) and unit scaling. alpha = A alpha_tilde.
  Eigen::Index constant_col = -1;
  for (Eigen::Index j = 0; j < k && constant_col < 0; ++j) {
    const double v = problem.aux(0, j);
    if (v != 0.0 && (problem.aux.col(j).array() == v).all()) constant_col = j;
  }
  const double bsum = b.sum();
  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(k, k);
  for (Eigen::Index j = 0; j < k; ++j) {
    if (j == constant_col) continue;
    const double mean = b.dot(g_inc.col(j)) / bsum;
    double centre = 0.0;
    if (constant_col >= 0) {
      centre = mean;
      a(constant_col, j) = -mean / problem.aux(0, constant_col);
    }
    const double var = (b.array() * (g_inc.col(j).array() - centre).square()).sum() / bsum;
    const double scale = var > 0.0 ? std::sqrt(var) : 1.0;
    a.col(j) /= scale;
  }
  const Eigen::MatrixXd gt = g_inc * a;
  const Eigen::VectorXd target_t = a.transpose() * problem.target;

  {
    Eigen::MatrixXd ws = gt.array().colwise() * b.array().sqrt();
    Eigen::VectorXd norms = ws.colwise().norm().transpose();
    for (Eigen::Index j = 0; j < k; ++j) {
      if (norms(j) == 0.0) {
        throw CollinearityError("auxiliary '" + aux_label(problem, j) +
                                "' is identically zero on the included rows");
      }
      ws.col(j) /= norms(j);
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(ws);
    qr.setThreshold(1e-10);
    if (qr.rank() < k) {
      std::ostringstream msg;
      msg << "calibration system is singular; dependent auxiliaries:";
      for (Eigen::Index j = qr.rank(); j < k; ++j) {
        msg << " '" << aux_label(problem, qr.colsPermutation().indices()(j)) << "'";
      }
      throw CollinearityError(msg.str());
    }
  }

  const double target_scale = std::max(
      {problem.target.lpNorm<Eigen::Infinity>(),
       (g_inc.cwiseAbs().transpose() * b).lpNorm<Eigen::Infinity>(), 1e-300});
  auto original_residual = [&](const Eigen::VectorXd& g) {
    const Eigen::VectorXd lhs = g_inc.transpose() * (b.array() * g.array()).matrix();
    return (lhs - problem.target).lpNorm<Eigen::Infinity>() / target_scale;
  };

  CalibrationResult result;
  Eigen::VectorXd alpha_t = Eigen::VectorXd::Zero(k);
  Eigen::VectorXd g;

  if (problem.distance == Distance::linear) {
    const Eigen::MatrixXd m = gt.transpose() * (gt.array().colwise() * b.array()).matrix();
    const Eigen::VectorXd gap = target_t - gt.transpose() * b;
    Eigen::LDLT<Eigen::MatrixXd> ldlt(m);
    if (ldlt.info() != Eigen::Success || !ldlt.isPositive()) {
      throw CollinearityError("linear calibration system is singular");
    }
    alpha_t = ldlt.solve(gap);
    g = (1.0 + (gt * alpha_t).array()).matrix();
    // One refinement step against round-off.
    const Eigen::VectorXd r = target_t - gt.transpose() * (b.array() * g.array()).matrix();
    alpha_t += ldlt.solve(r);
    g = (1.0 + (gt * alpha_t).array()).matrix();
    result.iterations = 1;
    result.negative_weights = (g.array() < 0.0).any();
  } else {
    // Newton on the convex dual sum_i b_i exp(G_i'a) - a'T with step halving.
    auto dual = [&](const Eigen::VectorXd& at, Eigen::VectorXd& gg) {
      gg = (gt * at).array().exp().matrix();
      if (!gg.allFinite()) return std::numeric_limits<double>::infinity();
      return b.dot(gg) - at.dot(target_t);
    };
    const double tscale = std::max(target_t.lpNorm<Eigen::Infinity>(),
                                   (gt.cwiseAbs().transpose() * b).lpNorm<Eigen::Infinity>());
    double phi = dual(alpha_t, g);
    double grad_norm = std::numeric_limits<double>::infinity();
    bool done = false;
    int it = 0;
    for (; it < options.max_iterations; ++it) {
      const Eigen::VectorXd bg = (b.array() * g.array()).matrix();
      const Eigen::VectorXd grad = gt.transpose() * bg - target_t;
      grad_norm = grad.lpNorm<Eigen::Infinity>() / tscale;
      if (grad_norm < options.tolerance) {
        done = true;
        break;
      }
      const Eigen::MatrixXd hess = gt.transpose() * (gt.array().colwise() * bg.array()).matrix();
      Eigen::LDLT<Eigen::MatrixXd> ldlt(hess);
      if (ldlt.info() != Eigen::Success || !ldlt.isPositive()) {
        if (it == 0) throw CollinearityError("raking Hessian is singular");
        throw ConvergenceError("raking weights degenerated; the calibration totals look infeasible "
                               "for exponential distance (relative residual " +
                                   std::to_string(grad_norm) + ")",
                               grad_norm);
      }
      const Eigen::VectorXd step = ldlt.solve(grad);
      double t = 1.0;
      Eigen::VectorXd trial_g;
      Eigen::VectorXd trial = alpha_t - step;
      double phi_trial = dual(trial, trial_g);
      int halvings = 0;
      while (!(phi_trial <= phi + 1e-14 * std::abs(phi)) && halvings < 60) {
        t *= 0.5;
        trial = alpha_t - t * step;
        phi_trial = dual(trial, trial_g);
        ++halvings;
      }
      if (halvings == 60) break;
      alpha_t = trial;
      g = trial_g;
      phi = phi_trial;
    }
    result.iterations = it;
    if (!done) {
      throw ConvergenceError("raking Newton iteration did not converge; last relative residual " +
                                 std::to_string(grad_norm),
                             grad_norm);
    }
  }

  result.g_factors = g;
  result.multipliers = a * alpha_t;
  result.constraint_residual = original_residual(g);
  return result;
}

WeightSet stabilised_rake(const TwoPhaseDesign& design, const Eigen::MatrixXd& aux,
                          const Eigen::VectorXd& q, Distance distance,
                          const CalibrationOptions& options) {
  const auto big_n = static_cast<Eigen::Index>(design.n_rows());
  if (aux.rows() != big_n) throw DomainError("auxiliaries must be defined on every phase-1 row");
  if (q.size() != big_n) throw DomainError("stabiliser must be defined on every phase-1 row");
  for (Eigen::Index i = 0; i < big_n; ++i) {
    if (!(q(i) > 0.0) || !std::isfinite(q(i))) {
      throw DomainError("stabiliser must be positive and finite (row " + std::to_string(i) + ")");
    }
  }
  const auto& rows = design.included_rows();
  CalibrationProblem problem =
      make_calibration_problem(aux, rows, design.included_weights(), q, distance);
  CalibrationResult res = solve_calibration(problem, options);

  WeightSet w = design_weight_set(rows, design.included_weights());
  w.calibration_aux.resize(static_cast<Eigen::Index>(rows.size()), aux.cols());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto i = static_cast<Eigen::Index>(rows[r]);
    w.stabiliser(static_cast<Eigen::Index>(r)) = q(i);
    w.calibration_aux.row(static_cast<Eigen::Index>(r)) = aux.row(i);
  }
  w.raking = res.g_factors;
  w.calibration_residual = res.constraint_residual;
  w.calibration_iterations = res.iterations;
  w.negative_raking = res.negative_weights;
  return w;
}

}  // namespace twophase
