#include "twophase/stabiliser.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <vector>

#include "twophase/errors.hpp"

namespace twophase {

namespace {

// Smallest value whose cumulative weight share reaches p.
double weighted_quantile(const Eigen::VectorXd& v, const Eigen::VectorXd& w, double p) {
  std::vector<Eigen::Index> order(static_cast<std::size_t>(v.size()));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) { return v(a) < v(b); });
  const double target = p * w.sum();
  double acc = 0.0;
  for (Eigen::Index i : order) {
    acc += w(i);
    if (acc >= target) return v(i);
  }
  return v(order.back());
}

}  // namespace

Eigen::VectorXd StabiliserFn::on_included(const TwoPhaseDesign& design) const {
  const auto& inc = design.included_rows();
  Eigen::VectorXd out(static_cast<Eigen::Index>(inc.size()));
  if (all_rows) {
    for (std::size_t k = 0; k < inc.size(); ++k) {
      out(static_cast<Eigen::Index>(k)) = values(static_cast<Eigen::Index>(inc[k]));
    }
    return out;
  }
  if (rows != inc) throw DomainError("stabiliser was evaluated on a different row set");
  return values;
}

Eigen::VectorXd case_control_q(const Eigen::VectorXd& p_hat, std::size_t n_total,
                               std::size_t n_cases) {
  if (n_cases == 0 || n_cases >= n_total) {
    throw DegenerateError("case-control stabiliser needs 0 < n_cases < N");
  }
  const double ratio = static_cast<double>(n_total - n_cases) / static_cast<double>(n_cases);
  Eigen::VectorXd q(p_hat.size());
  for (Eigen::Index i = 0; i < p_hat.size(); ++i) {
    const double p = p_hat(i);
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("fitted probabilities must lie in [0, 1]");
    q(i) = 1.0 / ((1.0 - p) + ratio * p);
  }
  return q;
}

StabiliserFn estimate_q_smoothed(const GlmFit& fit, const PopulationFrame& frame,
                                 const TwoPhaseDesign& design,
                                 const std::vector<std::string>& conditioning,
                                 const SmootherOptions& options, QVariance variance) {
  const auto& inc = design.included_rows();
  if (fit.rows != inc) {
    throw DomainError("stabiliser estimation needs a fit on the design's included rows");
  }
  const auto m = static_cast<Eigen::Index>(inc.size());
  const Eigen::VectorXd d = design.included_weights();
  const Eigen::VectorXd e2 = fit.residual.array().square().matrix();
  const double y_scale = std::max(1.0, fit.response.cwiseAbs().maxCoeff());
  if (fit.residual.cwiseAbs().maxCoeff() <= 1e-12 * y_scale) {
    throw DegenerateError("all residuals are zero; there is nothing to stabilise");
  }

  StabiliserFn fn;
  fn.kind = StabiliserKind::smoothed_ratio;
  fn.inputs = conditioning;
  fn.all_rows = std::all_of(conditioning.begin(), conditioning.end(),
                            [&](const std::string& c) { return frame.is_phase1(c); });
  fn.rows = fn.all_rows ? all_rows(frame.n_rows()) : inc;
  const auto n_eval = static_cast<Eigen::Index>(fn.rows.size());

  const bool model_variance =
      variance == QVariance::model && fit.family == Family::gaussian_identity;
  Eigen::MatrixXd responses(m, model_variance ? 3 : 2);
  responses.col(0) = e2;
  responses.col(1) = (d.array() * e2.array()).matrix();
  fn.clip_floor = 1e-6 * d.dot(responses.col(1)) / d.sum();
  if (model_variance) {
    const double tiny = 1e-12 * d.dot(e2) / d.sum();
    responses.col(2) = e2.array().max(tiny).log().matrix();
  }

  Eigen::MatrixXd smooth(n_eval, responses.cols());
  Eigen::VectorXd log_var_at_sample;
  if (conditioning.empty()) {
    const Eigen::RowVectorXd mean = (d.transpose() * responses) / d.sum();
    smooth = mean.replicate(n_eval, 1);
    if (model_variance) log_var_at_sample = Eigen::VectorXd::Constant(m, mean(2));
  } else {
    const auto dim = static_cast<Eigen::Index>(conditioning.size());
    Eigen::MatrixXd points(m, dim);
    Eigen::MatrixXd eval(n_eval, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
      const Column& col = frame.column(conditioning[static_cast<std::size_t>(j)]);
      points.col(j) = col.gather(inc);
      const double lo = points.col(j).minCoeff();
      const double hi = points.col(j).maxCoeff();
      if (lo == hi) {
        throw DegenerateError("conditioning column '" + col.name() +
                              "' has zero variance on the phase-2 rows");
      }
      eval.col(j) = col.gather(fn.rows);
    }
    // A column is only grouped when the rows to evaluate add no new levels.
    SmootherOptions local = options;
    local.force_continuous.assign(static_cast<std::size_t>(dim), false);
    for (Eigen::Index j = 0; j < dim; ++j) {
      std::set<double> levels(points.col(j).data(), points.col(j).data() + m);
      if (levels.size() > options.max_discrete_levels) continue;
      for (Eigen::Index i = 0; i < n_eval; ++i) {
        if (!levels.count(eval(i, j))) {
          local.force_continuous[static_cast<std::size_t>(j)] = true;
          break;
        }
      }
    }
    LocalLinearSmoother smoother(points, d, local);
    Eigen::RowVectorXd floors =
        Eigen::RowVectorXd::Constant(responses.cols(), -std::numeric_limits<double>::infinity());
    floors(0) = floors(1) = fn.clip_floor;
    smooth = smoother.smooth(responses, eval, floors);
    if (model_variance) log_var_at_sample = smoother.smooth(responses.col(2), points).col(0);
  }

  // The exact ratio is a weighted average of 1/d_i, so it lies in
  // [1/max d, 1/min d]; smoothing error outside that range is projected back.
  const double lo = 1.0 / d.maxCoeff();
  const double hi = 1.0 / d.minCoeff();
  fn.values.resize(n_eval);
  for (Eigen::Index i = 0; i < n_eval; ++i) {
    const double num = std::max(smooth(i, 0), fn.clip_floor);
    const double den_raw = smooth(i, 1);
    if (den_raw < fn.clip_floor) ++fn.clip_count;
    const double ratio = num / std::max(den_raw, fn.clip_floor);
    if (ratio < lo || ratio > hi) ++fn.bounded_count;
    fn.values(i) = std::clamp(ratio, lo, hi);
  }
  if (model_variance) {
    const double vlo = weighted_quantile(log_var_at_sample, d, 0.01);
    const double vhi = weighted_quantile(log_var_at_sample, d, 0.99);
    for (Eigen::Index i = 0; i < n_eval; ++i) {
      fn.values(i) /= std::exp(std::clamp(smooth(i, 2), vlo, vhi));
    }
  }

  double mean = 0.0;
  if (fn.all_rows) {
    mean = fn.values.mean();
  } else {
    mean = d.dot(fn.values) / d.sum();
  }
  fn.normalisation = 1.0 / mean;
  fn.values *= fn.normalisation;
  return fn;
}

}  // namespace twophase
