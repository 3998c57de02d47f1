#include "twophase/glm.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "twophase/errors.hpp"

namespace twophase {

namespace {

double expit(double eta) {
  if (eta >= 0.0) {
    const double z = std::exp(-eta);
    return 1.0 / (1.0 + z);
  }
  const double z = std::exp(eta);
  return z / (1.0 + z);
}

// log(1 + exp(eta)) without overflow.
double log1pexp(double eta) {
  if (eta > 35.0) return eta;
  if (eta < -35.0) return std::exp(eta);
  return std::log1p(std::exp(eta));
}

void mean_and_derivative(Family family, const Eigen::VectorXd& eta, Eigen::VectorXd& mu,
                         Eigen::VectorXd& dmu) {
  const Eigen::Index n = eta.size();
  mu.resize(n);
  dmu.resize(n);
  if (family == Family::gaussian_identity) {
    mu = eta;
    dmu.setOnes();
    return;
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    const double p = expit(eta(i));
    mu(i) = p;
    dmu(i) = p * (1.0 - p);
  }
}

// Weighted log-likelihood up to constants; gaussian uses -RSS/2.
double objective(Family family, const Eigen::VectorXd& y, const Eigen::VectorXd& w,
                 const Eigen::VectorXd& eta) {
  double total = 0.0;
  if (family == Family::gaussian_identity) {
    for (Eigen::Index i = 0; i < y.size(); ++i) {
      const double r = y(i) - eta(i);
      total -= 0.5 * w(i) * r * r;
    }
    return total;
  }
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    if (w(i) == 0.0) continue;
    total += w(i) * (y(i) * eta(i) - log1pexp(eta(i)));
  }
  return total;
}

void check_rank(const Eigen::MatrixXd& x, const Eigen::VectorXd& w,
                const std::vector<std::string>& names) {
  Eigen::Index n_pos = (w.array() > 0.0).count();
  const Eigen::Index p = x.cols();
  Eigen::MatrixXd xs(n_pos, p);
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    if (w(i) > 0.0) xs.row(r++) = std::sqrt(w(i)) * x.row(i);
  }
  // Column scaling so the rank threshold is unit-free.
  Eigen::VectorXd scale = xs.colwise().norm().transpose();
  for (Eigen::Index k = 0; k < p; ++k) {
    if (scale(k) == 0.0) {
      throw SingularityError("design matrix is singular: column '" +
                             names[static_cast<std::size_t>(k)] + "' is zero on weighted rows");
    }
    xs.col(k) /= scale(k);
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(xs);
  qr.setThreshold(1e-9);
  if (qr.rank() < p) {
    std::ostringstream msg;
    msg << "design matrix is rank deficient (rank " << qr.rank() << " of " << p
        << "); dependent column(s):";
    for (Eigen::Index k = qr.rank(); k < p; ++k) {
      msg << " '" << names[static_cast<std::size_t>(qr.colsPermutation().indices()(k))] << "'";
    }
    throw SingularityError(msg.str());
  }
}

}  // namespace

Eigen::VectorXd weighted_score(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                               const Eigen::VectorXd& weights, const Eigen::VectorXd& offset,
                               Family family, const Eigen::VectorXd& beta) {
  Eigen::VectorXd eta = x * beta + offset;
  Eigen::VectorXd mu, dmu;
  mean_and_derivative(family, eta, mu, dmu);
  return x.transpose() * (weights.array() * (y - mu).array()).matrix();
}

GlmFit fit_glm_matrix(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                      const Eigen::VectorXd& weights, const Eigen::VectorXd& offset,
                      Family family, std::vector<std::string> names,
                      const GlmOptions& options) {
  const Eigen::Index n = x.rows();
  const Eigen::Index p = x.cols();
  if (y.size() != n || weights.size() != n || offset.size() != n) {
    throw DomainError("fit_glm_matrix: response, weights and offset must match design rows");
  }
  if (static_cast<Eigen::Index>(names.size()) != p) {
    throw DomainError("fit_glm_matrix: one name per design column required");
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!std::isfinite(weights(i)) || weights(i) < 0.0) {
      throw DomainError("weights must be finite and non-negative (row " + std::to_string(i) + ")");
    }
  }
  if (!(weights.array() > 0.0).any()) throw DomainError("all weights are zero");
  check_rank(x, weights, names);

  GlmFit fit;
  fit.family = family;
  fit.coefficient_names = std::move(names);
  fit.design = x;
  fit.response = y;
  fit.weights = weights;
  fit.offset = offset;

  Eigen::VectorXd beta = Eigen::VectorXd::Zero(p);
  Eigen::VectorXd mu, dmu;
  Eigen::VectorXd eta = x * beta + offset;
  double obj = objective(family, y, weights, eta);
  double score_norm = 0.0;
  bool converged = false;
  int iter = 0;

  while (iter < options.max_iterations) {
    ++iter;
    mean_and_derivative(family, eta, mu, dmu);
    const Eigen::VectorXd score = x.transpose() * (weights.array() * (y - mu).array()).matrix();
    score_norm = score.lpNorm<Eigen::Infinity>();
    const Eigen::MatrixXd info =
        x.transpose() * (x.array().colwise() * (weights.array() * dmu.array())).matrix();
    Eigen::LDLT<Eigen::MatrixXd> ldlt(info);
    if (ldlt.info() != Eigen::Success || !ldlt.isPositive()) {
      throw SingularityError("weighted information matrix is not positive definite");
    }
    const Eigen::VectorXd step = ldlt.solve(score);

    double t = 1.0;
    Eigen::VectorXd candidate = beta + step;
    Eigen::VectorXd eta_new = x * candidate + offset;
    double obj_new = objective(family, y, weights, eta_new);
    for (int halving = 0; halving < 30 && obj_new < obj - 1e-12 * std::abs(obj); ++halving) {
      t *= 0.5;
      candidate = beta + t * step;
      eta_new = x * candidate + offset;
      obj_new = objective(family, y, weights, eta_new);
    }
    const double change = (candidate - beta).lpNorm<Eigen::Infinity>() /
                          std::max(1.0, candidate.lpNorm<Eigen::Infinity>());
    beta = candidate;
    eta = eta_new;
    obj = obj_new;

    if (family == Family::binomial_logit &&
        beta.lpNorm<Eigen::Infinity>() > options.separation_bound) {
      Eigen::Index k = 0;
      beta.cwiseAbs().maxCoeff(&k);
      throw SeparationError("logistic fit diverges (|beta| > " +
                            std::to_string(options.separation_bound) + " for '" +
                            fit.coefficient_names[static_cast<std::size_t>(k)] +
                            "'); the data look separated");
    }
    if (change < options.tolerance || score_norm < options.tolerance) {
      converged = true;
      break;
    }
  }
  // Under complete separation the score vanishes while the coefficients are
  // still finite; a logistic fit that reproduces every outcome is diverging.
  if (converged && family == Family::binomial_logit) {
    mean_and_derivative(family, eta, mu, dmu);
    double worst = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (weights(i) > 0.0) worst = std::max(worst, std::abs(y(i) - mu(i)));
    }
    if (worst < 1e-6) {
      Eigen::Index k = 0;
      beta.cwiseAbs().maxCoeff(&k);
      throw SeparationError("logistic fit reproduces every outcome (largest coefficient '" +
                            fit.coefficient_names[static_cast<std::size_t>(k)] +
                            "'); the data look separated");
    }
  }
  mean_and_derivative(family, eta, mu, dmu);
  const Eigen::VectorXd resid = y - mu;
  const Eigen::VectorXd score = x.transpose() * (weights.array() * resid.array()).matrix();
  score_norm = score.lpNorm<Eigen::Infinity>();
  if (!converged) {
    throw ConvergenceError("IRLS did not converge in " + std::to_string(options.max_iterations) +
                               " iterations; final score norm " + std::to_string(score_norm),
                           score_norm);
  }

  fit.beta = beta;
  fit.fitted = mu;
  fit.residual = resid;
  fit.score_matrix = x.array().colwise() * resid.array();
  fit.jacobian = x.transpose() * (x.array().colwise() * (weights.array() * dmu.array())).matrix();
  fit.jacobian = 0.5 * (fit.jacobian + fit.jacobian.transpose()).eval();
  Eigen::LDLT<Eigen::MatrixXd> jdec(fit.jacobian);
  if (jdec.info() != Eigen::Success || !jdec.isPositive()) {
    throw SingularityError("Jacobian is singular at the solution");
  }
  const Eigen::MatrixXd weighted_scores = fit.score_matrix.array().colwise() * weights.array();
  fit.influence = (static_cast<double>(n) * jdec.solve(weighted_scores.transpose())).transpose();
  fit.converged = true;
  fit.iterations = iter;
  fit.score_norm = score_norm;
  return fit;
}

GlmFit fit_weighted_glm(const PopulationFrame& frame, const ModelSpec& spec,
                        const Eigen::VectorXd& weights, std::span<const std::size_t> rows,
                        const GlmOptions& options) {
  validate(spec, frame);
  if (static_cast<std::size_t>(weights.size()) != rows.size()) {
    throw DomainError("weights must align with the row subset");
  }
  Eigen::MatrixXd x = design_matrix(frame, spec, rows);
  Eigen::VectorXd y = frame.outcome().gather(rows);
  Eigen::VectorXd off = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(rows.size()));
  if (spec.offset) {
    for (std::size_t k = 0; k < rows.size(); ++k) {
      off(static_cast<Eigen::Index>(k)) = (*spec.offset)[rows[k]];
    }
  }
  GlmFit fit = fit_glm_matrix(x, y, weights, off, spec.family, spec.coefficient_names(), options);
  fit.rows.assign(rows.begin(), rows.end());
  return fit;
}

Eigen::MatrixXd influence_functions(const GlmFit& fit) {
  if (!fit.converged) throw DomainError("influence functions need a converged fit");
  return fit.influence;
}

Eigen::MatrixXd model_based_vcov(const GlmFit& fit) {
  Eigen::LDLT<Eigen::MatrixXd> ldlt(fit.jacobian);
  if (ldlt.info() != Eigen::Success || !ldlt.isPositive()) {
    throw SingularityError("Jacobian is singular");
  }
  const auto p = fit.jacobian.rows();
  return ldlt.solve(Eigen::MatrixXd::Identity(p, p));
}

GlmFit mle_case_control(const PopulationFrame& frame, const ModelSpec& spec,
                        std::span<const std::size_t> rows, SamplingFractions fractions,
                        const GlmOptions& options) {
  if (spec.family != Family::binomial_logit) {
    throw DomainError("case-control MLE requires the binomial-logit family");
  }
  auto valid = [](double f) { return f > 0.0 && f <= 1.0; };
  if (!valid(fractions.cases) || !valid(fractions.controls)) {
    throw DomainError("sampling fractions must lie in (0, 1]");
  }
  // Under the logit link the sampling shifts only the intercept, by
  // log(f_cases/f_controls); fitting with that offset returns the corrected
  // intercept directly.
  ModelSpec shifted = spec;
  const double shift = std::log(fractions.cases / fractions.controls);
  std::vector<double> off(frame.n_rows(), shift);
  if (spec.offset) {
    for (std::size_t i = 0; i < off.size(); ++i) off[i] += (*spec.offset)[i];
  }
  shifted.offset = std::move(off);
  const Eigen::VectorXd w = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(rows.size()));
  return fit_weighted_glm(frame, shifted, w, rows, options);
}

}  // namespace twophase
