#pragma once

#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "twophase/frame.hpp"

namespace twophase {

struct GlmOptions {
  int max_iterations = 50;
  double tolerance = 1e-10;       // relative coefficient change, or score norm
  double separation_bound = 30.0;  // |beta_k| above this under logit => separation
};

// Result of a weighted canonical-link GLM fit. Row k of every per-unit
// matrix refers to frame row rows[k].
struct GlmFit {
  Family family = Family::gaussian_identity;
  std::vector<std::string> coefficient_names;
  std::vector<std::size_t> rows;

  Eigen::VectorXd beta;
  Eigen::MatrixXd design;        // n x p, leading column of ones
  Eigen::VectorXd response;
  Eigen::VectorXd weights;
  Eigen::VectorXd offset;        // zero when the model has none
  Eigen::VectorXd fitted;        // mu_i
  Eigen::VectorXd residual;      // e_i = y_i - mu_i
  Eigen::MatrixXd score_matrix;  // U_i = e_i x_i, unweighted
  // J = sum_i w_i mu'(eta_i) x_i x_i^T, the negative derivative of the
  // weighted score; positive definite at the solution.
  Eigen::MatrixXd jacobian;
  // h_i = n J^{-1} w_i U_i, on the mean scale so that
  // beta_hat - beta ~ (1/n) sum_i h_i with n = rows.size().
  Eigen::MatrixXd influence;

  bool converged = false;
  int iterations = 0;
  double score_norm = 0.0;  // max-norm of sum_i w_i U_i at beta

  std::size_t n_coefficients() const { return static_cast<std::size_t>(beta.size()); }
};

// Core solver on an explicit design matrix. `names` labels the columns of x.
GlmFit fit_glm_matrix(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                      const Eigen::VectorXd& weights, const Eigen::VectorXd& offset,
                      Family family, std::vector<std::string> names,
                      const GlmOptions& options = {});

// Weighted fit of `spec` on a subset of frame rows. `weights` is aligned
// with `rows`.
GlmFit fit_weighted_glm(const PopulationFrame& frame, const ModelSpec& spec,
                        const Eigen::VectorXd& weights, std::span<const std::size_t> rows,
                        const GlmOptions& options = {});

// h_i rows; zero for zero-weight units.
Eigen::MatrixXd influence_functions(const GlmFit& fit);

// Inverse of the observed information, J^{-1}.
Eigen::MatrixXd model_based_vcov(const GlmFit& fit);

struct SamplingFractions {
  double cases = 1.0;
  double controls = 1.0;
};

// Unweighted logistic fit on a case-control sample with the intercept
// shifted by -log(f_cases / f_controls).
GlmFit mle_case_control(const PopulationFrame& frame, const ModelSpec& spec,
                        std::span<const std::size_t> rows, SamplingFractions fractions,
                        const GlmOptions& options = {});

// Sum of weighted scores at `beta`: sum_i w_i (y_i - mu_i) x_i.
Eigen::VectorXd weighted_score(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                               const Eigen::VectorXd& weights, const Eigen::VectorXd& offset,
                               Family family, const Eigen::VectorXd& beta);

}  // namespace twophase
