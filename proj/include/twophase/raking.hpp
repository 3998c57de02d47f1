#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "twophase/frame.hpp"
#include "twophase/weights.hpp"

namespace twophase {

enum class Distance {
  linear,       // GREG, delta(a, b) = (a - b)^2 / 2b, g = 1 + alpha'G
  exponential,  // raking, g = exp(alpha'G)
};

const char* to_string(Distance distance);
Distance parse_distance(const std::string& text);

struct CalibrationProblem {
  Eigen::MatrixXd aux;                // G_i for all N phase-1 rows
  std::vector<std::size_t> included;  // rows with R_i = 1
  Eigen::VectorXd base_weights;       // d_i, aligned with `included`
  Eigen::VectorXd stabilisers;        // q_i on all N rows
  Distance distance = Distance::exponential;
  Eigen::VectorXd target;             // sum_i q_i G_i over all rows
  std::vector<std::string> aux_names;  // optional, for error messages
};

// Fills stabilisers with ones when `q` is empty and computes the target.
CalibrationProblem make_calibration_problem(Eigen::MatrixXd aux,
                                            std::vector<std::size_t> included,
                                            Eigen::VectorXd base_weights, Eigen::VectorXd q,
                                            Distance distance);

struct CalibrationOptions {
  int max_iterations = 100;
  double tolerance = 1e-11;  // relative max-norm constraint gap
};

struct CalibrationResult {
  Eigen::VectorXd g_factors;    // aligned with problem.included
  Eigen::VectorXd multipliers;  // alpha-hat on the original auxiliary scale
  double constraint_residual = 0.0;  // max |lhs - target| / max(1, |target|_inf)
  int iterations = 0;
  bool negative_weights = false;  // linear distance only
};

CalibrationResult solve_calibration(const CalibrationProblem& problem,
                                    const CalibrationOptions& options = {});

// Raking factors for the stabilised constraints
//   sum_i R_i d_i g_i q_i G_i = sum_i q_i G_i
// with q on all N rows. Returns d, q and g as separate layers.
WeightSet stabilised_rake(const TwoPhaseDesign& design, const Eigen::MatrixXd& aux,
                          const Eigen::VectorXd& q, Distance distance,
                          const CalibrationOptions& options = {});

}  // namespace twophase
