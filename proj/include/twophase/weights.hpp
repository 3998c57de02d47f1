#pragma once

#include <vector>

#include <Eigen/Dense>

namespace twophase {

// Layered weights of one estimator on the phase-2 rows. Layers are kept
// apart because the variance formula addresses q and g individually.
struct WeightSet {
  std::vector<std::size_t> rows;  // included frame rows; entries below align with it
  Eigen::VectorXd base;           // d_i
  Eigen::VectorXd stabiliser;     // q_i, ones when unstabilised
  Eigen::VectorXd raking;         // g_i, ones when not raked

  // Auxiliaries G_i on `rows` that the raking factors were calibrated on;
  // empty (0 columns) when no calibration took place.
  Eigen::MatrixXd calibration_aux;
  double calibration_residual = 0.0;
  int calibration_iterations = 0;
  bool negative_raking = false;

  Eigen::VectorXd composite() const {
    return (base.array() * stabiliser.array() * raking.array()).matrix();
  }
  bool raked() const { return calibration_aux.cols() > 0; }
};

// d_i alone, q = g = 1.
WeightSet design_weight_set(std::vector<std::size_t> rows, Eigen::VectorXd base);

}  // namespace twophase
