#pragma once

#include <string>
#include <vector>

#include "twophase/estimators.hpp"

namespace twophase {

// One published empSE/RMSE value. Parameters not used by a table are zero.
struct ReferenceCell {
  std::string table;     // "1", "2", "3", "S1" ... "S6"
  std::string scenario;  // simlab scenario id
  double beta_x = 0.0;
  double beta_z = 0.0;
  double sigma2 = 0.0;
  double delta = 0.0;
  double mean_phase2_size = 0.0;  // reported average n, 0 when not reported
  std::string coefficient;
  EstimatorKind estimator = EstimatorKind::ipw;
  double emp_se = 0.0;
  double rmse = 0.0;
};

const std::vector<ReferenceCell>& reference_cells();

}  // namespace twophase
