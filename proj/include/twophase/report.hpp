#pragma once

#include <map>
#include <string>
#include <vector>

#include "twophase/estimators.hpp"
#include "twophase/simlab.hpp"

namespace twophase {

enum class TableFormat { text, markdown };

TableFormat parse_table_format(const std::string& text);

// Fixed-point with `digits` decimals; "NA" for an empty optional.
std::string fixed(double value, int digits = 3);

// Renders rows of cells as an aligned text table or a markdown table. The
// first row is the header.
std::string render_table(const std::vector<std::vector<std::string>>& rows, TableFormat format);

// -------------------------------------------------------------------------
// Single-dataset estimates
// -------------------------------------------------------------------------

struct EstimatorResult {
  EstimatorKind kind = EstimatorKind::ipw;
  bool ok = false;
  EstimateReport report;  // valid when ok
  std::string error;      // set when !ok
};

// Long format: estimator,coefficient,estimate,se,lower,upper,status.
std::string estimates_csv(const std::vector<EstimatorResult>& results);

// Wide table, one row per coefficient and an (estimate, SE, 95% CI) column
// group per estimator. Odds ratios are shown for logistic models.
std::string estimates_table(const std::vector<EstimatorResult>& results, Family family,
                            TableFormat format);

// -------------------------------------------------------------------------
// Simulation summaries
// -------------------------------------------------------------------------

// A summary tagged with the grid parameters that produced it.
struct GridResult {
  std::vector<std::pair<std::string, double>> parameters;
  SimulationSummary summary;
};

// One line per (grid point, estimator, coefficient).
std::string summary_csv(const std::vector<GridResult>& results);

// Rows (parameters..., coefficient); per estimator an empSE/RMSE column pair.
std::string summary_markdown(const std::vector<GridResult>& results);

}  // namespace twophase
