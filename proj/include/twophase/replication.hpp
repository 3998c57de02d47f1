#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "twophase/paper_tables.hpp"
#include "twophase/report.hpp"
#include "twophase/simlab.hpp"

namespace twophase {

// One row setting of a published table.
struct GridPoint {
  ScenarioId scenario = ScenarioId::tp_homoscedastic;
  double beta_x = 0.0;
  double beta_z = 0.0;
  double sigma2 = 0.0;
  double delta = 0.0;

  bool operator==(const GridPoint&) const = default;
};

std::vector<std::string> known_tables();  // "1", "2", "3", "S1" ... "S6"
std::string table_scenario(const std::string& table);

// Every row setting of a table, in published order.
std::vector<GridPoint> table_grid(const std::string& table);
// The settings that carry tolerance checks (a subset of table_grid).
std::vector<GridPoint> check_points(const std::string& table);

// Grid parameters as shown in the table, e.g. {sigma2, beta}.
std::vector<std::pair<std::string, double>> grid_parameters(const std::string& table,
                                                            const GridPoint& point);

ScenarioConfig grid_config(const GridPoint& point, std::size_t replicates, std::uint64_t seed);

using SummaryLookup = std::function<const SimulationSummary&(const GridPoint&)>;

struct ToleranceCheck {
  std::string name;
  double value = 0.0;
  std::string rule;
  bool pass = false;
};

// Tolerance checks attached to a table; `lookup` returns the summary of a
// check point.
std::vector<ToleranceCheck> table_checks(const std::string& table, const SummaryLookup& lookup);

// |bias| < 0.01 on every estimator/coefficient cell of a summary.
ToleranceCheck bias_check(const std::string& label, const SimulationSummary& summary,
                          double bound = 0.01);

struct CellComparison {
  ReferenceCell reference;
  std::optional<double> reproduced;
  std::optional<double> ratio;  // reproduced / published
};

std::vector<CellComparison> compare_with_reference(const std::string& table,
                                                   const std::vector<GridPoint>& points,
                                                   const SummaryLookup& lookup);

}  // namespace twophase
