#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "twophase/estimators.hpp"
#include "twophase/frame.hpp"

namespace twophase {

// -------------------------------------------------------------------------
// Scenario configuration
// -------------------------------------------------------------------------

enum class ScenarioId {
  cc_normal,
  cc_uniform,
  cc_confounded,
  tp_homoscedastic,
  tp_heteroscedastic,
  tp_binary,
  tp_AZ_balanced,
  tp_AZ_optimal,
  tp_Z_optimal
};

const char* to_string(ScenarioId id);
ScenarioId parse_scenario(const std::string& text);
bool is_case_control(ScenarioId id);

enum class Allocation { case_control_1to1, balanced, neyman_optimal };

const char* to_string(Allocation a);
Allocation parse_allocation(const std::string& text);

// Stratification on one column: quantile cut points in (0,1), or one
// stratum per distinct value when `levels` is set.
struct StrataRule {
  std::string column;
  std::vector<double> quantiles;
  bool levels = false;
};

struct ScenarioConfig {
  ScenarioId scenario_id = ScenarioId::tp_homoscedastic;
  std::size_t population_size = 6000;
  std::size_t phase2_size = 600;  // unused by case-control sampling
  double beta0 = 0.0;
  double beta_x = 0.1;
  double beta_z = 0.1;
  double sigma2 = 1.0;
  double delta = 0.0;
  Allocation allocation = Allocation::balanced;
  std::vector<StrataRule> strata_rule;
  std::string neyman_target = "X";  // coefficient whose influence function drives Neyman
  // Neyman S_h from the empirical influence functions, or from their
  // model-based spread with a constant (gaussian) or mean-implied (logit)
  // residual variance.
  bool neyman_model_variance = false;
  std::size_t replicates = 1000;
  std::uint64_t base_seed = 20240601;

  std::vector<EstimatorKind> estimators;  // empty: scenario default roster
  EstimatorOptions estimator_options;     // scenario defaults from default_config()
};

// The settings used for the published table of each scenario.
ScenarioConfig default_config(ScenarioId id);
// Throws DomainError on out-of-domain fields.
void validate(const ScenarioConfig& config);

std::vector<EstimatorKind> default_estimators(ScenarioId id);
ModelSpec scenario_model(const ScenarioConfig& config);
// True coefficients in coefficient_names() order.
Eigen::VectorXd true_coefficients(const ScenarioConfig& config);

// JSON text round trip. Missing keys take the scenario defaults.
std::string config_to_json(const ScenarioConfig& config);
ScenarioConfig config_from_json(const std::string& text);

// -------------------------------------------------------------------------
// Generation and phase-2 sampling
// -------------------------------------------------------------------------

// Deterministic given (base_seed, replicate, substream).
PopulationFrame generate_population(const ScenarioConfig& config, std::size_t replicate,
                                    std::size_t substream = 0);

// Sample quantile, linear interpolation between order statistics.
double quantile(std::vector<double> values, double p);

// Stratum label of every row under config.strata_rule (case-control: Y).
std::vector<int> assign_strata(const PopulationFrame& frame, const ScenarioConfig& config);

// n_h per stratum (labels ascending) for balanced or Neyman allocation.
std::vector<std::size_t> allocate(const std::vector<std::size_t>& stratum_sizes,
                                  const std::vector<double>& stratum_sd, std::size_t n,
                                  Allocation rule);

TwoPhaseDesign draw_phase2(const PopulationFrame& frame, const ScenarioConfig& config,
                           std::size_t replicate, std::size_t substream = 0);

// Copy of `frame` with phase-2 columns marked missing outside the design.
PopulationFrame mask_unsampled(const PopulationFrame& frame, const TwoPhaseDesign& design);

// -------------------------------------------------------------------------
// Monte Carlo
// -------------------------------------------------------------------------

struct ReplicateContext {
  const ScenarioConfig& config;
  const PopulationFrame& frame;
  const TwoPhaseDesign& design;
  const ModelSpec& spec;
  EstimatorPipeline& pipeline;
};

struct EstimateOutcome {
  Eigen::VectorXd beta;
  Eigen::VectorXd se;
};

// A named estimator evaluated once per replicate.
struct EstimatorEntry {
  std::string name;  // column label, e.g. "IPW"
  std::function<EstimateOutcome(ReplicateContext&)> run;
};

EstimatorEntry standard_entry(EstimatorKind kind);

struct SummaryCell {
  std::string estimator;
  std::string coefficient;
  double truth = 0.0;
  double bias = 0.0;
  std::optional<double> emp_se;  // undefined for fewer than two replicates
  double rmse = 0.0;
  std::optional<double> mean_se;
  std::size_t count = 0;
  std::size_t failures = 0;
};

struct SimulationSummary {
  ScenarioConfig config;
  std::vector<SummaryCell> cells;
  std::size_t replicates = 0;
  double mean_phase2_size = 0.0;
  std::size_t regenerations = 0;  // case-control populations redrawn for lack of cases
  std::vector<std::string> failure_log;
  bool failed = false;  // some estimator failed in more than 1% of replicates

  const SummaryCell& cell(const std::string& estimator, const std::string& coefficient) const;
  // Empirical SE of a cell; throws if undefined.
  double emp_se(const std::string& estimator, const std::string& coefficient) const;
};

struct RunOptions {
  unsigned parallel = 1;
  double failure_threshold = 0.01;
};

SimulationSummary run_scenario(const ScenarioConfig& config,
                               const std::vector<EstimatorEntry>& estimators,
                               const RunOptions& options = {});
// Uses config.estimators (or the scenario default roster).
SimulationSummary run_scenario(const ScenarioConfig& config, const RunOptions& options = {});

// Aggregates raw estimates (one vector per successful replicate).
SummaryCell summarise_cell(const std::string& estimator, const std::string& coefficient,
                           double truth, const std::vector<double>& estimates,
                           const std::vector<double>& standard_errors, std::size_t failures);

}  // namespace twophase
