#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "twophase/frame.hpp"
#include "twophase/glm.hpp"
#include "twophase/raking.hpp"
#include "twophase/smoother.hpp"
#include "twophase/stabiliser.hpp"
#include "twophase/weights.hpp"

namespace twophase {

enum class EstimatorKind { ipw, gr, stab_z, stab_xz, stab_rake, mle_cc };

const char* to_string(EstimatorKind kind);
// Accepts the canonical names plus the display forms (e.g. "Stab-rake").
EstimatorKind parse_estimator(const std::string& text);
std::vector<EstimatorKind> parse_estimator_list(const std::string& comma_list);
// Column header used in tables: IPW, GR, Stab_z, Stab_xz, Stab-rake, MLE.
const char* display_name(EstimatorKind kind);

enum class QMethod {
  smoothed,       // kernel ratio of e^2 and d e^2 smooths
  closed_form_cc  // case-control logistic closed form from fitted probabilities
};

enum class PluginModel {
  imputed,     // outcome model refitted on N rows with imputed phase-2 regressors
  phase1_only  // outcome model without the phase-2 regressors, fitted on N rows
};

struct EstimatorOptions {
  Distance distance = Distance::exponential;
  // Phase-1 columns used to impute phase-2 regressors for the plug-in
  // auxiliaries. Empty: every auxiliary column plus phase-1 regressors.
  std::vector<std::string> imputation_columns;
  PluginModel plugin_model = PluginModel::imputed;
  // Coefficients whose plug-in influence functions are raked on. Empty: all.
  std::vector<std::string> raking_coefficients;
  // Adds a constant auxiliary so raked weights reproduce N.
  bool calibrate_population_size = true;

  QMethod q_method = QMethod::smoothed;
  QVariance q_variance = QVariance::empirical;
  // Conditioning sets; unset means phase-1 regressors (q(z)) and all
  // regressors (q(x,z)).
  std::optional<std::vector<std::string>> z_conditioning;
  std::optional<std::vector<std::string>> xz_conditioning;
  // Conditioning used by stab_rake; unset means z_conditioning. Must be
  // phase-1 only.
  std::optional<std::vector<std::string>> rake_conditioning;

  double q_scale = 1.0;       // multiplies every q; estimates are invariant to it
  bool force_unit_q = false;  // stab_rake with q = 1 (reduces to gr)

  GlmOptions glm;
  CalibrationOptions calibration;
  SmootherOptions smoother;
};

struct EstimateDiagnostics {
  int glm_iterations = 0;
  double constraint_residual = 0.0;
  int calibration_iterations = 0;
  std::size_t clip_count = 0;
  std::size_t stabiliser_rows = 0;
  std::vector<std::string> notes;
};

struct EstimateReport {
  EstimatorKind estimator = EstimatorKind::ipw;
  std::vector<std::string> coefficient_names;
  Eigen::VectorXd beta;
  Eigen::MatrixXd vcov;
  Eigen::VectorXd se;
  WeightSet weight_set;
  EstimateDiagnostics diagnostics;
};

// Caches the intermediate fits shared by several estimators on the same
// data (the IPW fit, plug-in auxiliaries and stabilisers). Not thread-safe;
// use one pipeline per thread.
class EstimatorPipeline {
 public:
  EstimatorPipeline(const PopulationFrame& frame, const TwoPhaseDesign& design,
                    const ModelSpec& spec, EstimatorOptions options = {});

  EstimateReport run(EstimatorKind kind);

  const GlmFit& ipw_fit();
  const Eigen::MatrixXd& plugin_auxiliaries();
  // Auxiliary matrix actually raked on (selected columns, optional constant).
  const Eigen::MatrixXd& raking_auxiliaries();
  const StabiliserFn& q_z();
  const StabiliserFn& q_xz();
  const StabiliserFn& q_rake();

 private:
  const PopulationFrame& frame_;
  const TwoPhaseDesign& design_;
  ModelSpec spec_;
  EstimatorOptions options_;

  std::optional<GlmFit> ipw_fit_;
  std::optional<Eigen::MatrixXd> plugin_;
  std::optional<Eigen::MatrixXd> raking_aux_;
  std::optional<StabiliserFn> q_z_;
  std::optional<StabiliserFn> q_xz_;
  std::optional<StabiliserFn> q_rake_;

  StabiliserFn make_stabiliser(const std::vector<std::string>& conditioning);
  EstimateReport finish(EstimatorKind kind, WeightSet weights);
};

EstimateReport estimate(EstimatorKind kind, const PopulationFrame& frame,
                        const TwoPhaseDesign& design, const ModelSpec& spec,
                        const EstimatorOptions& options = {});

// Influence functions (N x p1) of the outcome model restricted to its
// phase-1 regressors, fitted on all N rows.
Eigen::MatrixXd build_phase1_auxiliaries(const PopulationFrame& frame, const ModelSpec& spec,
                                         const GlmOptions& options = {});

// Plug-in influence functions: impute each phase-2 regressor from the
// imputation columns (design-weighted linear regression on the phase-2
// rows), refit the outcome model on all N rows with the imputed values and
// return that fit's influence functions (N x p).
Eigen::MatrixXd build_plugin_auxiliaries(const PopulationFrame& frame,
                                         const TwoPhaseDesign& design, const ModelSpec& spec,
                                         const std::vector<std::string>& imputation_columns,
                                         const GlmOptions& options = {});

// Two-phase sandwich variance
//   J^{-1} [ sum_i R_i q_i^2/pi_i U_i U_i'
//            + sum_ij R_i R_j (Delta_ij/pi_ij) g_i g_j d_i d_j q_i q_j U_i U_j' ] J^{-T}
// where J is the total-scale Jacobian of the fit. When the weights were
// raked, U in the phase-2 term is replaced by its residual on the
// calibration auxiliaries. The double sum is accumulated per stratum from
// stratum totals.
Eigen::MatrixXd two_phase_variance(const GlmFit& fit, const TwoPhaseDesign& design,
                                   const WeightSet& weights);

// Residuals of the scores on the calibration auxiliaries (rows of `weights`),
// the U that enters the phase-2 term. Returns the scores unchanged when the
// weights were not raked.
Eigen::MatrixXd calibration_residuals(const GlmFit& fit, const WeightSet& weights);

}  // namespace twophase
