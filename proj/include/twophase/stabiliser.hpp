#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "twophase/frame.hpp"
#include "twophase/glm.hpp"
#include "twophase/smoother.hpp"

namespace twophase {

enum class StabiliserKind { closed_form_cc, smoothed_ratio };

// Numerator of the optimal q: the empirical E(e^2 | .) or the working-model
// variance. They coincide for a correctly specified logistic model and for
// homoscedastic gaussian errors; under heteroscedastic gaussian errors the
// model form gives q proportional to 1 / E(d e^2 | .).
enum class QVariance { empirical, model };

// Values of q on the rows it applies to. q is only defined up to a positive
// constant; `normalisation` is the factor that was applied.
struct StabiliserFn {
  StabiliserKind kind = StabiliserKind::smoothed_ratio;
  std::vector<std::string> inputs;  // conditioning columns
  std::vector<std::size_t> rows;    // frame rows the values belong to
  Eigen::VectorXd values;
  double clip_floor = 0.0;
  double normalisation = 1.0;
  std::size_t clip_count = 0;  // rows whose denominator smooth was clipped
  std::size_t bounded_count = 0;  // rows projected onto [1/max d, 1/min d]
  bool all_rows = false;       // true when defined on every phase-1 row

  // Values on the included rows of `design`, in included_rows() order.
  Eigen::VectorXd on_included(const TwoPhaseDesign& design) const;
};

// q_i = 1 / ((1 - p_i) + ((N - n_cases) / n_cases) p_i).
Eigen::VectorXd case_control_q(const Eigen::VectorXd& p_hat, std::size_t n_total,
                               std::size_t n_cases);

// Ratio of design-weighted smooths of e^2 and d e^2 on the conditioning
// columns, using the residuals of `fit` (fitted on the design's included
// rows), projected onto [1/max d, 1/min d]. With QVariance::model and a
// gaussian fit the ratio is further divided by a variance function
// exp(smooth of log e^2), held within the central 98% (design-weighted) of
// its values on the phase-2 rows. Evaluated on every phase-1 row when all conditioning columns are
// phase-1, otherwise on the included rows only. Normalised to mean 1 over
// the rows it is evaluated on (design-weighted on the phase-2 rows).
StabiliserFn estimate_q_smoothed(const GlmFit& fit, const PopulationFrame& frame,
                                 const TwoPhaseDesign& design,
                                 const std::vector<std::string>& conditioning,
                                 const SmootherOptions& options = {},
                                 QVariance variance = QVariance::empirical);

}  // namespace twophase
