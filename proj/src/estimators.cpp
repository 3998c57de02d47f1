#include "twophase/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "twophase/errors.hpp"

namespace twophase {

// -------------------------------------------------------------------------
// Names
// -------------------------------------------------------------------------

const char* to_string(EstimatorKind kind) {
  switch (kind) {
    case EstimatorKind::ipw: return "ipw";
    case EstimatorKind::gr: return "gr";
    case EstimatorKind::stab_z: return "stab_z";
    case EstimatorKind::stab_xz: return "stab_xz";
    case EstimatorKind::stab_rake: return "stab_rake";
    case EstimatorKind::mle_cc: return "mle_cc";
  }
  return "?";
}

const char* display_name(EstimatorKind kind) {
  switch (kind) {
    case EstimatorKind::ipw: return "IPW";
    case EstimatorKind::gr: return "GR";
    case EstimatorKind::stab_z: return "Stab_z";
    case EstimatorKind::stab_xz: return "Stab_xz";
    case EstimatorKind::stab_rake: return "Stab-rake";
    case EstimatorKind::mle_cc: return "MLE";
  }
  return "?";
}

EstimatorKind parse_estimator(const std::string& text) {
  std::string t;
  for (char c : text) {
    if (c == '-') c = '_';
    t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (t == "ipw") return EstimatorKind::ipw;
  if (t == "gr") return EstimatorKind::gr;
  if (t == "stab_z") return EstimatorKind::stab_z;
  if (t == "stab_xz" || t == "stab") return EstimatorKind::stab_xz;
  if (t == "stab_rake") return EstimatorKind::stab_rake;
  if (t == "mle_cc" || t == "mle") return EstimatorKind::mle_cc;
  throw DomainError("unknown estimator '" + text + "'");
}

std::vector<EstimatorKind> parse_estimator_list(const std::string& comma_list) {
  std::vector<EstimatorKind> out;
  std::stringstream ss(comma_list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) continue;
    const EstimatorKind k = parse_estimator(item);
    if (std::find(out.begin(), out.end(), k) == out.end()) out.push_back(k);
  }
  if (out.empty()) throw DomainError("estimator list is empty");
  return out;
}

// -------------------------------------------------------------------------
// Plug-in auxiliaries
// -------------------------------------------------------------------------

Eigen::MatrixXd build_plugin_auxiliaries(const PopulationFrame& frame,
                                         const TwoPhaseDesign& design, const ModelSpec& spec,
                                         const std::vector<std::string>& imputation_columns,
                                         const GlmOptions& options) {
  validate(spec, frame);
  for (const auto& c : imputation_columns) {
    if (!frame.has_column(c)) throw DomainError("imputation column '" + c + "' is not in the frame");
    if (!frame.is_phase1(c)) {
      throw DomainError("imputation column '" + c + "' is not observed at phase 1");
    }
  }
  const std::size_t n = frame.n_rows();
  const auto big_n = static_cast<Eigen::Index>(n);
  const auto& inc = design.included_rows();
  const std::vector<std::size_t> everyone = all_rows(n);

  // Imputation design [1, imputation columns] on all rows.
  Eigen::MatrixXd imp(big_n, static_cast<Eigen::Index>(imputation_columns.size() + 1));
  imp.col(0).setOnes();
  std::vector<std::string> imp_names{"(Intercept)"};
  for (std::size_t k = 0; k < imputation_columns.size(); ++k) {
    imp.col(static_cast<Eigen::Index>(k + 1)) = frame.column(imputation_columns[k]).to_vector();
    imp_names.push_back(imputation_columns[k]);
  }
  Eigen::MatrixXd imp_inc(static_cast<Eigen::Index>(inc.size()), imp.cols());
  for (std::size_t r = 0; r < inc.size(); ++r) {
    imp_inc.row(static_cast<Eigen::Index>(r)) = imp.row(static_cast<Eigen::Index>(inc[r]));
  }
  const Eigen::VectorXd d = design.included_weights();
  const Eigen::VectorXd zero_inc = Eigen::VectorXd::Zero(d.size());

  Eigen::MatrixXd x(big_n, static_cast<Eigen::Index>(spec.n_coefficients()));
  x.col(0).setOnes();
  for (std::size_t k = 0; k < spec.regressors.size(); ++k) {
    const std::string& name = spec.regressors[k];
    const Column& col = frame.column(name);
    const auto j = static_cast<Eigen::Index>(k + 1);
    if (frame.is_phase1(name)) {
      x.col(j) = col.to_vector();
      continue;
    }
    GlmFit imputation;
    try {
      imputation = fit_glm_matrix(imp_inc, col.gather(inc), d, zero_inc,
                                  Family::gaussian_identity, imp_names, options);
    } catch (const SingularityError& e) {
      throw CollinearityError("imputation model for '" + name + "' is singular: " + e.what());
    }
    x.col(j) = imp * imputation.beta;
  }

  Eigen::VectorXd y = frame.outcome().to_vector();
  Eigen::VectorXd off = Eigen::VectorXd::Zero(big_n);
  if (spec.offset) off = Eigen::Map<const Eigen::VectorXd>(spec.offset->data(), big_n);
  const GlmFit full = fit_glm_matrix(x, y, Eigen::VectorXd::Ones(big_n), off, spec.family,
                                     spec.coefficient_names(), options);
  (void)everyone;
  return full.influence;
}

Eigen::MatrixXd build_phase1_auxiliaries(const PopulationFrame& frame, const ModelSpec& spec,
                                         const GlmOptions& options) {
  ModelSpec reduced = spec;
  reduced.regressors = phase1_regressors(spec, frame);
  const auto n = static_cast<Eigen::Index>(frame.n_rows());
  return fit_weighted_glm(frame, reduced, Eigen::VectorXd::Ones(n), all_rows(frame.n_rows()), options)
      .influence;
}

// -------------------------------------------------------------------------
// EstimatorPipeline
// -------------------------------------------------------------------------

EstimatorPipeline::EstimatorPipeline(const PopulationFrame& frame, const TwoPhaseDesign& design,
                                     const ModelSpec& spec, EstimatorOptions options)
    : frame_(frame), design_(design), spec_(spec), options_(std::move(options)) {
  validate(spec_, frame_);
  if (design_.n_rows() != frame_.n_rows()) {
    throw InconsistentDesignError("design and frame have different row counts");
  }
  if (options_.imputation_columns.empty()) {
    options_.imputation_columns = frame_.column_names(ColumnRole::auxiliary);
    for (const auto& r : phase1_regressors(spec_, frame_)) options_.imputation_columns.push_back(r);
  }
  if (!(options_.q_scale > 0.0) || !std::isfinite(options_.q_scale)) {
    throw DomainError("q_scale must be positive");
  }
}

const GlmFit& EstimatorPipeline::ipw_fit() {
  if (!ipw_fit_) {
    ipw_fit_ = fit_weighted_glm(frame_, spec_, design_.included_weights(), design_.included_rows(),
                                options_.glm);
  }
  return *ipw_fit_;
}

const Eigen::MatrixXd& EstimatorPipeline::plugin_auxiliaries() {
  if (!plugin_) {
    if (options_.plugin_model == PluginModel::phase1_only) {
      plugin_ = build_phase1_auxiliaries(frame_, spec_, options_.glm);
    } else {
      plugin_ = build_plugin_auxiliaries(frame_, design_, spec_, options_.imputation_columns,
                                         options_.glm);
    }
  }
  return *plugin_;
}

const Eigen::MatrixXd& EstimatorPipeline::raking_auxiliaries() {
  if (!raking_aux_) {
    const Eigen::MatrixXd& h = plugin_auxiliaries();
    std::vector<std::string> names = spec_.coefficient_names();
    if (options_.plugin_model == PluginModel::phase1_only) {
      names = {"(Intercept)"};
      for (const auto& r : phase1_regressors(spec_, frame_)) names.push_back(r);
    }
    std::vector<Eigen::Index> cols;
    if (options_.raking_coefficients.empty()) {
      for (Eigen::Index j = 0; j < h.cols(); ++j) cols.push_back(j);
    } else {
      for (const auto& c : options_.raking_coefficients) {
        auto it = std::find(names.begin(), names.end(), c);
        if (it == names.end()) {
          throw DomainError("raking coefficient '" + c + "' is not in the auxiliary model");
        }
        cols.push_back(static_cast<Eigen::Index>(it - names.begin()));
      }
    }
    const Eigen::Index extra = options_.calibrate_population_size ? 1 : 0;
    Eigen::MatrixXd g(h.rows(), static_cast<Eigen::Index>(cols.size()) + extra);
    if (extra) g.col(0).setOnes();
    for (std::size_t k = 0; k < cols.size(); ++k) {
      g.col(static_cast<Eigen::Index>(k) + extra) = h.col(cols[k]);
    }
    raking_aux_ = std::move(g);
  }
  return *raking_aux_;
}

StabiliserFn EstimatorPipeline::make_stabiliser(const std::vector<std::string>& conditioning) {
  for (const auto& c : conditioning) {
    if (std::find(spec_.regressors.begin(), spec_.regressors.end(), c) == spec_.regressors.end()) {
      throw DomainError("stabiliser may only condition on model covariates; '" + c +
                        "' is not a regressor");
    }
  }
  const GlmFit& fit = ipw_fit();
  if (options_.q_method == QMethod::smoothed) {
    return estimate_q_smoothed(fit, frame_, design_, conditioning, options_.smoother,
                               options_.q_variance);
  }

  if (spec_.family != Family::binomial_logit) {
    throw UnsupportedCombinationError("closed-form stabiliser needs a binomial-logit model");
  }
  std::size_t n_cases = 0;
  const Column& y = frame_.outcome();
  for (std::size_t i = 0; i < frame_.n_rows(); ++i) n_cases += y.at(i) == 1.0 ? 1 : 0;

  StabiliserFn fn;
  fn.kind = StabiliserKind::closed_form_cc;
  fn.inputs = conditioning;
  fn.all_rows = std::all_of(conditioning.begin(), conditioning.end(),
                            [&](const std::string& c) { return frame_.is_phase1(c); });
  Eigen::VectorXd p;
  if (!fn.all_rows) {
    // p(x, z) from the design-weighted fit, on the phase-2 rows.
    ModelSpec sub = spec_;
    sub.regressors = conditioning;
    if (conditioning.size() == spec_.regressors.size()) {
      p = fit.fitted;
    } else {
      p = fit_weighted_glm(frame_, sub, design_.included_weights(), design_.included_rows(),
                           options_.glm)
              .fitted;
    }
    fn.rows = design_.included_rows();
  } else {
    // p(z) from a phase-1 logistic fit of Y on the conditioning columns.
    fn.rows = all_rows(frame_.n_rows());
    if (conditioning.empty()) {
      p = Eigen::VectorXd::Constant(static_cast<Eigen::Index>(frame_.n_rows()),
                                    static_cast<double>(n_cases) / static_cast<double>(frame_.n_rows()));
    } else {
      ModelSpec sub = spec_;
      sub.regressors = conditioning;
      p = fit_weighted_glm(frame_, sub,
                           Eigen::VectorXd::Ones(static_cast<Eigen::Index>(frame_.n_rows())),
                           fn.rows, options_.glm)
              .fitted;
    }
  }
  fn.values = case_control_q(p, frame_.n_rows(), n_cases);
  return fn;
}

const StabiliserFn& EstimatorPipeline::q_z() {
  if (!q_z_) {
    q_z_ = make_stabiliser(options_.z_conditioning.value_or(phase1_regressors(spec_, frame_)));
  }
  return *q_z_;
}

const StabiliserFn& EstimatorPipeline::q_xz() {
  if (!q_xz_) q_xz_ = make_stabiliser(options_.xz_conditioning.value_or(spec_.regressors));
  return *q_xz_;
}

const StabiliserFn& EstimatorPipeline::q_rake() {
  if (!q_rake_) {
    if (!options_.rake_conditioning) {
      q_rake_ = q_z();
    } else {
      for (const auto& c : *options_.rake_conditioning) {
        if (frame_.has_column(c) && !frame_.is_phase1(c)) {
          throw UnsupportedCombinationError(
              "stabilised raking needs q on every phase-1 row, but '" + c +
              "' is only observed at phase 2");
        }
      }
      q_rake_ = make_stabiliser(*options_.rake_conditioning);
    }
    if (!q_rake_->all_rows) {
      throw UnsupportedCombinationError("stabilised raking needs q on every phase-1 row");
    }
  }
  return *q_rake_;
}

EstimateReport EstimatorPipeline::finish(EstimatorKind kind, WeightSet weights) {
  EstimateReport rep;
  rep.estimator = kind;
  rep.coefficient_names = spec_.coefficient_names();
  const GlmFit fit =
      fit_weighted_glm(frame_, spec_, weights.composite(), weights.rows, options_.glm);
  rep.beta = fit.beta;
  rep.vcov = two_phase_variance(fit, design_, weights);
  rep.se = rep.vcov.diagonal().cwiseMax(0.0).cwiseSqrt();
  rep.diagnostics.glm_iterations = fit.iterations;
  rep.diagnostics.constraint_residual = weights.calibration_residual;
  rep.diagnostics.calibration_iterations = weights.calibration_iterations;
  if (weights.negative_raking) rep.diagnostics.notes.push_back("negative raking factors (GREG)");
  rep.weight_set = std::move(weights);
  return rep;
}

EstimateReport EstimatorPipeline::run(EstimatorKind kind) {
  const auto& rows = design_.included_rows();
  switch (kind) {
    case EstimatorKind::ipw:
      return finish(kind, design_weight_set(rows, design_.included_weights()));

    case EstimatorKind::gr: {
      const Eigen::VectorXd ones = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(design_.n_rows()));
      return finish(kind, stabilised_rake(design_, raking_auxiliaries(), ones, options_.distance,
                                          options_.calibration));
    }

    case EstimatorKind::stab_z:
    case EstimatorKind::stab_xz: {
      const StabiliserFn& q = kind == EstimatorKind::stab_z ? q_z() : q_xz();
      WeightSet w = design_weight_set(rows, design_.included_weights());
      w.stabiliser = options_.q_scale * q.on_included(design_);
      EstimateReport rep = finish(kind, std::move(w));
      rep.diagnostics.clip_count = q.clip_count;
      rep.diagnostics.stabiliser_rows = q.values.size();
      if (!q.all_rows) {
        rep.diagnostics.notes.push_back(
            "q depends on phase-2 variables; variance treats it as fixed");
      }
      return rep;
    }

    case EstimatorKind::stab_rake: {
      Eigen::VectorXd q;
      std::size_t clips = 0;
      if (options_.force_unit_q) {
        q = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(design_.n_rows()));
      } else {
        const StabiliserFn& fn = q_rake();
        q = fn.values;
        clips = fn.clip_count;
      }
      if (options_.q_scale != 1.0) q *= options_.q_scale;
      EstimateReport rep = finish(kind, stabilised_rake(design_, raking_auxiliaries(), q,
                                                        options_.distance, options_.calibration));
      rep.diagnostics.clip_count = clips;
      rep.diagnostics.stabiliser_rows = static_cast<std::size_t>(q.size());
      return rep;
    }

    case EstimatorKind::mle_cc: {
      if (spec_.family != Family::binomial_logit) {
        throw UnsupportedCombinationError("mle_cc needs a binomial-logit model");
      }
      const Column& y = frame_.outcome();
      double cases = 0, cases_in = 0, controls = 0, controls_in = 0;
      for (std::size_t i = 0; i < frame_.n_rows(); ++i) {
        const bool in = design_.included(i);
        if (y.at(i) == 1.0) {
          cases += 1;
          cases_in += in ? 1 : 0;
        } else {
          controls += 1;
          controls_in += in ? 1 : 0;
        }
      }
      if (cases_in == 0 || controls_in == 0) {
        throw DegenerateError("case-control MLE needs sampled cases and controls");
      }
      const GlmFit fit = mle_case_control(frame_, spec_, rows,
                                          SamplingFractions{cases_in / cases, controls_in / controls},
                                          options_.glm);
      EstimateReport rep;
      rep.estimator = kind;
      rep.coefficient_names = spec_.coefficient_names();
      rep.beta = fit.beta;
      rep.vcov = model_based_vcov(fit);
      rep.se = rep.vcov.diagonal().cwiseMax(0.0).cwiseSqrt();
      rep.weight_set = design_weight_set(rows, Eigen::VectorXd::Ones(static_cast<Eigen::Index>(rows.size())));
      rep.diagnostics.glm_iterations = fit.iterations;
      rep.diagnostics.notes.push_back("model-based variance");
      return rep;
    }
  }
  throw DomainError("unknown estimator");
}

EstimateReport estimate(EstimatorKind kind, const PopulationFrame& frame,
                        const TwoPhaseDesign& design, const ModelSpec& spec,
                        const EstimatorOptions& options) {
  EstimatorPipeline pipeline(frame, design, spec, options);
  return pipeline.run(kind);
}

}  // namespace twophase
