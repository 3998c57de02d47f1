#include <doctest.h>

#include <cmath>
#include <random>
#include <thread>

#include "oracles.hpp"
#include "twophase/errors.hpp"
#include "twophase/estimators.hpp"
#include "twophase/simlab.hpp"

using namespace twophase;
using namespace twophase::testing;

namespace {

const std::vector<EstimatorKind> kDesignBased{EstimatorKind::ipw, EstimatorKind::gr, EstimatorKind::stab_z,
                                              EstimatorKind::stab_xz, EstimatorKind::stab_rake};

}  // namespace

// ---------------------------------------------------------------------------
// Census and q-scale properties
// ---------------------------------------------------------------------------

TEST_CASE("on a census every design-based estimator equals the unweighted fit") {
  for (bool binary : {false, true}) {
    CAPTURE(binary);
    std::mt19937_64 rng(binary ? 11 : 10);
    const auto frame = small_population(300, rng, binary);
    std::vector<int> strata(300);
    for (std::size_t i = 0; i < 300; ++i) strata[i] = frame.column("Z").at(i) > 0.0 ? 1 : 0;
    const TwoPhaseDesign census(strata, std::vector<bool>(300, true));
    const ModelSpec spec{binary ? Family::binomial_logit : Family::gaussian_identity, "Y", {"X", "Z"},
                         std::nullopt};
    const auto full = fit_weighted_glm(frame, spec, Eigen::VectorXd::Ones(300), all_rows(300));
    const Eigen::MatrixXd sandwich = iid_sandwich(full);
    EstimatorPipeline pipe(frame, census, spec);
    for (EstimatorKind k : kDesignBased) {
      CAPTURE(to_string(k));
      const auto rep = pipe.run(k);
      CHECK(max_abs_diff(rep.beta, full.beta) < 1e-8);
      CHECK(max_rel_diff(rep.vcov, sandwich) < 1e-8);
    }
  }
}

TEST_CASE("scaling q leaves coefficients and standard errors unchanged") {
  const auto cfg = default_config(ScenarioId::tp_homoscedastic);
  const auto full = generate_population(cfg, 3);
  const auto design = draw_phase2(full, cfg, 3);
  const auto frame = mask_unsampled(full, design);
  const auto spec = scenario_model(cfg);
  EstimatorOptions scaled = cfg.estimator_options;
  scaled.q_scale = 3.0;
  EstimatorPipeline a(frame, design, spec, cfg.estimator_options);
  EstimatorPipeline b(frame, design, spec, scaled);
  for (EstimatorKind k : {EstimatorKind::stab_z, EstimatorKind::stab_xz, EstimatorKind::stab_rake}) {
    CAPTURE(to_string(k));
    const auto ra = a.run(k);
    const auto rb = b.run(k);
    CHECK(max_abs_diff(ra.beta, rb.beta) < 1e-8);
    CHECK(max_abs_diff(ra.se, rb.se) < 1e-8);
  }
}

TEST_CASE("stabilised raking with unit q reproduces generalised raking") {
  const auto cfg = default_config(ScenarioId::tp_homoscedastic);
  const auto full = generate_population(cfg, 1);
  const auto design = draw_phase2(full, cfg, 1);
  const auto frame = mask_unsampled(full, design);
  EstimatorOptions unit = cfg.estimator_options;
  unit.force_unit_q = true;
  const auto gr = estimate(EstimatorKind::gr, frame, design, scenario_model(cfg), cfg.estimator_options);
  const auto sr = estimate(EstimatorKind::stab_rake, frame, design, scenario_model(cfg), unit);
  for (Eigen::Index c = 0; c < gr.beta.size(); ++c) {
    CHECK(gr.beta(c) == sr.beta(c));
    CHECK(gr.se(c) == sr.se(c));
  }
}

TEST_CASE("stabilised raking refuses a stabiliser that needs phase-2 data") {
  const auto cfg = default_config(ScenarioId::tp_homoscedastic);
  const auto full = generate_population(cfg, 0);
  const auto design = draw_phase2(full, cfg, 0);
  const auto frame = mask_unsampled(full, design);
  EstimatorOptions opts = cfg.estimator_options;
  opts.rake_conditioning = std::vector<std::string>{"X", "Z"};
  CHECK_THROWS_AS(estimate(EstimatorKind::stab_rake, frame, design, scenario_model(cfg), opts),
                  UnsupportedCombinationError);
  const ModelSpec gaussian = scenario_model(cfg);
  EstimatorOptions closed = cfg.estimator_options;
  closed.q_method = QMethod::closed_form_cc;
  CHECK_THROWS_AS(estimate(EstimatorKind::stab_z, frame, design, gaussian, closed), UnsupportedCombinationError);
  CHECK_THROWS_AS(estimate(EstimatorKind::mle_cc, frame, design, gaussian), UnsupportedCombinationError);
  CHECK(parse_estimator("Stab-rake") == EstimatorKind::stab_rake);
  CHECK(parse_estimator_list("ipw,GR").size() == 2);
  CHECK_THROWS_AS(parse_estimator("lasso"), DomainError);
}

// ---------------------------------------------------------------------------
// Plug-in auxiliaries
// ---------------------------------------------------------------------------

TEST_CASE("plug-in auxiliaries without phase-2 regressors are the full-data influence functions") {
  std::mt19937_64 rng(31);
  const auto frame = small_population(200, rng);
  std::vector<bool> inc(200);
  for (std::size_t i = 0; i < 200; ++i) inc[i] = i % 3 == 0;
  const TwoPhaseDesign design(std::vector<int>(200, 0), inc);
  const ModelSpec z_only{Family::gaussian_identity, "Y", {"Z"}, std::nullopt};
  const Eigen::MatrixXd g = build_plugin_auxiliaries(frame, design, z_only, {"A", "Z"});
  CHECK(g.rows() == 200);
  CHECK(g.cols() == 2);
  // Oracle: N (X'X)^{-1} x_i e_i from ordinary least squares.
  Eigen::MatrixXd x(200, 2);
  Eigen::VectorXd y(200);
  for (std::size_t i = 0; i < 200; ++i) {
    x(static_cast<Eigen::Index>(i), 0) = 1.0;
    x(static_cast<Eigen::Index>(i), 1) = frame.column("Z").at(i);
    y(static_cast<Eigen::Index>(i)) = frame.outcome().at(i);
  }
  const Eigen::MatrixXd xtx = x.transpose() * x;
  const Eigen::VectorXd b = xtx.ldlt().solve(x.transpose() * y);
  const Eigen::VectorXd e = y - x * b;
  const Eigen::MatrixXd h = 200.0 * (x.array().colwise() * e.array()).matrix() * xtx.inverse();
  CHECK(max_rel_diff(g, h) < 1e-10);

  const ModelSpec full_spec{Family::gaussian_identity, "Y", {"X", "Z"}, std::nullopt};
  CHECK(build_plugin_auxiliaries(frame, design, full_spec, {"A", "Z"}).cols() == 3);
  CHECK_THROWS_AS(build_plugin_auxiliaries(frame, design, full_spec, {"X"}), DomainError);
}

TEST_CASE("plug-in influence functions track the true ones") {
  const auto cfg = default_config(ScenarioId::tp_homoscedastic);
  const auto full = generate_population(cfg, 0);
  const auto design = draw_phase2(full, cfg, 0);
  const auto spec = scenario_model(cfg);
  const auto oracle_fit =
      fit_weighted_glm(full, spec, Eigen::VectorXd::Ones(static_cast<Eigen::Index>(full.n_rows())),
                       all_rows(full.n_rows()));
  const Eigen::MatrixXd truth = influence_functions(oracle_fit);
  const Eigen::MatrixXd plug =
      build_plugin_auxiliaries(mask_unsampled(full, design), design, spec, {"A", "Z"});
  const auto names = spec.coefficient_names();
  const auto col = static_cast<Eigen::Index>(std::find(names.begin(), names.end(), "X") - names.begin());
  const Eigen::ArrayXd a = truth.col(col).array() - truth.col(col).mean();
  const Eigen::ArrayXd b = plug.col(col).array() - plug.col(col).mean();
  const double corr = (a * b).sum() / std::sqrt(a.square().sum() * b.square().sum());
  CHECK(corr > 0.5);
}

// ---------------------------------------------------------------------------
// two_phase_variance
// ---------------------------------------------------------------------------

TEST_CASE("variance on a census is the iid sandwich") {
  std::mt19937_64 rng(2);
  const auto frame = small_population(50, rng);
  const TwoPhaseDesign census(std::vector<int>(50, 0), std::vector<bool>(50, true));
  const ModelSpec spec{Family::gaussian_identity, "Y", {"X", "Z"}, std::nullopt};
  const auto fit = fit_weighted_glm(frame, spec, Eigen::VectorXd::Ones(50), all_rows(50));
  const auto w = design_weight_set(all_rows(50), Eigen::VectorXd::Ones(50));
  CHECK(max_rel_diff(two_phase_variance(fit, census, w), iid_sandwich(fit)) < 1e-12);
}

TEST_CASE("variance is zero when every residual is zero") {
  const std::vector<double> z{0.1, 0.5, 0.9, 1.4, 2.0, 2.2};
  std::vector<double> y(6);
  for (std::size_t i = 0; i < 6; ++i) y[i] = 3.0 - z[i];
  const auto frame = make_frame(y, {{"Z", z}});
  const TwoPhaseDesign design({0, 0, 0, 1, 1, 1}, {true, true, false, true, false, true});
  const ModelSpec spec{Family::gaussian_identity, "Y", {"Z"}, std::nullopt};
  const auto fit = fit_weighted_glm(frame, spec, design.included_weights(), design.included_rows());
  const auto v = two_phase_variance(fit, design, design_weight_set(design.included_rows(), design.included_weights()));
  CHECK(v.cwiseAbs().maxCoeff() < 1e-24);
}

TEST_CASE("five-unit two-stratum toy matches the nested-loop oracle") {
  const std::vector<double> z{0.3, -1.2, 0.8, 2.1, -0.4};
  const std::vector<double> y{1.1, -0.6, 0.2, 2.9, 0.5};
  const auto frame = make_frame(y, {{"Z", z}});
  // Stratum 0 = {0, 1, 2} with two sampled, stratum 1 = {3, 4} with both.
  const TwoPhaseDesign design({0, 0, 0, 1, 1}, {true, false, true, true, true});
  const ModelSpec spec{Family::gaussian_identity, "Y", {"Z"}, std::nullopt};
  WeightSet w = design_weight_set(design.included_rows(), design.included_weights());
  w.stabiliser = (Eigen::VectorXd(4) << 0.8, 1.3, 0.9, 1.1).finished();
  const auto fit = fit_weighted_glm(frame, spec, w.composite(), w.rows);
  const auto v = two_phase_variance(fit, design, w);
  CHECK(max_rel_diff(v, nested_loop_variance(fit, design, w)) < 1e-12);
}

TEST_CASE("variance matches the nested-loop oracle on 50 randomised small designs") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> size(6, 12);
  std::uniform_real_distribution<double> u(0.5, 1.5);
  std::normal_distribution<double> nd;
  int raked = 0;
  for (int trial = 0; trial < 50; ++trial) {
    CAPTURE(trial);
    const auto big_n = static_cast<std::size_t>(size(rng));
    const bool binary = trial % 5 == 4;
    const auto frame = small_population(big_n, rng, binary);
    std::vector<int> strata(big_n);
    for (std::size_t i = 0; i < big_n; ++i) strata[i] = static_cast<int>(i % 3 == 0 ? 0 : (i % 3 == 1 ? 1 : 2));
    std::vector<bool> inc(big_n, false);
    // At least one unit per stratum, sometimes a single one.
    for (std::size_t i = 0; i < big_n; ++i) inc[i] = i < 3 || u(rng) > 1.0;
    const TwoPhaseDesign design(strata, inc);
    const auto nk = static_cast<Eigen::Index>(design.n_included());
    WeightSet w = design_weight_set(design.included_rows(), design.included_weights());
    for (Eigen::Index k = 0; k < nk; ++k) w.stabiliser(k) = u(rng);
    if (trial % 2 == 0 && nk >= 4) {
      ++raked;
      for (Eigen::Index k = 0; k < nk; ++k) w.raking(k) = u(rng);
      w.calibration_aux.resize(nk, 2);
      for (Eigen::Index k = 0; k < nk; ++k) {
        w.calibration_aux(k, 0) = 1.0;
        w.calibration_aux(k, 1) = nd(rng);
      }
    }
    const ModelSpec spec{binary ? Family::binomial_logit : Family::gaussian_identity, "Y", {"Z"},
                         std::nullopt};
    GlmFit fit;
    try {
      fit = fit_weighted_glm(frame, spec, w.composite(), w.rows);
    } catch (const SeparationError&) {
      continue;  // tiny binary samples can be separated
    }
    CHECK(max_rel_diff(two_phase_variance(fit, design, w), nested_loop_variance(fit, design, w)) < 1e-12);
  }
  CHECK(raked >= 20);
}

// ---------------------------------------------------------------------------
// Monte Carlo properties
// ---------------------------------------------------------------------------

TEST_CASE("standard errors are calibrated and raking does not lose efficiency") {
  ScenarioConfig cfg = default_config(ScenarioId::tp_homoscedastic);
  cfg.sigma2 = 1.0;
  cfg.replicates = 1000;
  RunOptions run;
  run.parallel = std::max(1u, std::thread::hardware_concurrency());
  const auto summary = run_scenario(cfg, run);
  REQUIRE_FALSE(summary.failed);
  for (const auto& cell : summary.cells) {
    CAPTURE(cell.estimator);
    CAPTURE(cell.coefficient);
    REQUIRE(cell.emp_se);
    REQUIRE(cell.mean_se);
    const double ratio = *cell.mean_se / *cell.emp_se;
    CHECK(ratio >= 0.9);
    CHECK(ratio <= 1.1);
  }
  for (const std::string coef : {"(Intercept)", "X", "Z"}) {
    CAPTURE(coef);
    CHECK(summary.emp_se("GR", coef) <= 1.02 * summary.emp_se("IPW", coef));
  }
}
