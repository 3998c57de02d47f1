#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "test_support.hpp"
#include "twophase/errors.hpp"
#include "twophase/glm.hpp"
#include "twophase/simlab.hpp"
#include "twophase/stabiliser.hpp"

using namespace twophase;
using twophase::testing::make_frame;
using twophase::testing::NamedColumn;

namespace {

struct Sampled {
  PopulationFrame frame;
  TwoPhaseDesign design;
  GlmFit fit;
};

// IPW fit of Y on Z over the included rows.
Sampled fit_on(std::vector<double> y, std::vector<NamedColumn> phase1, std::vector<int> strata,
               std::vector<bool> included) {
  PopulationFrame frame = make_frame(std::move(y), std::move(phase1));
  TwoPhaseDesign design(std::move(strata), std::move(included));
  const ModelSpec spec{Family::gaussian_identity, "Y", {"Z"}, std::nullopt};
  GlmFit fit = fit_weighted_glm(frame, spec, design.included_weights(), design.included_rows());
  return {std::move(frame), std::move(design), std::move(fit)};
}

double median(std::vector<double> v) {
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2), v.end());
  return v[v.size() / 2];
}

}  // namespace

// ---------------------------------------------------------------------------
// case_control_q
// ---------------------------------------------------------------------------

TEST_CASE("case-control stabiliser closed form") {
  const Eigen::VectorXd p = (Eigen::VectorXd(4) << 0.0, 0.5, 0.9, 1.0).finished();
  const Eigen::VectorXd q = case_control_q(p, 10000, 500);
  CHECK(q(0) == 1.0);
  CHECK(q(1) == doctest::Approx(1.0 / (0.5 + 19.0 * 0.5)).epsilon(1e-14));
  CHECK(q(1) == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(q(3) == doctest::Approx(1.0 / 19.0));
  const Eigen::VectorXd sym = case_control_q(p, 1000, 500);
  CHECK((sym.array() - 1.0).abs().maxCoeff() < 1e-15);
  CHECK_THROWS_AS(case_control_q(p, 100, 0), DegenerateError);
  CHECK_THROWS_AS(case_control_q(p, 100, 100), DegenerateError);
  CHECK_THROWS_AS(case_control_q(Eigen::VectorXd::Constant(1, 1.5), 100, 10), DomainError);
}

// ---------------------------------------------------------------------------
// estimate_q_smoothed
// ---------------------------------------------------------------------------

TEST_CASE("constant design weights give a unit stabiliser") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> nd;
  const std::size_t big_n = 400;
  std::vector<double> y(big_n), z(big_n);
  std::vector<bool> inc(big_n);
  for (std::size_t i = 0; i < big_n; ++i) {
    z[i] = nd(rng);
    y[i] = 1.0 + z[i] + (0.5 + std::abs(z[i])) * nd(rng);
    inc[i] = i % 4 == 0;
  }
  const auto s = fit_on(y, {{"Z", z}}, std::vector<int>(big_n, 0), inc);
  const auto q = estimate_q_smoothed(s.fit, s.frame, s.design, {"Z"});
  CHECK(q.all_rows);
  CHECK(q.values.size() == static_cast<Eigen::Index>(big_n));
  CHECK((q.values.array() - 1.0).abs().maxCoeff() < 1e-10);
  CHECK(q.clip_count == 0);
  const auto q0 = estimate_q_smoothed(s.fit, s.frame, s.design, {});
  CHECK((q0.values.array() - 1.0).abs().maxCoeff() < 1e-12);
}

TEST_CASE("two strata with weights 2 and 4 give a 2:1 stabiliser") {
  // 10,000 sampled units per stratum; E(e^2) = 1 in both, so the exact
  // stratum means are (1, 2) and (1, 4) for (e^2, d e^2).
  std::mt19937_64 rng(20240601);
  std::normal_distribution<double> nd;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const std::size_t n0 = 20000, n1 = 40000;
  std::vector<double> y, z, s;
  std::vector<int> strata;
  std::vector<bool> inc;
  for (std::size_t i = 0; i < n0 + n1; ++i) {
    const bool second = i >= n0;
    const double zi = second ? 2.0 + u(rng) : u(rng);
    z.push_back(zi);
    s.push_back(second ? 1.0 : 0.0);
    y.push_back(1.0 + zi + nd(rng));
    strata.push_back(second ? 1 : 0);
    inc.push_back(second ? (i - n0) % 4 == 0 : i % 2 == 0);
  }
  const auto fitted = fit_on(y, {{"Z", z}, {"S", s}}, strata, inc);

  // Discrete conditioning: exact group means.
  const auto q_s = estimate_q_smoothed(fitted.fit, fitted.frame, fitted.design, {"S"});
  CHECK(q_s.values(0) / q_s.values(static_cast<Eigen::Index>(n0)) == doctest::Approx(2.0).epsilon(1e-10));

  // Continuous conditioning: kernel smooth within 5%.
  const auto q_z = estimate_q_smoothed(fitted.fit, fitted.frame, fitted.design, {"Z"});
  std::vector<double> first(q_z.values.data(), q_z.values.data() + n0);
  std::vector<double> second(q_z.values.data() + n0, q_z.values.data() + n0 + n1);
  CHECK(median(first) / median(second) == doctest::Approx(2.0).epsilon(0.05));
  CHECK((q_z.values.array() > 0.0).all());
  CHECK(q_z.clip_count == 0);
}

TEST_CASE("stabiliser error conditions") {
  // Twelve distinct values, so Z is smoothed as a continuous column.
  std::vector<double> z(12), exact(12);
  std::vector<bool> inc(12);
  for (std::size_t i = 0; i < 12; ++i) {
    z[i] = 0.7 * static_cast<double>(i);
    exact[i] = 1.0 + 2.0 * z[i];
    inc[i] = i % 3 != 2;
  }
  const auto perfect = fit_on(exact, {{"Z", z}, {"C", std::vector<double>(12, 1.0)}},
                              std::vector<int>(12, 0), inc);
  CHECK_THROWS_AS(estimate_q_smoothed(perfect.fit, perfect.frame, perfect.design, {"Z"}), DegenerateError);

  std::vector<double> noisy = exact;
  noisy[1] += 0.5;
  noisy[4] -= 0.3;
  const auto ok = fit_on(noisy, {{"Z", z}, {"C", std::vector<double>(12, 1.0)}},
                         std::vector<int>(12, 0), inc);
  CHECK_THROWS_AS(estimate_q_smoothed(ok.fit, ok.frame, ok.design, {"C"}), DegenerateError);
  CHECK_NOTHROW(estimate_q_smoothed(ok.fit, ok.frame, ok.design, {"Z"}));
}

TEST_CASE("phase-2 conditioning is evaluated on the included rows only") {
  const auto cfg = default_config(ScenarioId::tp_homoscedastic);
  const auto frame = generate_population(cfg, 0);
  const auto design = draw_phase2(frame, cfg, 0);
  EstimatorPipeline pipe(frame, design, scenario_model(cfg), cfg.estimator_options);
  const auto& qxz = pipe.q_xz();
  CHECK_FALSE(qxz.all_rows);
  CHECK(qxz.rows == design.included_rows());
  const Eigen::VectorXd d = design.included_weights();
  CHECK(d.dot(qxz.values) / d.sum() == doctest::Approx(1.0).epsilon(1e-12));
  const auto& qz = pipe.q_z();
  CHECK(qz.all_rows);
  CHECK(qz.values.mean() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("a weighted fit is invariant to the scale of q") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> nd;
  std::vector<double> y(300), z(300);
  for (std::size_t i = 0; i < 300; ++i) {
    z[i] = nd(rng);
    y[i] = z[i] + nd(rng) * (1.0 + z[i] * z[i]);
  }
  const auto frame = make_frame(y, {{"Z", z}});
  const auto rows = all_rows(300);
  const ModelSpec spec{Family::gaussian_identity, "Y", {"Z"}, std::nullopt};
  Eigen::VectorXd w(300);
  for (Eigen::Index i = 0; i < 300; ++i) w(i) = 0.2 + std::abs(nd(rng));
  const auto base = fit_weighted_glm(frame, spec, w, rows);
  for (double c : {1e-3, 0.37, 12.0, 4e4}) {
    const auto scaled = fit_weighted_glm(frame, spec, c * w, rows);
    CHECK(twophase::testing::max_abs_diff(scaled.beta, base.beta) < 1e-10);
  }
}

TEST_CASE("model-variance stabiliser tracks the inverse residual variance") {
  // Binary Z, constant design weights: the empirical form gives q = 1 while
  // the model form gives q proportional to 1 / Var(e | Z), ratio 4 here.
  std::mt19937_64 rng(17);
  std::normal_distribution<double> nd;
  const std::size_t big_n = 80000;
  std::vector<double> y(big_n), z(big_n);
  std::vector<bool> inc(big_n);
  for (std::size_t i = 0; i < big_n; ++i) {
    z[i] = static_cast<double>(i % 2);
    y[i] = 1.0 + z[i] + (z[i] > 0.5 ? 2.0 : 1.0) * nd(rng);
    inc[i] = (i / 2) % 2 == 0;
  }
  const auto s = fit_on(y, {{"Z", z}}, std::vector<int>(big_n, 0), inc);
  const auto emp = estimate_q_smoothed(s.fit, s.frame, s.design, {"Z"}, {}, QVariance::empirical);
  CHECK((emp.values.array() - 1.0).abs().maxCoeff() < 1e-10);
  const auto model = estimate_q_smoothed(s.fit, s.frame, s.design, {"Z"}, {}, QVariance::model);
  CHECK(model.values(0) / model.values(1) == doctest::Approx(4.0).epsilon(0.10));
  CHECK((model.values.array() > 0.0).all());
}

TEST_CASE("denominator clipping is rare in every two-phase scenario") {
  // Fraction of clipped units aggregated over replicates of each scenario.
  for (ScenarioId id : {ScenarioId::tp_homoscedastic, ScenarioId::tp_heteroscedastic, ScenarioId::tp_binary,
                        ScenarioId::tp_AZ_balanced, ScenarioId::tp_AZ_optimal, ScenarioId::tp_Z_optimal,
                        ScenarioId::cc_confounded}) {
    const std::string scenario = to_string(id);
    CAPTURE(scenario);
    const auto cfg = default_config(id);
    std::size_t clipped = 0, units = 0;
    for (std::size_t r = 0; r < 10; ++r) {
      const auto full = generate_population(cfg, r);
      const auto design = draw_phase2(full, cfg, r);
      const auto frame = mask_unsampled(full, design);
      EstimatorPipeline pipe(frame, design, scenario_model(cfg), cfg.estimator_options);
      for (const StabiliserFn* q : {&pipe.q_z(), &pipe.q_xz(), &pipe.q_rake()}) {
        clipped += q->clip_count;
        units += static_cast<std::size_t>(q->values.size());
        CHECK((q->values.array() > 0.0).all());
        CHECK(q->values.allFinite());
      }
    }
    CHECK(static_cast<double>(clipped) < 0.01 * static_cast<double>(units));
  }
}
