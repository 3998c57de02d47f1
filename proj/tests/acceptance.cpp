// Acceptance runner: reproduces the published simulation tables and the
// property suite, printing one PASS/FAIL line per check. Exits non-zero when
// any check fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "oracles.hpp"
#include "twophase/errors.hpp"
#include "twophase/replication.hpp"
#include "twophase/simlab.hpp"

using namespace twophase;
using namespace twophase::testing;

namespace {

constexpr std::size_t kReplicates = 1000;
constexpr std::uint64_t kSeed = 20240601;

struct Tally {
  int passed = 0;
  int failed = 0;
};

std::string number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, std::abs(v) < 1e-3 && v != 0.0 ? "%.3g" : "%.4f", v);
  return buf;
}

void report(Tally& tally, const std::string& criterion, const ToleranceCheck& c) {
  (c.pass ? tally.passed : tally.failed)++;
  std::cout << (c.pass ? "PASS  " : "FAIL  ") << '[' << criterion << "] " << c.name << " = " << number(c.value)
            << "  (" << c.rule << ")\n"
            << std::flush;
}

ToleranceCheck below_bound(const std::string& name, double worst, double bound) {
  std::ostringstream rule;
  rule << "< " << bound;
  return {name, worst, rule.str(), worst < bound};
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

unsigned workers() { return std::max(1u, std::thread::hardware_concurrency()); }

// Runs every check point of a table once and caches the summaries.
class TableRun {
 public:
  explicit TableRun(std::string table) : table_(std::move(table)) {
    RunOptions run;
    run.parallel = workers();
    for (const auto& p : check_points(table_)) {
      points_.push_back(p);
      summaries_.push_back(run_scenario(grid_config(p, kReplicates, kSeed), run));
    }
  }

  const SimulationSummary& operator()(const GridPoint& p) const {
    for (std::size_t k = 0; k < points_.size(); ++k) {
      if (points_[k] == p) return summaries_[k];
    }
    throw DomainError("grid point was not run");
  }

  std::vector<ToleranceCheck> checks() const {
    return table_checks(table_, [this](const GridPoint& p) -> const SimulationSummary& { return (*this)(p); });
  }

  std::vector<ToleranceCheck> bias_checks() const {
    std::vector<ToleranceCheck> out;
    for (std::size_t k = 0; k < points_.size(); ++k) {
      std::ostringstream label;
      label << "table " << table_;
      for (const auto& [name, v] : grid_parameters(table_, points_[k])) label << ", " << name << '=' << v;
      out.push_back(bias_check(label.str(), summaries_[k]));
    }
    return out;
  }

  std::vector<ToleranceCheck> failure_checks() const {
    std::vector<ToleranceCheck> out;
    for (const auto& s : summaries_) {
      if (s.failed) out.push_back({"table " + table_ + ": estimator failure rate", 1.0, "<= 1% of replicates", false});
    }
    return out;
  }

 private:
  std::string table_;
  std::vector<GridPoint> points_;
  std::vector<SimulationSummary> summaries_;
};

// ---------------------------------------------------------------------------
// Property suite
// ---------------------------------------------------------------------------

double calibration_residual() {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> pick_n(15, 40), pick_k(1, 3);
  std::uniform_real_distribution<double> u(0.7, 1.4);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    Toy t = make_toy(pick_n(rng) * 2, pick_k(rng), rng);
    Eigen::VectorXd q(t.aux.rows());
    for (Eigen::Index i = 0; i < q.size(); ++i) q(i) = u(rng);
    for (Distance dist : {Distance::linear, Distance::exponential}) {
      const auto p = make_calibration_problem(t.aux, t.included, t.d, q, dist);
      const auto res = solve_calibration(p);
      const double scale = std::max(1.0, p.target.cwiseAbs().maxCoeff());
      worst = std::max(worst, (calibrated_totals(p, res.g_factors) - p.target).cwiseAbs().maxCoeff() / scale);
    }
  }
  return worst;
}

double variance_oracle_gap() {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> size(6, 12);
  std::uniform_real_distribution<double> u(0.5, 1.5);
  std::normal_distribution<double> nd;
  double worst = 0.0;
  int compared = 0;
  while (compared < 50) {
    const auto big_n = static_cast<std::size_t>(size(rng));
    const bool binary = compared % 5 == 4;
    const auto frame = small_population(big_n, rng, binary);
    std::vector<int> strata(big_n);
    for (std::size_t i = 0; i < big_n; ++i) strata[i] = static_cast<int>(i % 3);
    std::vector<bool> inc(big_n, false);
    for (std::size_t i = 0; i < big_n; ++i) inc[i] = i < 3 || u(rng) > 1.0;
    const TwoPhaseDesign design(strata, inc);
    const auto nk = static_cast<Eigen::Index>(design.n_included());
    WeightSet w = design_weight_set(design.included_rows(), design.included_weights());
    for (Eigen::Index k = 0; k < nk; ++k) w.stabiliser(k) = u(rng);
    if (compared % 2 == 0 && nk >= 4) {
      for (Eigen::Index k = 0; k < nk; ++k) w.raking(k) = u(rng);
      w.calibration_aux.resize(nk, 2);
      for (Eigen::Index k = 0; k < nk; ++k) {
        w.calibration_aux(k, 0) = 1.0;
        w.calibration_aux(k, 1) = nd(rng);
      }
    }
    const ModelSpec spec{binary ? Family::binomial_logit : Family::gaussian_identity, "Y", {"Z"}, std::nullopt};
    GlmFit fit;
    try {
      fit = fit_weighted_glm(frame, spec, w.composite(), w.rows);
    } catch (const SeparationError&) {
      continue;  // tiny binary samples can be separated; draw another
    }
    worst = std::max(worst, max_rel_diff(two_phase_variance(fit, design, w), nested_loop_variance(fit, design, w)));
    ++compared;
  }
  return worst;
}

double census_gap() {
  double worst = 0.0;
  for (bool binary : {false, true}) {
    std::mt19937_64 rng(binary ? 11 : 10);
    const auto frame = small_population(300, rng, binary);
    std::vector<int> strata(300);
    for (std::size_t i = 0; i < 300; ++i) strata[i] = frame.column("Z").at(i) > 0.0 ? 1 : 0;
    const TwoPhaseDesign census(strata, std::vector<bool>(300, true));
    const ModelSpec spec{binary ? Family::binomial_logit : Family::gaussian_identity, "Y", {"X", "Z"},
                         std::nullopt};
    const auto full = fit_weighted_glm(frame, spec, Eigen::VectorXd::Ones(300), all_rows(300));
    EstimatorPipeline pipe(frame, census, spec);
    for (EstimatorKind k : {EstimatorKind::ipw, EstimatorKind::gr, EstimatorKind::stab_z, EstimatorKind::stab_xz,
                            EstimatorKind::stab_rake}) {
      worst = std::max(worst, max_abs_diff(pipe.run(k).beta, full.beta));
    }
  }
  return worst;
}

double q_homogeneity_gap() {
  const auto cfg = default_config(ScenarioId::tp_homoscedastic);
  const auto full = generate_population(cfg, 3);
  const auto design = draw_phase2(full, cfg, 3);
  const auto frame = mask_unsampled(full, design);
  const auto spec = scenario_model(cfg);
  EstimatorPipeline base(frame, design, spec, cfg.estimator_options);
  double worst = 0.0;
  for (double c : {1e-3, 0.37, 3.0, 250.0}) {
    EstimatorOptions scaled = cfg.estimator_options;
    scaled.q_scale = c;
    EstimatorPipeline other(frame, design, spec, scaled);
    for (EstimatorKind k : {EstimatorKind::stab_z, EstimatorKind::stab_xz, EstimatorKind::stab_rake}) {
      const auto a = base.run(k);
      const auto b = other.run(k);
      worst = std::max({worst, max_abs_diff(a.beta, b.beta), max_abs_diff(a.se, b.se)});
    }
  }
  return worst;
}

double glm_oracle_gap() {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> nd;
  std::uniform_int_distribution<int> pick_n(6, 20), pick_p(1, 2);
  std::uniform_real_distribution<double> uw(0.2, 3.0);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = pick_n(rng);
    const int k = pick_p(rng);
    Eigen::MatrixXd raw(n, k);
    Eigen::VectorXd y(n), w(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < k; ++j) raw(i, j) = nd(rng);
      y(i) = 1.0 + raw.row(i).sum() + nd(rng);
      w(i) = uw(rng);
    }
    const Eigen::MatrixXd x = with_intercept(raw);
    const auto fit = fit_glm_matrix(x, y, w, Eigen::VectorXd::Zero(n), Family::gaussian_identity, names(x.cols()));
    const auto oracle = normal_equations(x, y, w);
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      const double ref = oracle[static_cast<std::size_t>(j)];
      worst = std::max(worst, std::abs(fit.beta(j) - ref) / std::max(1.0, std::abs(ref)));
    }
  }
  return worst;
}

}  // namespace

int main() {
  Tally tally;
  std::cout << "Acceptance run: " << kReplicates << " replicates per setting, seed " << kSeed << ", " << workers()
            << " worker(s)\n\n";

  std::map<std::string, TableRun> tables;
  for (const std::string table : {"1", "2", "3"}) {
    const auto start = std::chrono::steady_clock::now();
    const auto& run = tables.emplace(table, TableRun(table)).first->second;
    for (const auto& c : run.failure_checks()) report(tally, table, c);
    for (const auto& c : run.checks()) report(tally, table, c);
    std::cout << "      table " << table << " took " << number(seconds_since(start)) << " s\n" << std::flush;
  }

  for (const std::string table : {"S3", "S4", "S5", "S6"}) {
    const auto start = std::chrono::steady_clock::now();
    const TableRun run(table);
    for (const auto& c : run.failure_checks()) report(tally, "4", c);
    for (const auto& c : run.checks()) report(tally, "4", c);
    std::cout << "      table " << table << " took " << number(seconds_since(start)) << " s\n" << std::flush;
  }

  {
    const auto start = std::chrono::steady_clock::now();
    report(tally, "5", below_bound("calibration residual, 100 problems x 2 distances", calibration_residual(), 1e-8));
    report(tally, "5", below_bound("variance vs nested-loop oracle, 50 designs", variance_oracle_gap(), 1e-12));
    report(tally, "5", below_bound("census equivalence, max |beta difference|", census_gap(), 1e-8));
    report(tally, "5", below_bound("q-homogeneity, max coefficient/SE change", q_homogeneity_gap(), 1e-8));
    report(tally, "5", below_bound("GLM vs normal equations, 100 problems", glm_oracle_gap(), 1e-10));
    ScenarioConfig cfg = default_config(ScenarioId::tp_homoscedastic);
    cfg.sigma2 = 1.0;
    cfg.replicates = kReplicates;
    RunOptions run;
    run.parallel = workers();
    const auto summary = run_scenario(cfg, run);
    for (const std::string est : {"IPW", "GR"}) {
      for (const std::string coef : {"(Intercept)", "X", "Z"}) {
        const auto& cell = summary.cell(est, coef);
        const double ratio = cell.mean_se && cell.emp_se ? *cell.mean_se / *cell.emp_se : NAN;
        report(tally, "5",
               {"SE calibration, tp_homoscedastic sigma2=1: " + est + " mean SE/empSE " + coef, ratio,
                "in [0.9, 1.1]", ratio >= 0.9 && ratio <= 1.1});
      }
    }
    std::cout << "      property suite took " << number(seconds_since(start)) << " s\n";
  }

  for (const auto& [table, run] : tables) {
    for (const auto& c : run.bias_checks()) report(tally, "6", c);
  }

  std::cout << '\n' << tally.passed << " passed, " << tally.failed << " failed\n";
  return tally.failed == 0 ? 0 : 1;
}
