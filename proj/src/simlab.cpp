#include "twophase/simlab.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <thread>

#include <json.hpp>

#include "twophase/errors.hpp"
#include "twophase/rng.hpp"

namespace twophase {

namespace {

struct ScenarioName {
  ScenarioId id;
  const char* name;
};

constexpr ScenarioName kScenarios[] = {
    {ScenarioId::cc_normal, "cc_normal"},
    {ScenarioId::cc_uniform, "cc_uniform"},
    {ScenarioId::cc_confounded, "cc_confounded"},
    {ScenarioId::tp_homoscedastic, "tp_homoscedastic"},
    {ScenarioId::tp_heteroscedastic, "tp_heteroscedastic"},
    {ScenarioId::tp_binary, "tp_binary"},
    {ScenarioId::tp_AZ_balanced, "tp_AZ_balanced"},
    {ScenarioId::tp_AZ_optimal, "tp_AZ_optimal"},
    {ScenarioId::tp_Z_optimal, "tp_Z_optimal"},
};

bool binary_outcome(ScenarioId id) {
  return is_case_control(id) || id == ScenarioId::tp_binary;
}

bool has_z(ScenarioId id) {
  return id != ScenarioId::cc_normal && id != ScenarioId::cc_uniform;
}

double expit(double eta) { return 1.0 / (1.0 + std::exp(-eta)); }

// Uniform index in [0, n) drawn from the stream.
std::size_t draw_index(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<std::size_t> u(0, n - 1);
  return u(rng);
}

// Simple random sample of k positions out of `pool`, returned in pool order.
std::vector<std::size_t> srs(std::vector<std::size_t> pool, std::size_t k, std::mt19937_64& rng) {
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + draw_index(rng, pool.size() - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace

// -------------------------------------------------------------------------
// Names
// -------------------------------------------------------------------------

const char* to_string(ScenarioId id) {
  for (const auto& s : kScenarios) {
    if (s.id == id) return s.name;
  }
  return "?";
}

ScenarioId parse_scenario(const std::string& text) {
  for (const auto& s : kScenarios) {
    if (text == s.name) return s.id;
  }
  throw DomainError("unknown scenario '" + text + "'");
}

bool is_case_control(ScenarioId id) {
  return id == ScenarioId::cc_normal || id == ScenarioId::cc_uniform ||
         id == ScenarioId::cc_confounded;
}

const char* to_string(Allocation a) {
  switch (a) {
    case Allocation::case_control_1to1: return "case_control_1to1";
    case Allocation::balanced: return "balanced";
    case Allocation::neyman_optimal: return "neyman_optimal";
  }
  return "?";
}

Allocation parse_allocation(const std::string& text) {
  if (text == "case_control_1to1") return Allocation::case_control_1to1;
  if (text == "balanced") return Allocation::balanced;
  if (text == "neyman_optimal" || text == "neyman") return Allocation::neyman_optimal;
  throw DomainError("unknown allocation '" + text + "'");
}

// -------------------------------------------------------------------------
// Configuration
// -------------------------------------------------------------------------

std::vector<EstimatorKind> default_estimators(ScenarioId id) {
  using K = EstimatorKind;
  switch (id) {
    case ScenarioId::cc_normal:
    case ScenarioId::cc_uniform:
      return {K::mle_cc, K::stab_xz, K::ipw};
    case ScenarioId::tp_binary:
      return {K::ipw, K::stab_z, K::stab_rake, K::gr};
    case ScenarioId::cc_confounded:
      return {K::stab_xz, K::stab_z, K::stab_rake, K::ipw, K::gr};
    default:
      return {K::ipw, K::stab_xz, K::stab_z, K::stab_rake, K::gr};
  }
}

ScenarioConfig default_config(ScenarioId id) {
  ScenarioConfig c;
  c.scenario_id = id;
  switch (id) {
    case ScenarioId::cc_normal:
    case ScenarioId::cc_uniform:
      c.population_size = 10000;
      c.phase2_size = 0;
      c.beta0 = -4.0;
      c.beta_x = 1.5;
      c.beta_z = 0.0;
      c.allocation = Allocation::case_control_1to1;
      c.estimator_options.q_method = QMethod::closed_form_cc;
      break;
    case ScenarioId::cc_confounded:
      c.population_size = 10000;
      c.phase2_size = 0;
      c.beta0 = -4.0;
      c.beta_x = 0.5;
      c.beta_z = 0.5;
      c.allocation = Allocation::case_control_1to1;
      c.estimator_options.plugin_model = PluginModel::phase1_only;
      c.estimator_options.raking_coefficients = {"Z"};
      break;
    case ScenarioId::tp_homoscedastic:
      c.sigma2 = 0.5;
      c.strata_rule = {{"Z", {0.9}, false}};
      c.allocation = Allocation::balanced;
      break;
    case ScenarioId::tp_Z_optimal:
      c.sigma2 = 1.0;
      c.beta_x = c.beta_z = 1.0;
      c.strata_rule = {{"Z", {0.9}, false}};
      c.allocation = Allocation::neyman_optimal;
      c.estimator_options.raking_coefficients = {"Z"};
      break;
    case ScenarioId::tp_heteroscedastic:
      c.beta_x = c.beta_z = 1.0;
      c.sigma2 = 1.0;
      c.delta = 1.5;
      c.neyman_model_variance = true;  // design assumes constant error variance
      c.estimator_options.q_variance = QVariance::model;
      c.strata_rule = {{"A", {0.25, 0.75}, false}, {"Z", {0.6}, false}};
      c.allocation = Allocation::neyman_optimal;
      break;
    case ScenarioId::tp_binary:
      c.population_size = 10000;
      c.phase2_size = 2000;
      c.beta0 = -4.0;
      c.beta_x = c.beta_z = 1.0;
      c.strata_rule = {{"A", {0.3, 0.7}, false}, {"Z", {0.6}, false}};
      c.allocation = Allocation::neyman_optimal;
      break;
    case ScenarioId::tp_AZ_balanced:
    case ScenarioId::tp_AZ_optimal:
      c.sigma2 = 1.0;
      c.beta_x = c.beta_z = 1.0;
      c.strata_rule = {{"A", {0.3, 0.7}, false}, {"Z", {}, true}};
      c.allocation = id == ScenarioId::tp_AZ_balanced ? Allocation::balanced
                                                      : Allocation::neyman_optimal;
      break;
  }
  return c;
}

void validate(const ScenarioConfig& c) {
  if (c.population_size < 4) throw DomainError("population_size must be at least 4");
  if (c.replicates < 1) throw DomainError("replicates must be at least 1");
  const bool cc = is_case_control(c.scenario_id);
  if (cc != (c.allocation == Allocation::case_control_1to1)) {
    throw DomainError(std::string("allocation '") + to_string(c.allocation) +
                      "' does not fit scenario " + to_string(c.scenario_id));
  }
  if (!cc) {
    if (c.phase2_size < 2 || c.phase2_size > c.population_size) {
      throw DomainError("phase2_size must lie in [2, population_size]");
    }
    if (c.strata_rule.empty()) throw DomainError("strata_rule is empty");
  }
  if (!binary_outcome(c.scenario_id) && c.scenario_id != ScenarioId::tp_heteroscedastic &&
      !(c.sigma2 > 0.0)) {
    throw DomainError("sigma2 must be positive");
  }
  if (!(c.delta >= 0.0)) throw DomainError("delta must be non-negative");
  for (const auto& r : c.strata_rule) {
    if (r.column != "A" && r.column != "Z") {
      throw DomainError("strata columns must be phase-1 variables A or Z, got '" + r.column + "'");
    }
    if (r.levels && !r.quantiles.empty()) {
      throw DomainError("strata rule for '" + r.column + "' has both levels and quantiles");
    }
    if (!r.levels && r.quantiles.empty()) {
      throw DomainError("strata rule for '" + r.column + "' has no cut points");
    }
    for (std::size_t k = 0; k < r.quantiles.size(); ++k) {
      const double p = r.quantiles[k];
      if (!(p > 0.0 && p < 1.0)) throw DomainError("quantile cut points must lie in (0,1)");
      if (k > 0 && !(p > r.quantiles[k - 1])) {
        throw DomainError("quantile cut points must be strictly increasing");
      }
    }
  }
  if (c.neyman_target != "X" && c.neyman_target != "Z" && c.neyman_target != "(Intercept)") {
    throw DomainError("neyman_target must name a coefficient");
  }
  if (c.neyman_target == "Z" && !has_z(c.scenario_id)) {
    throw DomainError("neyman_target Z is not in this scenario's model");
  }
}

ModelSpec scenario_model(const ScenarioConfig& config) {
  ModelSpec spec;
  spec.family = binary_outcome(config.scenario_id) ? Family::binomial_logit
                                                   : Family::gaussian_identity;
  spec.outcome = "Y";
  spec.regressors = {"X"};
  if (has_z(config.scenario_id)) spec.regressors.push_back("Z");
  return spec;
}

Eigen::VectorXd true_coefficients(const ScenarioConfig& config) {
  if (has_z(config.scenario_id)) {
    return Eigen::Vector3d(config.beta0, config.beta_x, config.beta_z);
  }
  return Eigen::Vector2d(config.beta0, config.beta_x);
}

// --- JSON -----------------------------------------------------------------

std::string config_to_json(const ScenarioConfig& c) {
  nlohmann::ordered_json j;
  j["scenario_id"] = to_string(c.scenario_id);
  j["population_size"] = c.population_size;
  j["phase2_size"] = c.phase2_size;
  j["beta0"] = c.beta0;
  j["beta_x"] = c.beta_x;
  j["beta_z"] = c.beta_z;
  j["sigma2"] = c.sigma2;
  j["delta"] = c.delta;
  j["allocation"] = to_string(c.allocation);
  j["strata_rule"] = nlohmann::ordered_json::array();
  for (const auto& r : c.strata_rule) {
    nlohmann::ordered_json jr;
    jr["column"] = r.column;
    if (r.levels) {
      jr["levels"] = true;
    } else {
      jr["quantiles"] = r.quantiles;
    }
    j["strata_rule"].push_back(jr);
  }
  j["neyman_target"] = c.neyman_target;
  j["neyman_model_variance"] = c.neyman_model_variance;
  j["replicates"] = c.replicates;
  j["base_seed"] = c.base_seed;
  std::vector<std::string> est;
  for (auto k : c.estimators) est.emplace_back(to_string(k));
  j["estimators"] = est;
  const auto& o = c.estimator_options;
  j["distance"] = to_string(o.distance);
  j["q_method"] = o.q_method == QMethod::smoothed ? "smoothed" : "closed_form_cc";
  j["q_variance"] = o.q_variance == QVariance::empirical ? "empirical" : "model";
  j["plugin_model"] = o.plugin_model == PluginModel::imputed ? "imputed" : "phase1_only";
  j["imputation_columns"] = o.imputation_columns;
  j["raking_coefficients"] = o.raking_coefficients;
  j["calibrate_population_size"] = o.calibrate_population_size;
  return j.dump(2) + "\n";
}

ScenarioConfig config_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("scenario config: ") + e.what(), 0);
  }
  if (!j.is_object() || !j.contains("scenario_id")) {
    throw DomainError("scenario config needs a scenario_id");
  }
  try {
    ScenarioConfig c = default_config(parse_scenario(j.at("scenario_id").get<std::string>()));
    auto get = [&](const char* key, auto& field) {
      if (j.contains(key)) field = j.at(key).get<std::decay_t<decltype(field)>>();
    };
    get("population_size", c.population_size);
    get("phase2_size", c.phase2_size);
    get("beta0", c.beta0);
    get("beta_x", c.beta_x);
    get("beta_z", c.beta_z);
    get("sigma2", c.sigma2);
    get("delta", c.delta);
    get("neyman_target", c.neyman_target);
    get("neyman_model_variance", c.neyman_model_variance);
    get("replicates", c.replicates);
    get("base_seed", c.base_seed);
    if (j.contains("allocation")) c.allocation = parse_allocation(j.at("allocation").get<std::string>());
    if (j.contains("strata_rule")) {
      c.strata_rule.clear();
      for (const auto& jr : j.at("strata_rule")) {
        StrataRule r;
        r.column = jr.at("column").get<std::string>();
        r.levels = jr.value("levels", false);
        if (jr.contains("quantiles")) r.quantiles = jr.at("quantiles").get<std::vector<double>>();
        c.strata_rule.push_back(r);
      }
    }
    if (j.contains("estimators")) {
      c.estimators.clear();
      for (const auto& e : j.at("estimators")) c.estimators.push_back(parse_estimator(e.get<std::string>()));
    }
    auto& o = c.estimator_options;
    if (j.contains("distance")) o.distance = parse_distance(j.at("distance").get<std::string>());
    if (j.contains("q_method")) {
      const auto m = j.at("q_method").get<std::string>();
      if (m == "smoothed") {
        o.q_method = QMethod::smoothed;
      } else if (m == "closed_form_cc") {
        o.q_method = QMethod::closed_form_cc;
      } else {
        throw DomainError("unknown q_method '" + m + "'");
      }
    }
    if (j.contains("q_variance")) {
      const auto m = j.at("q_variance").get<std::string>();
      if (m == "empirical") {
        o.q_variance = QVariance::empirical;
      } else if (m == "model") {
        o.q_variance = QVariance::model;
      } else {
        throw DomainError("unknown q_variance '" + m + "'");
      }
    }
    if (j.contains("plugin_model")) {
      const auto m = j.at("plugin_model").get<std::string>();
      if (m == "imputed") {
        o.plugin_model = PluginModel::imputed;
      } else if (m == "phase1_only") {
        o.plugin_model = PluginModel::phase1_only;
      } else {
        throw DomainError("unknown plugin_model '" + m + "'");
      }
    }
    get("imputation_columns", o.imputation_columns);
    get("raking_coefficients", o.raking_coefficients);
    get("calibrate_population_size", o.calibrate_population_size);
    validate(c);
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("scenario config: ") + e.what());
  }
}

// -------------------------------------------------------------------------
// Generation
// -------------------------------------------------------------------------

PopulationFrame generate_population(const ScenarioConfig& c, std::size_t replicate,
                                    std::size_t substream) {
  const std::size_t n = c.population_size;
  std::mt19937_64 rng = make_stream(c.base_seed, replicate, StreamPurpose::population, substream);
  std::normal_distribution<double> norm(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  auto bern = [&](double p) { return unif(rng) < p ? 1.0 : 0.0; };

  std::vector<double> x(n), z(n), a(n), y(n);
  const ScenarioId id = c.scenario_id;
  for (std::size_t i = 0; i < n; ++i) {
    switch (id) {
      case ScenarioId::cc_normal:
        x[i] = norm(rng);
        y[i] = bern(expit(c.beta0 + c.beta_x * x[i]));
        break;
      case ScenarioId::cc_uniform:
        x[i] = unif(rng);
        y[i] = bern(expit(c.beta0 + c.beta_x * x[i]));
        break;
      case ScenarioId::cc_confounded:
        z[i] = norm(rng);
        x[i] = 0.8 * z[i] + norm(rng);
        y[i] = bern(expit(c.beta0 + c.beta_x * x[i] + c.beta_z * z[i]));
        break;
      case ScenarioId::tp_AZ_balanced:
      case ScenarioId::tp_AZ_optimal: {
        const double w1 = norm(rng);
        const double w2 = bern(0.6);
        z[i] = bern(expit(0.3 + w1 + w2));
        x[i] = w1 + 0.8 * w2 + z[i] + norm(rng);
        a[i] = x[i] + norm(rng);
        y[i] = c.beta0 + c.beta_x * x[i] + c.beta_z * z[i] + std::sqrt(c.sigma2) * norm(rng);
        break;
      }
      default: {
        const double w1 = norm(rng);
        const double w2 = bern(0.6);
        x[i] = 0.3 + w1 + w2 + norm(rng);
        z[i] = w1 + 0.8 * w2 + norm(rng);
        a[i] = x[i] + norm(rng);
        const double eta = c.beta0 + c.beta_x * x[i] + c.beta_z * z[i];
        if (id == ScenarioId::tp_binary) {
          y[i] = bern(expit(eta));
        } else if (id == ScenarioId::tp_heteroscedastic) {
          y[i] = eta + std::sqrt(1.0 + c.delta * z[i] * z[i]) * norm(rng);
        } else {
          y[i] = eta + std::sqrt(c.sigma2) * norm(rng);
        }
        break;
      }
    }
  }

  FrameColumns cols;
  cols.outcome = Column("Y", std::move(y));
  cols.phase2.emplace_back("X", std::move(x));
  if (has_z(id)) cols.phase1.emplace_back("Z", std::move(z));
  if (!is_case_control(id)) cols.auxiliary.emplace_back("A", std::move(a));
  return PopulationFrame(std::move(cols));
}

// -------------------------------------------------------------------------
// Stratification and allocation
// -------------------------------------------------------------------------

double quantile(std::vector<double> v, double p) {
  if (v.empty()) throw DomainError("quantile of an empty sample");
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("quantile probability outside [0,1]");
  std::sort(v.begin(), v.end());
  const double h = (static_cast<double>(v.size()) - 1.0) * p;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, v.size() - 1);
  return v[lo] + (h - static_cast<double>(lo)) * (v[hi] - v[lo]);
}

std::vector<int> assign_strata(const PopulationFrame& frame, const ScenarioConfig& config) {
  const std::size_t n = frame.n_rows();
  std::vector<int> label(n, 0);
  if (config.allocation == Allocation::case_control_1to1) {
    const Column& y = frame.outcome();
    for (std::size_t i = 0; i < n; ++i) label[i] = static_cast<int>(y.at(i));
    return label;
  }
  int radix = 1;
  for (const auto& rule : config.strata_rule) {
    const Column& col = frame.column(rule.column);
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = col.at(i);
    std::vector<double> cuts;
    if (rule.levels) {
      std::vector<double> lv = v;
      std::sort(lv.begin(), lv.end());
      lv.erase(std::unique(lv.begin(), lv.end()), lv.end());
      if (lv.size() > 50) throw DomainError("column '" + rule.column + "' has too many levels");
      // Cut between consecutive levels so each level is its own stratum.
      for (std::size_t k = 1; k < lv.size(); ++k) cuts.push_back(0.5 * (lv[k - 1] + lv[k]));
    } else {
      for (double p : rule.quantiles) cuts.push_back(quantile(v, p));
    }
    for (std::size_t i = 0; i < n; ++i) {
      const int pos = static_cast<int>(std::upper_bound(cuts.begin(), cuts.end(), v[i]) - cuts.begin());
      label[i] += radix * pos;
    }
    radix *= static_cast<int>(cuts.size() + 1);
  }
  return label;
}

std::vector<std::size_t> allocate(const std::vector<std::size_t>& sizes,
                                  const std::vector<double>& sd, std::size_t n, Allocation rule) {
  const std::size_t h_count = sizes.size();
  if (h_count == 0) throw AllocationError("no strata to allocate");
  const std::size_t total = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
  if (n > total) throw AllocationError("phase-2 size exceeds the population");
  for (std::size_t h = 0; h < h_count; ++h) {
    if (sizes[h] < 2) throw AllocationError("stratum " + std::to_string(h) + " has fewer than 2 units");
  }
  if (h_count == 1) return {n};

  std::vector<double> w(h_count, 1.0);
  if (rule == Allocation::neyman_optimal) {
    if (sd.size() != h_count) throw AllocationError("need one standard deviation per stratum");
    double sum = 0.0;
    for (std::size_t h = 0; h < h_count; ++h) {
      w[h] = static_cast<double>(sizes[h]) * std::max(sd[h], 0.0);
      sum += w[h];
    }
    if (!(sum > 0.0)) {
      for (std::size_t h = 0; h < h_count; ++h) w[h] = static_cast<double>(sizes[h]);
    }
  } else if (rule != Allocation::balanced) {
    throw AllocationError("case-control sampling has no stratum allocation");
  }

  // Continuous allocation with caps at N_h and (Neyman) a floor of 2; the
  // excess from capped strata is spread over the rest in proportion to w.
  const double floor_size = rule == Allocation::neyman_optimal ? 2.0 : 0.0;
  std::vector<double> alloc(h_count, 0.0);
  std::vector<bool> fixed(h_count, false);
  for (std::size_t pass = 0; pass <= h_count; ++pass) {
    double remaining = static_cast<double>(n);
    double wsum = 0.0;
    for (std::size_t h = 0; h < h_count; ++h) {
      if (fixed[h]) {
        remaining -= alloc[h];
      } else {
        wsum += w[h];
      }
    }
    bool changed = false;
    for (std::size_t h = 0; h < h_count; ++h) {
      if (fixed[h]) continue;
      alloc[h] = wsum > 0.0 ? remaining * w[h] / wsum : 0.0;
    }
    for (std::size_t h = 0; h < h_count; ++h) {
      if (fixed[h]) continue;
      const double cap = static_cast<double>(sizes[h]);
      if (alloc[h] > cap) {
        alloc[h] = cap;
        fixed[h] = true;
        changed = true;
      } else if (alloc[h] < floor_size) {
        alloc[h] = std::min(floor_size, cap);
        fixed[h] = true;
        changed = true;
      }
    }
    if (!changed) break;
  }

  // Largest-remainder rounding to integers that sum to n.
  std::vector<std::size_t> out(h_count);
  std::size_t assigned = 0;
  std::vector<std::pair<double, std::size_t>> frac;
  for (std::size_t h = 0; h < h_count; ++h) {
    out[h] = std::min(static_cast<std::size_t>(std::floor(alloc[h] + 1e-9)), sizes[h]);
    assigned += out[h];
    frac.emplace_back(alloc[h] - static_cast<double>(out[h]), h);
  }
  std::stable_sort(frac.begin(), frac.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  while (assigned < n) {
    bool progress = false;
    for (const auto& f : frac) {
      if (assigned == n) break;
      if (out[f.second] < sizes[f.second]) {
        ++out[f.second];
        ++assigned;
        progress = true;
      }
    }
    if (!progress) throw AllocationError("cannot place the phase-2 sample within stratum sizes");
  }
  while (assigned > n) {
    // Floors can overshoot a tiny n; trim the largest strata first.
    const auto it = std::max_element(out.begin(), out.end());
    --*it;
    --assigned;
  }
  return out;
}

TwoPhaseDesign draw_phase2(const PopulationFrame& frame, const ScenarioConfig& config,
                           std::size_t replicate, std::size_t substream) {
  const std::size_t n = frame.n_rows();
  std::vector<int> label = assign_strata(frame, config);
  std::mt19937_64 rng = make_stream(config.base_seed, replicate, StreamPurpose::sampling, substream);
  std::vector<bool> included(n, false);

  if (config.allocation == Allocation::case_control_1to1) {
    std::vector<std::size_t> cases, controls;
    for (std::size_t i = 0; i < n; ++i) (label[i] == 1 ? cases : controls).push_back(i);
    if (cases.empty()) throw DegenerateError("population has no cases");
    const std::size_t k = std::min(cases.size(), controls.size());
    for (auto i : cases) included[i] = true;
    for (auto i : srs(controls, k, rng)) included[i] = true;
    return TwoPhaseDesign(std::move(label), std::move(included));
  }

  std::map<int, std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < n; ++i) members[label[i]].push_back(i);
  std::vector<std::size_t> sizes;
  for (const auto& [lab, rows] : members) sizes.push_back(rows.size());

  std::vector<double> sd;
  if (config.allocation == Allocation::neyman_optimal) {
    // Oracle allocation: influence functions from the complete population.
    const ModelSpec spec = scenario_model(config);
    const std::vector<std::size_t> rows = all_rows(n);
    const GlmFit full = fit_weighted_glm(frame, spec, Eigen::VectorXd::Ones(static_cast<Eigen::Index>(n)), rows);
    const auto names = spec.coefficient_names();
    const auto col = static_cast<Eigen::Index>(
        std::find(names.begin(), names.end(), config.neyman_target) - names.begin());
    Eigen::VectorXd spread;  // model-based sd of h_i given the covariates
    if (config.neyman_model_variance) {
      const Eigen::MatrixXd jinv = full.jacobian.inverse();
      const double sigma2 = full.residual.squaredNorm() / static_cast<double>(n);
      spread.resize(static_cast<Eigen::Index>(n));
      for (Eigen::Index i = 0; i < spread.size(); ++i) {
        const double mu = full.fitted(i);
        const double v = spec.family == Family::binomial_logit ? mu * (1.0 - mu) : sigma2;
        spread(i) = static_cast<double>(n) * jinv.row(col).dot(full.design.row(i)) * std::sqrt(v);
      }
    }
    for (const auto& [lab, rws] : members) {
      if (config.neyman_model_variance) {
        double ss = 0.0;
        for (auto i : rws) ss += spread(static_cast<Eigen::Index>(i)) * spread(static_cast<Eigen::Index>(i));
        sd.push_back(std::sqrt(ss / static_cast<double>(rws.size())));
        continue;
      }
      double mean = 0.0;
      for (auto i : rws) mean += full.influence(static_cast<Eigen::Index>(i), col);
      mean /= static_cast<double>(rws.size());
      double ss = 0.0;
      for (auto i : rws) {
        const double d = full.influence(static_cast<Eigen::Index>(i), col) - mean;
        ss += d * d;
      }
      sd.push_back(std::sqrt(ss / static_cast<double>(rws.size() - 1)));
    }
  }
  const std::vector<std::size_t> n_h = allocate(sizes, sd, config.phase2_size, config.allocation);
  std::size_t h = 0;
  for (const auto& [lab, rows] : members) {
    for (auto i : srs(rows, n_h[h], rng)) included[i] = true;
    ++h;
  }
  return TwoPhaseDesign(std::move(label), std::move(included));
}

PopulationFrame mask_unsampled(const PopulationFrame& frame, const TwoPhaseDesign& design) {
  FrameColumns cols;
  auto copy = [&](const std::string& name) {
    const Column& c = frame.column(name);
    std::vector<double> v(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) v[i] = c.observed(i) ? c.at(i) : 0.0;
    return v;
  };
  cols.outcome = Column(frame.outcome().name(), copy(frame.outcome().name()));
  for (const auto& name : frame.column_names(ColumnRole::phase1)) cols.phase1.emplace_back(name, copy(name));
  for (const auto& name : frame.column_names(ColumnRole::auxiliary)) {
    cols.auxiliary.emplace_back(name, copy(name));
  }
  for (const auto& name : frame.column_names(ColumnRole::phase2)) {
    const Column& c = frame.column(name);
    std::vector<bool> obs(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) obs[i] = design.included(i) && c.observed(i);
    cols.phase2.emplace_back(name, copy(name), std::move(obs));
  }
  cols.row_id = frame.row_id();
  return PopulationFrame(std::move(cols));
}

// -------------------------------------------------------------------------
// Monte Carlo
// -------------------------------------------------------------------------

EstimatorEntry standard_entry(EstimatorKind kind) {
  return {display_name(kind), [kind](ReplicateContext& ctx) {
            const EstimateReport rep = ctx.pipeline.run(kind);
            return EstimateOutcome{rep.beta, rep.se};
          }};
}

SummaryCell summarise_cell(const std::string& estimator, const std::string& coefficient,
                           double truth, const std::vector<double>& est,
                           const std::vector<double>& se, std::size_t failures) {
  SummaryCell c;
  c.estimator = estimator;
  c.coefficient = coefficient;
  c.truth = truth;
  c.count = est.size();
  c.failures = failures;
  if (est.empty()) return c;
  const double r = static_cast<double>(est.size());
  // Accumulate deviations from the first estimate so that constant
  // estimates give exactly zero spread.
  const double shift = est.front();
  double dev = 0.0;
  for (double e : est) dev += e - shift;
  const double mean_dev = dev / r;
  c.bias = (shift - truth) + mean_dev;
  double ss = 0.0, sq = 0.0;
  for (double e : est) {
    const double centred = (e - shift) - mean_dev;
    ss += centred * centred;
    sq += (e - truth) * (e - truth);
  }
  c.rmse = std::sqrt(sq / r);
  if (est.size() >= 2) c.emp_se = std::sqrt(ss / (r - 1.0));
  if (!se.empty()) c.mean_se = std::accumulate(se.begin(), se.end(), 0.0) / static_cast<double>(se.size());
  return c;
}

const SummaryCell& SimulationSummary::cell(const std::string& estimator,
                                           const std::string& coefficient) const {
  for (const auto& c : cells) {
    if (c.estimator == estimator && c.coefficient == coefficient) return c;
  }
  throw DomainError("no summary cell for " + estimator + " / " + coefficient);
}

double SimulationSummary::emp_se(const std::string& estimator, const std::string& coefficient) const {
  const SummaryCell& c = cell(estimator, coefficient);
  if (!c.emp_se) throw DomainError("empSE undefined for " + estimator + " / " + coefficient);
  return *c.emp_se;
}

namespace {

struct ReplicateResult {
  std::vector<std::optional<EstimateOutcome>> outcomes;
  std::vector<std::string> errors;
  std::size_t phase2_size = 0;
  std::size_t regenerations = 0;
  std::string fatal;  // population or design could not be produced
};

ReplicateResult run_replicate(const ScenarioConfig& config, const ModelSpec& spec,
                              const std::vector<EstimatorEntry>& estimators, std::size_t r) {
  ReplicateResult res;
  res.outcomes.resize(estimators.size());
  res.errors.resize(estimators.size());
  try {
    std::size_t sub = 0;
    std::optional<PopulationFrame> full;
    for (;; ++sub) {
      full.emplace(generate_population(config, r, sub));
      if (spec.family != Family::binomial_logit) break;
      const double cases = full->outcome().to_vector().sum();
      if (cases > 0.0 && cases < static_cast<double>(full->n_rows())) break;
      if (sub >= 100) throw DegenerateError("no usable population after 100 regenerations");
    }
    res.regenerations = sub;
    const TwoPhaseDesign design = draw_phase2(*full, config, r, sub);
    res.phase2_size = design.n_included();
    const PopulationFrame frame = mask_unsampled(*full, design);
    EstimatorPipeline pipeline(frame, design, spec, config.estimator_options);
    ReplicateContext ctx{config, frame, design, spec, pipeline};
    for (std::size_t k = 0; k < estimators.size(); ++k) {
      try {
        EstimateOutcome out = estimators[k].run(ctx);
        if (!out.beta.allFinite() || !out.se.allFinite()) {
          throw DegenerateError("non-finite estimate");
        }
        res.outcomes[k] = std::move(out);
      } catch (const std::exception& e) {
        res.errors[k] = e.what();
      }
    }
  } catch (const std::exception& e) {
    res.fatal = e.what();
  }
  return res;
}

}  // namespace

SimulationSummary run_scenario(const ScenarioConfig& config,
                               const std::vector<EstimatorEntry>& estimators,
                               const RunOptions& options) {
  validate(config);
  if (estimators.empty()) throw DomainError("no estimators requested");
  const ModelSpec spec = scenario_model(config);
  const std::size_t reps = config.replicates;
  std::vector<ReplicateResult> results(reps);

  const unsigned workers = std::max(1u, std::min<unsigned>(options.parallel, static_cast<unsigned>(reps)));
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (;;) {
      const std::size_t r = next.fetch_add(1);
      if (r >= reps) return;
      results[r] = run_replicate(config, spec, estimators, r);
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  // Fold in replicate order so the summary does not depend on scheduling.
  SimulationSummary summary;
  summary.config = config;
  summary.replicates = reps;
  const auto names = spec.coefficient_names();
  const Eigen::VectorXd truth = true_coefficients(config);
  const std::size_t p = names.size();
  std::vector<std::vector<std::vector<double>>> est(estimators.size(), std::vector<std::vector<double>>(p));
  std::vector<std::vector<std::vector<double>>> ses = est;
  std::vector<std::size_t> failures(estimators.size(), 0);
  double n2 = 0.0;
  std::size_t n2_count = 0;
  for (std::size_t r = 0; r < reps; ++r) {
    const ReplicateResult& res = results[r];
    summary.regenerations += res.regenerations;
    if (!res.fatal.empty()) {
      summary.failure_log.push_back("replicate " + std::to_string(r) + ": " + res.fatal);
      for (auto& f : failures) ++f;
      continue;
    }
    n2 += static_cast<double>(res.phase2_size);
    ++n2_count;
    for (std::size_t k = 0; k < estimators.size(); ++k) {
      if (!res.outcomes[k]) {
        ++failures[k];
        summary.failure_log.push_back("replicate " + std::to_string(r) + " " + estimators[k].name +
                                      ": " + res.errors[k]);
        continue;
      }
      const auto& o = *res.outcomes[k];
      if (static_cast<std::size_t>(o.beta.size()) != p || static_cast<std::size_t>(o.se.size()) != p) {
        throw InconsistentDesignError("estimator '" + estimators[k].name + "' returned the wrong length");
      }
      for (std::size_t j = 0; j < p; ++j) {
        est[k][j].push_back(o.beta(static_cast<Eigen::Index>(j)));
        ses[k][j].push_back(o.se(static_cast<Eigen::Index>(j)));
      }
    }
  }
  summary.mean_phase2_size = n2_count > 0 ? n2 / static_cast<double>(n2_count) : 0.0;
  for (std::size_t k = 0; k < estimators.size(); ++k) {
    for (std::size_t j = 0; j < p; ++j) {
      summary.cells.push_back(summarise_cell(estimators[k].name, names[j], truth(static_cast<Eigen::Index>(j)),
                                             est[k][j], ses[k][j], failures[k]));
    }
    if (static_cast<double>(failures[k]) > options.failure_threshold * static_cast<double>(reps)) {
      summary.failed = true;
    }
  }
  return summary;
}

SimulationSummary run_scenario(const ScenarioConfig& config, const RunOptions& options) {
  std::vector<EstimatorEntry> entries;
  const auto kinds = config.estimators.empty() ? default_estimators(config.scenario_id) : config.estimators;
  for (auto k : kinds) entries.push_back(standard_entry(k));
  return run_scenario(config, entries, options);
}

}  // namespace twophase
