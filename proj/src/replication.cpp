#include "twophase/replication.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "twophase/errors.hpp"

namespace twophase {

namespace {

GridPoint point_of(const ReferenceCell& c) {
  return {parse_scenario(c.scenario), c.beta_x, c.beta_z, c.sigma2, c.delta};
}

std::string pct(double tol) {
  std::ostringstream s;
  s << tol * 100 << "%";
  return s.str();
}

std::string describe(const GridPoint& p, const std::string& table) {
  std::ostringstream s;
  s << "table " << table;
  for (const auto& [name, value] : grid_parameters(table, p)) s << ", " << name << "=" << value;
  return s.str();
}

ToleranceCheck within(const std::string& label, double value, double target, double tol) {
  ToleranceCheck c;
  c.name = label;
  c.value = value;
  c.rule = "within " + pct(tol) + " of " + fixed(target);
  c.pass = std::abs(value / target - 1.0) <= tol;
  return c;
}

ToleranceCheck in_range(const std::string& label, double value, double lo, double hi) {
  ToleranceCheck c;
  c.name = label;
  c.value = value;
  c.rule = "in [" + fixed(lo) + ", " + fixed(hi) + "]";
  c.pass = value >= lo && value <= hi;
  return c;
}

ToleranceCheck below(const std::string& label, double value, double bound, const std::string& other) {
  ToleranceCheck c;
  c.name = label;
  c.value = value;
  c.rule = "< " + other + " (" + fixed(bound, 4) + ")";
  c.pass = value < bound;
  return c;
}

ToleranceCheck close_ratio(const std::string& label, double a, double b, double tol) {
  ToleranceCheck c;
  c.name = label;
  c.value = a / b;
  c.rule = "ratio within " + pct(tol) + " of 1";
  c.pass = std::abs(a / b - 1.0) <= tol;
  return c;
}

// No-gain pattern: stabilised vs unstabilised counterpart on X and Z.
void no_gain_checks(const std::string& table, const GridPoint& p, const SimulationSummary& s,
                    std::vector<ToleranceCheck>& out) {
  const std::string where = describe(p, table);
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& c : s.cells) {
    if (c.coefficient != "X") continue;
    if (c.estimator == "Stab_z" || c.estimator == "Stab_xz") pairs.emplace_back(c.estimator, "IPW");
    if (c.estimator == "Stab-rake") pairs.emplace_back(c.estimator, "GR");
  }
  for (const char* coef : {"X", "Z"}) {
    for (const auto& [stab, base] : pairs) {
      out.push_back(close_ratio(where + ": " + stab + "/" + base + " empSE " + coef,
                                s.emp_se(stab, coef), s.emp_se(base, coef), 0.05));
    }
  }
}

}  // namespace

std::vector<std::string> known_tables() { return {"1", "2", "3", "S1", "S2", "S3", "S4", "S5", "S6"}; }

std::string table_scenario(const std::string& table) {
  for (const auto& c : reference_cells()) {
    if (c.table == table) return c.scenario;
  }
  throw DomainError("unknown table '" + table + "'");
}

std::vector<GridPoint> table_grid(const std::string& table) {
  std::vector<GridPoint> out;
  for (const auto& c : reference_cells()) {
    if (c.table != table) continue;
    const GridPoint p = point_of(c);
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  if (out.empty()) throw DomainError("unknown table '" + table + "'");
  return out;
}

std::vector<GridPoint> check_points(const std::string& table) {
  using S = ScenarioId;
  if (table == "1") return {{S::cc_normal, 1.5, 0.0, 0.0, 0.0}};
  if (table == "2") {
    return {{S::tp_homoscedastic, 0.1, 0.1, 0.5, 0.0},
            {S::tp_homoscedastic, 1.5, 1.5, 0.5, 0.0}};
  }
  if (table == "3") return {{S::tp_heteroscedastic, 1.0, 1.0, 0.0, 1.5}, {S::tp_heteroscedastic, 1.0, 1.0, 0.0, 0.1}};
  if (table == "S3") return {{S::tp_Z_optimal, 1.0, 1.0, 1.0, 0.0}};
  if (table == "S4") return {{S::tp_AZ_balanced, 1.0, 1.0, 1.0, 0.0}};
  if (table == "S5") return {{S::tp_AZ_optimal, 1.0, 1.0, 1.0, 0.0}};
  if (table == "S6") return {{S::tp_binary, 1.0, 1.0, 0.0, 0.0}};
  table_scenario(table);  // validates the id
  return {};
}

std::vector<std::pair<std::string, double>> grid_parameters(const std::string& table,
                                                            const GridPoint& p) {
  if (table == "1" || table == "S1") return {{"beta_x", p.beta_x}};
  if (table == "3") return {{"delta", p.delta}};
  if (table == "S2") return {{"beta_z", p.beta_z}, {"beta_x", p.beta_x}};
  if (table == "S6") return {{"beta", p.beta_x}};
  return {{"sigma2", p.sigma2}, {"beta", p.beta_x}};
}

ScenarioConfig grid_config(const GridPoint& p, std::size_t replicates, std::uint64_t seed) {
  ScenarioConfig c = default_config(p.scenario);
  c.beta_x = p.beta_x;
  c.beta_z = p.beta_z;
  if (p.sigma2 > 0.0) c.sigma2 = p.sigma2;
  c.delta = p.delta;
  c.replicates = replicates;
  c.base_seed = seed;
  return c;
}

ToleranceCheck bias_check(const std::string& label, const SimulationSummary& s, double bound) {
  ToleranceCheck c;
  c.name = label;
  c.rule = "|bias| < " + fixed(bound, 2) + " in every cell";
  c.pass = true;
  std::string worst;
  for (const auto& cell : s.cells) {
    if (std::abs(cell.bias) > c.value) {
      c.value = std::abs(cell.bias);
      worst = cell.estimator + "/" + cell.coefficient;
    }
    if (!(std::abs(cell.bias) < bound) || cell.count == 0) c.pass = false;
  }
  if (!worst.empty()) c.rule += " (largest: " + worst + ")";
  return c;
}

std::vector<ToleranceCheck> table_checks(const std::string& table, const SummaryLookup& lookup) {
  std::vector<ToleranceCheck> out;
  const auto points = check_points(table);
  if (table == "1") {
    const auto& s = lookup(points[0]);
    const std::string w = describe(points[0], table);
    out.push_back(in_range(w + ": Stab empSE X", s.emp_se("Stab_xz", "X"), 0.096, 0.118));
    out.push_back(in_range(w + ": IPW empSE X", s.emp_se("IPW", "X"), 0.126, 0.154));
    out.push_back(in_range(w + ": Stab/MLE empSE X", s.emp_se("Stab_xz", "X") / s.emp_se("MLE", "X"), 0.95, 1.08));
  } else if (table == "2") {
    {
      const auto& s = lookup(points[0]);
      const std::string w = describe(points[0], table);
      out.push_back(within(w + ": IPW empSE X", s.emp_se("IPW", "X"), 0.029, 0.10));
      out.push_back(within(w + ": Stab-rake empSE X", s.emp_se("Stab-rake", "X"), 0.019, 0.15));
      out.push_back(within(w + ": GR empSE X", s.emp_se("GR", "X"), 0.019, 0.15));
      out.push_back(within(w + ": Stab_z empSE X", s.emp_se("Stab_z", "X"), 0.024, 0.15));
      out.push_back(within(w + ": Stab_xz empSE X", s.emp_se("Stab_xz", "X"), 0.027, 0.15));
    }
    {
      const auto& s = lookup(points[1]);
      out.push_back(below(describe(points[1], table) + ": Stab-rake empSE X", s.emp_se("Stab-rake", "X"),
                          s.emp_se("GR", "X"), "GR"));
    }
  } else if (table == "3") {
    const auto& hi = lookup(points[0]);
    const std::string w = describe(points[0], table);
    out.push_back(within(w + ": Stab-rake empSE X", hi.emp_se("Stab-rake", "X"), 0.045, 0.15));
    out.push_back(below(w + ": Stab-rake empSE X", hi.emp_se("Stab-rake", "X"), hi.emp_se("GR", "X"), "GR"));
    const auto& lo = lookup(points[1]);
    out.push_back(close_ratio(describe(points[1], table) + ": Stab-rake/GR empSE X", lo.emp_se("Stab-rake", "X"),
                              lo.emp_se("GR", "X"), 0.10));
  } else {
    for (const auto& p : points) no_gain_checks(table, p, lookup(p), out);
  }
  return out;
}

std::vector<CellComparison> compare_with_reference(const std::string& table,
                                                   const std::vector<GridPoint>& points,
                                                   const SummaryLookup& lookup) {
  std::vector<CellComparison> out;
  for (const auto& ref : reference_cells()) {
    if (ref.table != table) continue;
    const GridPoint p = point_of(ref);
    if (std::find(points.begin(), points.end(), p) == points.end()) continue;
    CellComparison c;
    c.reference = ref;
    const SimulationSummary& s = lookup(p);
    for (const auto& cell : s.cells) {
      if (cell.estimator == display_name(ref.estimator) && cell.coefficient == ref.coefficient) {
        c.reproduced = cell.emp_se;
      }
    }
    if (c.reproduced && ref.emp_se > 0.0) c.ratio = *c.reproduced / ref.emp_se;
    out.push_back(c);
  }
  return out;
}

}  // namespace twophase
