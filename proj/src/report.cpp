#include "twophase/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "twophase/errors.hpp"
#include "twophase/io.hpp"

namespace twophase {

TableFormat parse_table_format(const std::string& text) {
  if (text == "md" || text == "markdown") return TableFormat::markdown;
  if (text == "text" || text == "txt" || text == "csv") return TableFormat::text;
  throw DomainError("unknown table format '" + text + "'");
}

std::string fixed(double value, int digits) {
  if (!std::isfinite(value)) return "NA";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  std::string s(buf);
  // Avoid "-0.000".
  if (s.find_first_not_of("-0.") == std::string::npos && s[0] == '-') s.erase(0, 1);
  return s;
}

std::string render_table(const std::vector<std::vector<std::string>>& rows, TableFormat format) {
  if (rows.empty()) return "";
  const std::size_t cols = rows.front().size();
  std::vector<std::size_t> width(cols, 0);
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < cols && c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  }
  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& r) {
    if (format == TableFormat::markdown) out << "| ";
    for (std::size_t c = 0; c < cols; ++c) {
      const std::string cell = c < r.size() ? r[c] : "";
      // Left-align the first column, right-align numbers.
      if (c == 0) {
        out << cell << std::string(width[c] - cell.size(), ' ');
      } else {
        out << std::string(width[c] - cell.size(), ' ') << cell;
      }
      if (c + 1 < cols) out << (format == TableFormat::markdown ? " | " : "  ");
    }
    if (format == TableFormat::markdown) out << " |";
    out << '\n';
  };
  emit(rows.front());
  if (format == TableFormat::markdown) {
    out << '|';
    for (std::size_t c = 0; c < cols; ++c) {
      out << (c == 0 ? ":" : "") << std::string(width[c] + 1, '-') << (c == 0 ? "" : ":") << '|';
    }
    out << '\n';
  } else {
    std::size_t total = 0;
    for (auto w : width) total += w + 2;
    out << std::string(total - 2, '-') << '\n';
  }
  for (std::size_t k = 1; k < rows.size(); ++k) emit(rows[k]);
  return out.str();
}

// -------------------------------------------------------------------------
// Estimates
// -------------------------------------------------------------------------

namespace {

constexpr double kZ975 = 1.959963984540054;

}  // namespace

std::string estimates_csv(const std::vector<EstimatorResult>& results) {
  std::ostringstream out;
  out << "estimator,coefficient,estimate,se,lower,upper,status\n";
  for (const auto& r : results) {
    if (!r.ok) {
      std::string msg = r.error;
      std::replace(msg.begin(), msg.end(), '"', '\'');
      out << to_string(r.kind) << ",,,,,,\"error: " << msg << "\"\n";
      continue;
    }
    const auto& rep = r.report;
    for (std::size_t j = 0; j < rep.coefficient_names.size(); ++j) {
      const auto k = static_cast<Eigen::Index>(j);
      const double b = rep.beta(k), s = rep.se(k);
      out << to_string(r.kind) << ',' << rep.coefficient_names[j] << ',' << format_full(b) << ','
          << format_full(s) << ',' << format_full(b - kZ975 * s) << ',' << format_full(b + kZ975 * s)
          << ",ok\n";
    }
  }
  return out.str();
}

std::string estimates_table(const std::vector<EstimatorResult>& results, Family family,
                            TableFormat format) {
  const bool odds = family == Family::binomial_logit;
  std::vector<std::string> coefs;
  for (const auto& r : results) {
    if (!r.ok) continue;
    for (const auto& c : r.report.coefficient_names) {
      if (std::find(coefs.begin(), coefs.end(), c) == coefs.end()) coefs.push_back(c);
    }
  }
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"Coefficient"};
  for (const auto& r : results) {
    const std::string name = display_name(r.kind);
    header.push_back(name + (odds ? " OR" : " Est"));
    header.push_back(name + " SE");
    header.push_back(name + " 95% CI");
  }
  rows.push_back(header);
  for (const auto& c : coefs) {
    std::vector<std::string> row{c};
    for (const auto& r : results) {
      if (!r.ok) {
        row.insert(row.end(), {"failed", "", ""});
        continue;
      }
      const auto& names = r.report.coefficient_names;
      const auto it = std::find(names.begin(), names.end(), c);
      if (it == names.end()) {
        row.insert(row.end(), {"", "", ""});
        continue;
      }
      const auto k = static_cast<Eigen::Index>(it - names.begin());
      const double b = r.report.beta(k), s = r.report.se(k);
      double lo = b - kZ975 * s, hi = b + kZ975 * s, est = b;
      if (odds) {
        est = std::exp(b);
        lo = std::exp(lo);
        hi = std::exp(hi);
      }
      row.push_back(fixed(est));
      row.push_back(fixed(s));
      row.push_back(fixed(lo) + "--" + fixed(hi));
    }
    rows.push_back(row);
  }
  std::string table = render_table(rows, format);
  for (const auto& r : results) {
    if (!r.ok) table += "\n" + std::string(display_name(r.kind)) + " failed: " + r.error + "\n";
  }
  return table;
}

// -------------------------------------------------------------------------
// Simulation summaries
// -------------------------------------------------------------------------

namespace {

std::string opt(const std::optional<double>& v, int digits) {
  return v ? fixed(*v, digits) : "NA";
}

std::string opt_full(const std::optional<double>& v) { return v ? format_full(*v) : "NA"; }

}  // namespace

std::string summary_csv(const std::vector<GridResult>& results) {
  std::ostringstream out;
  std::vector<std::string> pnames;
  if (!results.empty()) {
    for (const auto& p : results.front().parameters) pnames.push_back(p.first);
  }
  out << "scenario";
  for (const auto& p : pnames) out << ',' << p;
  out << ",estimator,coefficient,truth,bias,emp_se,rmse,mean_se,count,failures,mean_phase2_size\n";
  for (const auto& g : results) {
    for (const auto& c : g.summary.cells) {
      out << to_string(g.summary.config.scenario_id);
      for (const auto& p : g.parameters) out << ',' << format_full(p.second);
      out << ',' << c.estimator << ',' << c.coefficient << ',' << format_full(c.truth) << ','
          << format_full(c.bias) << ',' << opt_full(c.emp_se) << ',' << format_full(c.rmse) << ','
          << opt_full(c.mean_se) << ',' << c.count << ',' << c.failures << ','
          << format_full(g.summary.mean_phase2_size) << '\n';
    }
  }
  return out.str();
}

std::string summary_markdown(const std::vector<GridResult>& results) {
  if (results.empty()) return "";
  std::vector<std::string> estimators, coefs;
  for (const auto& g : results) {
    for (const auto& c : g.summary.cells) {
      if (std::find(estimators.begin(), estimators.end(), c.estimator) == estimators.end()) {
        estimators.push_back(c.estimator);
      }
      if (std::find(coefs.begin(), coefs.end(), c.coefficient) == coefs.end()) coefs.push_back(c.coefficient);
    }
  }
  const bool show_n = is_case_control(results.front().summary.config.scenario_id);
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header;
  for (const auto& p : results.front().parameters) header.push_back(p.first);
  if (show_n) header.push_back("mean n");
  header.push_back("Coefficient");
  for (const auto& e : estimators) {
    header.push_back(e + " empSE");
    header.push_back(e + " RMSE");
  }
  rows.push_back(header);
  for (const auto& g : results) {
    for (const auto& coef : coefs) {
      std::vector<std::string> row;
      for (const auto& p : g.parameters) row.push_back(format_full(p.second));
      if (show_n) row.push_back(fixed(g.summary.mean_phase2_size, 0));
      row.push_back(coef);
      for (const auto& e : estimators) {
        const auto it = std::find_if(g.summary.cells.begin(), g.summary.cells.end(), [&](const SummaryCell& c) {
          return c.estimator == e && c.coefficient == coef;
        });
        if (it == g.summary.cells.end()) {
          row.insert(row.end(), {"", ""});
        } else {
          row.push_back(opt(it->emp_se, 3));
          row.push_back(it->count > 0 ? fixed(it->rmse) : "NA");
        }
      }
      rows.push_back(row);
    }
  }
  std::string md = render_table(rows, TableFormat::markdown);
  std::size_t fails = 0;
  for (const auto& g : results) fails += g.summary.failure_log.size();
  if (fails > 0) md += "\nEstimator failures: " + std::to_string(fails) + " (see summary.csv counts)\n";
  return md;
}

}  // namespace twophase
