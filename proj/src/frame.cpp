#include "twophase/frame.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

#include "twophase/errors.hpp"

namespace twophase {

// -------------------------------------------------------------------------
// Column
// -------------------------------------------------------------------------

Column::Column(std::string name, std::vector<double> values)
    : name_(std::move(name)), values_(std::move(values)), observed_(values_.size(), 1) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw DomainError("column '" + name_ + "' has a non-finite value at row " +
                        std::to_string(i) + "; use the observation mask for missing data");
    }
  }
}

Column::Column(std::string name, std::vector<double> values, std::vector<bool> observed)
    : name_(std::move(name)), values_(std::move(values)) {
  if (observed.size() != values_.size()) {
    throw InconsistentDesignError("column '" + name_ + "': mask length differs from values");
  }
  observed_.resize(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) {
    observed_[i] = observed[i] ? 1 : 0;
    if (!observed[i]) {
      ++n_missing_;
      values_[i] = std::numeric_limits<double>::quiet_NaN();
    } else if (!std::isfinite(values_[i])) {
      throw DomainError("column '" + name_ + "' has a non-finite value at row " +
                        std::to_string(i));
    }
  }
}

double Column::at(std::size_t i) const {
  if (observed_.at(i) == 0) {
    throw MissingValueError("column '" + name_ + "' is missing at row " + std::to_string(i));
  }
  return values_[i];
}

Eigen::VectorXd Column::gather(std::span<const std::size_t> rows) const {
  Eigen::VectorXd out(static_cast<Eigen::Index>(rows.size()));
  for (std::size_t k = 0; k < rows.size(); ++k) out(static_cast<Eigen::Index>(k)) = at(rows[k]);
  return out;
}

Eigen::VectorXd Column::to_vector() const {
  if (!fully_observed()) {
    throw MissingValueError("column '" + name_ + "' has " + std::to_string(n_missing_) +
                            " missing values");
  }
  return Eigen::Map<const Eigen::VectorXd>(values_.data(), static_cast<Eigen::Index>(values_.size()));
}

const char* to_string(ColumnRole role) {
  switch (role) {
    case ColumnRole::outcome: return "outcome";
    case ColumnRole::phase1: return "phase1";
    case ColumnRole::phase2: return "phase2";
    case ColumnRole::auxiliary: return "auxiliary";
  }
  return "?";
}

// -------------------------------------------------------------------------
// PopulationFrame
// -------------------------------------------------------------------------

PopulationFrame::PopulationFrame(FrameColumns columns) : outcome_(std::move(columns.outcome)) {
  n_rows_ = outcome_.size();
  if (n_rows_ == 0) throw InconsistentDesignError("frame must have at least one row");
  if (!outcome_.fully_observed()) {
    throw MissingValueError("outcome column '" + outcome_.name() + "' must be fully observed");
  }
  auto add = [&](std::vector<Column>& group, ColumnRole role) {
    for (auto& c : group) {
      if (c.size() != n_rows_) {
        throw InconsistentDesignError("column '" + c.name() + "' has length " +
                                      std::to_string(c.size()) + ", expected " +
                                      std::to_string(n_rows_));
      }
      if (role != ColumnRole::phase2 && !c.fully_observed()) {
        throw MissingValueError("phase-1 column '" + c.name() + "' has missing values");
      }
      if (c.name() == outcome_.name() || has_column(c.name())) {
        throw InconsistentDesignError("duplicate column name '" + c.name() + "'");
      }
      columns_.push_back(std::move(c));
      roles_.push_back(role);
    }
  };
  add(columns.phase1, ColumnRole::phase1);
  add(columns.phase2, ColumnRole::phase2);
  add(columns.auxiliary, ColumnRole::auxiliary);

  if (columns.row_id.empty()) {
    row_id_.resize(n_rows_);
    std::iota(row_id_.begin(), row_id_.end(), std::int64_t{0});
  } else if (columns.row_id.size() != n_rows_) {
    throw InconsistentDesignError("row_id length differs from frame length");
  } else {
    row_id_ = std::move(columns.row_id);
  }
}

bool PopulationFrame::has_column(const std::string& name) const {
  if (name == outcome_.name()) return true;
  return std::any_of(columns_.begin(), columns_.end(),
                     [&](const Column& c) { return c.name() == name; });
}

const Column& PopulationFrame::column(const std::string& name) const {
  if (name == outcome_.name()) return outcome_;
  for (const auto& c : columns_) {
    if (c.name() == name) return c;
  }
  throw DomainError("no column named '" + name + "'");
}

ColumnRole PopulationFrame::role(const std::string& name) const {
  if (name == outcome_.name()) return ColumnRole::outcome;
  for (std::size_t k = 0; k < columns_.size(); ++k) {
    if (columns_[k].name() == name) return roles_[k];
  }
  throw DomainError("no column named '" + name + "'");
}

std::vector<std::string> PopulationFrame::column_names(ColumnRole r) const {
  std::vector<std::string> out;
  if (r == ColumnRole::outcome) {
    out.push_back(outcome_.name());
    return out;
  }
  for (std::size_t k = 0; k < columns_.size(); ++k) {
    if (roles_[k] == r) out.push_back(columns_[k].name());
  }
  return out;
}

// -------------------------------------------------------------------------
// TwoPhaseDesign
// -------------------------------------------------------------------------

TwoPhaseDesign::TwoPhaseDesign(std::vector<int> stratum_of, std::vector<bool> included)
    : stratum_of_(std::move(stratum_of)), included_(std::move(included)) {
  const std::size_t n = stratum_of_.size();
  if (included_.size() != n) {
    throw InconsistentDesignError("stratum and inclusion vectors differ in length");
  }
  if (n == 0) throw InconsistentDesignError("design must cover at least one row");

  std::map<int, std::size_t> position;
  for (int label : stratum_of_) position.emplace(label, 0);
  for (auto& [label, pos] : position) {
    pos = strata_.size();
    strata_.push_back(StratumCount{label, 0, 0});
  }
  stratum_index_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t h = position.at(stratum_of_[i]);
    stratum_index_[i] = h;
    strata_[h].population += 1;
    if (included_[i]) {
      strata_[h].sampled += 1;
      included_rows_.push_back(i);
    }
  }
  if (included_rows_.empty()) throw InconsistentDesignError("no rows are included at phase 2");

  pi_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = strata_[stratum_index_[i]];
    pi_[i] = static_cast<double>(s.sampled) / static_cast<double>(s.population);
  }
}

double TwoPhaseDesign::design_weight(std::size_t i) const {
  if (!included_.at(i)) {
    throw DomainError("design weight requested for row " + std::to_string(i) +
                      " which is not in the phase-2 sample");
  }
  return 1.0 / pi_[i];
}

Eigen::VectorXd TwoPhaseDesign::included_weights() const {
  Eigen::VectorXd d(static_cast<Eigen::Index>(included_rows_.size()));
  for (std::size_t k = 0; k < included_rows_.size(); ++k) {
    d(static_cast<Eigen::Index>(k)) = 1.0 / pi_[included_rows_[k]];
  }
  return d;
}

double TwoPhaseDesign::joint_inclusion(std::size_t i, std::size_t j) const {
  if (!included_.at(i) || !included_.at(j)) {
    throw DomainError("joint inclusion is defined for included rows only");
  }
  if (i == j) return pi_[i];
  const std::size_t hi = stratum_index_[i];
  if (hi != stratum_index_[j]) return pi_[i] * pi_[j];
  const auto& s = strata_[hi];
  const double nh = static_cast<double>(s.sampled);
  const double Nh = static_cast<double>(s.population);
  return nh * (nh - 1.0) / (Nh * (Nh - 1.0));
}

TwoPhaseDesign attach_design(const PopulationFrame& frame, std::vector<int> stratum_of,
                             std::vector<bool> included) {
  if (stratum_of.size() != frame.n_rows() || included.size() != frame.n_rows()) {
    throw InconsistentDesignError("design vectors must have one entry per frame row (" +
                                  std::to_string(frame.n_rows()) + ")");
  }
  TwoPhaseDesign design(std::move(stratum_of), std::move(included));
  for (const auto& name : frame.column_names(ColumnRole::phase2)) {
    const Column& c = frame.column(name);
    for (std::size_t i : design.included_rows()) {
      if (!c.observed(i)) {
        throw InconsistentDesignError("phase-2 column '" + name + "' is missing on included row " +
                                      std::to_string(i));
      }
    }
  }
  return design;
}

// -------------------------------------------------------------------------
// ModelSpec
// -------------------------------------------------------------------------

const char* to_string(Family family) {
  switch (family) {
    case Family::gaussian_identity: return "gaussian";
    case Family::binomial_logit: return "binomial";
  }
  return "?";
}

Family parse_family(const std::string& text) {
  if (text == "gaussian" || text == "gaussian-identity") return Family::gaussian_identity;
  if (text == "binomial" || text == "binomial-logit") return Family::binomial_logit;
  throw DomainError("unknown family '" + text + "'");
}

std::vector<std::string> ModelSpec::coefficient_names() const {
  std::vector<std::string> names{"(Intercept)"};
  names.insert(names.end(), regressors.begin(), regressors.end());
  return names;
}

void validate(const ModelSpec& spec, const PopulationFrame& frame) {
  if (spec.outcome != frame.outcome().name()) {
    throw DomainError("model outcome '" + spec.outcome + "' is not the frame outcome '" +
                      frame.outcome().name() + "'");
  }
  for (const auto& r : spec.regressors) {
    if (!frame.has_column(r)) throw DomainError("regressor '" + r + "' is not in the frame");
    if (r == spec.outcome) throw DomainError("outcome cannot also be a regressor");
  }
  if (spec.offset && spec.offset->size() != frame.n_rows()) {
    throw DomainError("offset length differs from frame length");
  }
  if (spec.family == Family::binomial_logit) {
    const Column& y = frame.outcome();
    for (std::size_t i = 0; i < y.size(); ++i) {
      const double v = y.at(i);
      if (v != 0.0 && v != 1.0) {
        throw DomainError("binomial outcome must be 0/1; row " + std::to_string(i) + " has " +
                          std::to_string(v));
      }
    }
  }
}

std::vector<std::string> phase1_regressors(const ModelSpec& spec, const PopulationFrame& frame) {
  std::vector<std::string> out;
  for (const auto& r : spec.regressors) {
    if (frame.is_phase1(r)) out.push_back(r);
  }
  return out;
}

std::vector<std::string> phase2_regressors(const ModelSpec& spec, const PopulationFrame& frame) {
  std::vector<std::string> out;
  for (const auto& r : spec.regressors) {
    if (!frame.is_phase1(r)) out.push_back(r);
  }
  return out;
}

Eigen::MatrixXd design_matrix(const PopulationFrame& frame, const ModelSpec& spec,
                              std::span<const std::size_t> rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXd x(n, static_cast<Eigen::Index>(spec.n_coefficients()));
  x.col(0).setOnes();
  for (std::size_t k = 0; k < spec.regressors.size(); ++k) {
    x.col(static_cast<Eigen::Index>(k + 1)) = frame.column(spec.regressors[k]).gather(rows);
  }
  return x;
}

std::vector<std::size_t> all_rows(std::size_t n) {
  std::vector<std::size_t> rows(n);
  std::iota(rows.begin(), rows.end(), std::size_t{0});
  return rows;
}

}  // namespace twophase
