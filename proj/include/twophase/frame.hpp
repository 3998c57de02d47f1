#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace twophase {

// -------------------------------------------------------------------------
// Columns
// -------------------------------------------------------------------------

// A named real column. Missing entries are tracked by an explicit
// observation mask; reading a missing entry throws MissingValueError.
class Column {
 public:
  Column() = default;
  Column(std::string name, std::vector<double> values);
  Column(std::string name, std::vector<double> values, std::vector<bool> observed);

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return values_.size(); }
  bool observed(std::size_t i) const { return observed_.at(i) != 0; }
  bool fully_observed() const noexcept { return n_missing_ == 0; }
  std::size_t missing_count() const noexcept { return n_missing_; }

  double at(std::size_t i) const;
  Eigen::VectorXd gather(std::span<const std::size_t> rows) const;
  // Only valid for fully observed columns.
  Eigen::VectorXd to_vector() const;

 private:
  std::string name_;
  std::vector<double> values_;
  std::vector<char> observed_;
  std::size_t n_missing_ = 0;
};

enum class ColumnRole { outcome, phase1, phase2, auxiliary };

const char* to_string(ColumnRole role);

// -------------------------------------------------------------------------
// PopulationFrame
// -------------------------------------------------------------------------

struct FrameColumns {
  Column outcome;
  std::vector<Column> phase1;     // model covariates observed on everyone
  std::vector<Column> phase2;     // model covariates observed on the subsample
  std::vector<Column> auxiliary;  // phase-1 variables outside the model
  std::vector<std::int64_t> row_id;  // empty: 0..N-1
};

// Rectangular phase-1 data. Immutable once constructed.
class PopulationFrame {
 public:
  explicit PopulationFrame(FrameColumns columns);

  std::size_t n_rows() const noexcept { return n_rows_; }
  const Column& outcome() const noexcept { return outcome_; }
  const std::vector<std::int64_t>& row_id() const noexcept { return row_id_; }

  bool has_column(const std::string& name) const;
  const Column& column(const std::string& name) const;
  ColumnRole role(const std::string& name) const;
  bool is_phase1(const std::string& name) const { return role(name) != ColumnRole::phase2; }

  std::vector<std::string> column_names(ColumnRole role) const;

 private:
  std::size_t n_rows_ = 0;
  Column outcome_;
  std::vector<Column> columns_;
  std::vector<ColumnRole> roles_;
  std::vector<std::int64_t> row_id_;
};

// -------------------------------------------------------------------------
// TwoPhaseDesign
// -------------------------------------------------------------------------

struct StratumCount {
  int label = 0;
  std::size_t population = 0;  // N_h
  std::size_t sampled = 0;     // n_h
};

// Stratified simple random sampling without replacement at phase 2.
class TwoPhaseDesign {
 public:
  TwoPhaseDesign(std::vector<int> stratum_of, std::vector<bool> included);

  std::size_t n_rows() const noexcept { return stratum_of_.size(); }
  std::size_t n_included() const noexcept { return included_rows_.size(); }
  const std::vector<int>& stratum_of() const noexcept { return stratum_of_; }
  bool included(std::size_t i) const { return included_.at(i); }
  const std::vector<bool>& included_mask() const noexcept { return included_; }
  // Ascending row indices with R_i = 1.
  const std::vector<std::size_t>& included_rows() const noexcept { return included_rows_; }

  const std::vector<StratumCount>& strata() const noexcept { return strata_; }
  // Position of row i's stratum in strata().
  std::size_t stratum_index(std::size_t i) const { return stratum_index_.at(i); }

  double pi(std::size_t i) const { return pi_.at(i); }
  const std::vector<double>& pi() const noexcept { return pi_; }
  // d_i = 1/pi_i, only for included rows.
  double design_weight(std::size_t i) const;
  // Design weights aligned with included_rows().
  Eigen::VectorXd included_weights() const;

  // pi_ij for two included rows.
  double joint_inclusion(std::size_t i, std::size_t j) const;

 private:
  std::vector<int> stratum_of_;
  std::vector<bool> included_;
  std::vector<std::size_t> included_rows_;
  std::vector<StratumCount> strata_;
  std::vector<std::size_t> stratum_index_;
  std::vector<double> pi_;
};

TwoPhaseDesign attach_design(const PopulationFrame& frame, std::vector<int> stratum_of,
                             std::vector<bool> included);

// -------------------------------------------------------------------------
// ModelSpec
// -------------------------------------------------------------------------

enum class Family { gaussian_identity, binomial_logit };

const char* to_string(Family family);
Family parse_family(const std::string& text);

struct ModelSpec {
  Family family = Family::gaussian_identity;
  std::string outcome;
  std::vector<std::string> regressors;  // intercept is implicit and first
  std::optional<std::vector<double>> offset;  // length N when present

  // "(Intercept)" followed by the regressor names.
  std::vector<std::string> coefficient_names() const;
  std::size_t n_coefficients() const noexcept { return regressors.size() + 1; }
};

// Checks that columns exist and the outcome lies in the family's domain.
void validate(const ModelSpec& spec, const PopulationFrame& frame);

std::vector<std::string> phase1_regressors(const ModelSpec& spec, const PopulationFrame& frame);
std::vector<std::string> phase2_regressors(const ModelSpec& spec, const PopulationFrame& frame);

// Design matrix [1, regressors...] on the given rows.
Eigen::MatrixXd design_matrix(const PopulationFrame& frame, const ModelSpec& spec,
                              std::span<const std::size_t> rows);

std::vector<std::size_t> all_rows(std::size_t n);

}  // namespace twophase
