#pragma once

#include <map>
#include <vector>

#include <Eigen/Dense>

namespace twophase {

struct SmootherOptions {
  double bandwidth_factor = 1.06;   // h_j = factor * sd_j * m^(-1/5)
  double truncation = 6.0;          // kernel ignored beyond this many bandwidths
  std::size_t max_discrete_levels = 10;  // columns with at most this many values are grouped
  std::vector<bool> force_continuous;     // per column: smooth as continuous regardless
};

// Design-weighted local-linear regression with a Gaussian product kernel
// over continuous columns. Columns with few distinct values are treated as
// categorical: the fit is done separately within each level combination,
// and reduces to exact weighted group means when no continuous column is
// left.
class LocalLinearSmoother {
 public:
  LocalLinearSmoother(Eigen::MatrixXd points, Eigen::VectorXd weights,
                      SmootherOptions options = {});

  // responses: m x r, rows aligned with the training points.
  // Returns one row per evaluation point.
  Eigen::MatrixXd smooth(const Eigen::MatrixXd& responses, const Eigen::MatrixXd& eval) const;
  // As above; where the local-linear estimate of column c falls below
  // floor(c) the local-constant estimate is returned instead.
  Eigen::MatrixXd smooth(const Eigen::MatrixXd& responses, const Eigen::MatrixXd& eval,
                         const Eigen::RowVectorXd& floor) const;

  const Eigen::VectorXd& bandwidths() const noexcept { return bandwidth_; }
  const std::vector<bool>& discrete() const noexcept { return discrete_; }

 private:
  struct Group {
    std::vector<Eigen::Index> members;  // sorted by the first continuous column
    Eigen::VectorXd sorted_key;         // first continuous coordinate of members
  };

  Eigen::MatrixXd points_;
  Eigen::VectorXd weights_;
  SmootherOptions options_;
  std::vector<bool> discrete_;
  std::vector<Eigen::Index> continuous_;
  Eigen::VectorXd bandwidth_;
  std::map<std::vector<double>, Group> groups_;

  std::vector<double> group_key(const Eigen::Ref<const Eigen::RowVectorXd>& row) const;
};

}  // namespace twophase
