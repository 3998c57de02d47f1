#include "twophase/smoother.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

#include "twophase/errors.hpp"

namespace twophase {

LocalLinearSmoother::LocalLinearSmoother(Eigen::MatrixXd points, Eigen::VectorXd weights,
                                         SmootherOptions options)
    : points_(std::move(points)), weights_(std::move(weights)), options_(options) {
  const Eigen::Index m = points_.rows();
  const Eigen::Index dim = points_.cols();
  if (weights_.size() != m) throw DomainError("smoother weights must align with points");
  if (m < 2) throw DegenerateError("smoother needs at least two points");

  discrete_.assign(static_cast<std::size_t>(dim), false);
  bandwidth_ = Eigen::VectorXd::Zero(dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    std::set<double> levels;
    for (Eigen::Index i = 0; i < m && levels.size() <= options_.max_discrete_levels; ++i) {
      levels.insert(points_(i, j));
    }
    if (levels.size() < 2) {
      throw DegenerateError("conditioning column " + std::to_string(j) + " has zero variance");
    }
    const bool forced = static_cast<std::size_t>(j) < options_.force_continuous.size() &&
                        options_.force_continuous[static_cast<std::size_t>(j)];
    if (levels.size() <= options_.max_discrete_levels && !forced) {
      discrete_[static_cast<std::size_t>(j)] = true;
      continue;
    }
    continuous_.push_back(j);
    const double mean = points_.col(j).mean();
    const double sd = std::sqrt((points_.col(j).array() - mean).square().sum() /
                                static_cast<double>(m - 1));
    bandwidth_(j) = options_.bandwidth_factor * sd * std::pow(static_cast<double>(m), -0.2);
  }

  for (Eigen::Index i = 0; i < m; ++i) {
    groups_[group_key(points_.row(i))].members.push_back(i);
  }
  for (auto& [key, g] : groups_) {
    if (!continuous_.empty()) {
      const Eigen::Index c = continuous_.front();
      std::stable_sort(g.members.begin(), g.members.end(), [&](Eigen::Index a, Eigen::Index b) {
        return points_(a, c) < points_(b, c);
      });
      g.sorted_key.resize(static_cast<Eigen::Index>(g.members.size()));
      for (std::size_t k = 0; k < g.members.size(); ++k) {
        g.sorted_key(static_cast<Eigen::Index>(k)) = points_(g.members[k], c);
      }
    }
  }
}

std::vector<double> LocalLinearSmoother::group_key(
    const Eigen::Ref<const Eigen::RowVectorXd>& row) const {
  std::vector<double> key;
  for (std::size_t j = 0; j < discrete_.size(); ++j) {
    if (discrete_[j]) key.push_back(row(static_cast<Eigen::Index>(j)));
  }
  return key;
}

Eigen::MatrixXd LocalLinearSmoother::smooth(const Eigen::MatrixXd& responses,
                                            const Eigen::MatrixXd& eval) const {
  return smooth(responses, eval,
                Eigen::RowVectorXd::Constant(responses.cols(), -std::numeric_limits<double>::infinity()));
}

Eigen::MatrixXd LocalLinearSmoother::smooth(const Eigen::MatrixXd& responses, const Eigen::MatrixXd& eval,
                                            const Eigen::RowVectorXd& floor) const {
  const Eigen::Index r = responses.cols();
  if (floor.size() != r) throw DomainError("one floor per response column is required");
  // Local-linear estimates below the floor fall back to the local-constant
  // estimate, which stays within the range of the responses.
  auto guarded = [&](Eigen::RowVectorXd linear, const Eigen::RowVectorXd& constant) {
    for (Eigen::Index c = 0; c < r; ++c) {
      if (linear(c) < floor(c)) linear(c) = constant(c);
    }
    return linear;
  };
  if (responses.rows() != points_.rows()) {
    throw DomainError("smoother responses must align with points");
  }
  if (eval.cols() != points_.cols()) throw DomainError("evaluation dimension mismatch");
  const std::size_t n_cont = continuous_.size();
  Eigen::MatrixXd out(eval.rows(), r);

  for (Eigen::Index e = 0; e < eval.rows(); ++e) {
    auto it = groups_.find(group_key(eval.row(e)));
    if (it == groups_.end()) {
      throw DegenerateError("no smoothing data for the category of evaluation point " +
                            std::to_string(e));
    }
    const Group& g = it->second;

    if (n_cont == 0) {
      double s0 = 0.0;
      Eigen::RowVectorXd t0 = Eigen::RowVectorXd::Zero(r);
      for (Eigen::Index i : g.members) {
        s0 += weights_(i);
        t0 += weights_(i) * responses.row(i);
      }
      out.row(e) = t0 / s0;
      continue;
    }

    const Eigen::Index c0 = continuous_.front();
    const double h0 = bandwidth_(c0);
    const double x0 = eval(e, c0);
    const double* begin = g.sorted_key.data();
    const double* end = begin + g.sorted_key.size();
    const auto lo = std::lower_bound(begin, end, x0 - options_.truncation * h0) - begin;
    const auto hi = std::upper_bound(begin, end, x0 + options_.truncation * h0) - begin;
    const Eigen::Index len = hi - lo;

    if (n_cont == 1) {
      if (len > 0) {
        const Eigen::ArrayXd u = (g.sorted_key.segment(lo, len).array() - x0) / h0;
        Eigen::ArrayXd k = (-0.5 * u.square()).exp();
        for (Eigen::Index t = 0; t < len; ++t) k(t) *= weights_(g.members[static_cast<std::size_t>(lo + t)]);
        const double s0 = k.sum();
        const double s1 = (k * u).sum();
        const double s2 = (k * u.square()).sum();
        Eigen::RowVectorXd t0 = Eigen::RowVectorXd::Zero(r);
        Eigen::RowVectorXd t1 = Eigen::RowVectorXd::Zero(r);
        for (Eigen::Index t = 0; t < len; ++t) {
          const auto row = responses.row(g.members[static_cast<std::size_t>(lo + t)]);
          t0 += k(t) * row;
          t1 += (k(t) * u(t)) * row;
        }
        const double det = s0 * s2 - s1 * s1;
        if (s0 > 0.0 && det > 1e-10 * s0 * s2) {
          out.row(e) = guarded((s2 * t0 - s1 * t1) / det, t0 / s0);
          continue;
        }
        if (s0 > 0.0) {
          out.row(e) = t0 / s0;
          continue;
        }
      }
      // Outside the support of the group: nearest training point.
      const Eigen::Index pos = std::clamp<Eigen::Index>(lo, 0, g.sorted_key.size() - 1);
      Eigen::Index best = pos;
      if (pos > 0 && std::abs(g.sorted_key(pos - 1) - x0) < std::abs(g.sorted_key(pos) - x0)) {
        best = pos - 1;
      }
      out.row(e) = responses.row(g.members[static_cast<std::size_t>(best)]);
      continue;
    }

    // Two or more continuous columns: local-linear with a product kernel.
    const auto q = static_cast<Eigen::Index>(n_cont + 1);
    Eigen::MatrixXd s = Eigen::MatrixXd::Zero(q, q);
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(q, r);
    Eigen::VectorXd z(q);
    double s0 = 0.0;
    for (Eigen::Index pos = lo; pos < hi; ++pos) {
      const Eigen::Index i = g.members[static_cast<std::size_t>(pos)];
      double expo = 0.0;
      bool inside = true;
      z(0) = 1.0;
      for (std::size_t a = 0; a < n_cont; ++a) {
        const Eigen::Index c = continuous_[a];
        const double u = (points_(i, c) - eval(e, c)) / bandwidth_(c);
        if (std::abs(u) > options_.truncation) {
          inside = false;
          break;
        }
        expo += u * u;
        z(static_cast<Eigen::Index>(a + 1)) = u;
      }
      if (!inside) continue;
      const double k = weights_(i) * std::exp(-0.5 * expo);
      s0 += k;
      s.noalias() += k * z * z.transpose();
      t.noalias() += k * z * responses.row(i);
    }
    if (s0 > 0.0) {
      Eigen::LDLT<Eigen::MatrixXd> ldlt(s);
      const double min_pivot = ldlt.vectorD().minCoeff();
      if (ldlt.info() == Eigen::Success && min_pivot > 1e-10 * s0) {
        out.row(e) = guarded(ldlt.solve(t).row(0), t.row(0) / s0);
        continue;
      }
      out.row(e) = t.row(0) / s0;
      continue;
    }
    Eigen::Index best = g.members.front();
    double best_d = std::numeric_limits<double>::infinity();
    for (Eigen::Index i : g.members) {
      double d2 = 0.0;
      for (Eigen::Index c : continuous_) {
        const double u = (points_(i, c) - eval(e, c)) / bandwidth_(c);
        d2 += u * u;
      }
      if (d2 < best_d) {
        best_d = d2;
        best = i;
      }
    }
    out.row(e) = responses.row(best);
  }
  return out;
}

}  // namespace twophase
