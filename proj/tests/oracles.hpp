#pragma once

// Independent reference computations shared by the unit tests and the
// acceptance runner. Each is written from the defining formula, not from
// the library's implementation.

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "test_support.hpp"
#include "twophase/estimators.hpp"
#include "twophase/raking.hpp"

namespace twophase::testing {

// ---------------------------------------------------------------------------
// Populations
// ---------------------------------------------------------------------------

// Y = 1 + X + Z + e with auxiliary A = X + noise; X is phase-2.
inline PopulationFrame small_population(std::size_t big_n, std::mt19937_64& rng, bool binary = false) {
  std::normal_distribution<double> nd;
  std::vector<double> y(big_n), x(big_n), z(big_n), a(big_n);
  for (std::size_t i = 0; i < big_n; ++i) {
    z[i] = nd(rng);
    x[i] = 0.5 * z[i] + nd(rng);
    a[i] = x[i] + 0.5 * nd(rng);
    const double eta = 0.2 + 0.8 * x[i] + 0.5 * z[i];
    if (binary) {
      y[i] = std::uniform_real_distribution<double>(0.0, 1.0)(rng) < 1.0 / (1.0 + std::exp(-eta)) ? 1.0 : 0.0;
    } else {
      y[i] = eta + (0.5 + 0.5 * std::abs(z[i])) * nd(rng);
    }
  }
  return make_frame(y, {{"Z", z}}, {{"X", x}}, {{"A", a}});
}

// Unweighted sandwich J^{-1} (sum U U') J^{-T} of a full-data fit.
inline Eigen::MatrixXd iid_sandwich(const GlmFit& fit) {
  const Eigen::MatrixXd& x = fit.design;
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(x.cols(), x.cols());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(x.cols(), x.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    const double mu = fit.fitted(i);
    const double dmu = fit.family == Family::binomial_logit ? mu * (1.0 - mu) : 1.0;
    const Eigen::VectorXd xi = x.row(i).transpose();
    j += dmu * xi * xi.transpose();
    const Eigen::VectorXd u = xi * (fit.response(i) - mu);
    m += u * u.transpose();
  }
  const Eigen::MatrixXd ji = j.inverse();
  return ji * m * ji.transpose();
}

// From-scratch variance: per-unit normalisation, explicit double sum over
// included pairs with exact joint inclusion probabilities.
inline Eigen::MatrixXd nested_loop_variance(const GlmFit& fit, const TwoPhaseDesign& design, const WeightSet& w) {
  const auto n = static_cast<Eigen::Index>(w.rows.size());
  const Eigen::Index p = fit.design.cols();
  const double big_n = static_cast<double>(design.n_rows());
  std::vector<Eigen::VectorXd> u(static_cast<std::size_t>(n));
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(p, p);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::VectorXd xk = fit.design.row(k).transpose();
    double mu = 0.0;
    for (Eigen::Index c = 0; c < p; ++c) mu += xk(c) * fit.beta(c);
    double dmu = 1.0;
    if (fit.family == Family::binomial_logit) {
      mu = 1.0 / (1.0 + std::exp(-mu));
      dmu = mu * (1.0 - mu);
    }
    u[static_cast<std::size_t>(k)] = xk * (fit.response(k) - mu);
    const double wk = w.base(k) * w.stabiliser(k) * w.raking(k);
    j += (wk * dmu / big_n) * xk * xk.transpose();
  }
  // Residuals on the calibration auxiliaries via the normal equations.
  std::vector<Eigen::VectorXd> r = u;
  if (w.raked()) {
    const Eigen::Index k_aux = w.calibration_aux.cols();
    Eigen::MatrixXd gg = Eigen::MatrixXd::Zero(k_aux, k_aux);
    Eigen::MatrixXd gu = Eigen::MatrixXd::Zero(k_aux, p);
    for (Eigen::Index k = 0; k < n; ++k) {
      const double c = w.base(k) * w.raking(k) * w.stabiliser(k) * w.stabiliser(k);
      const Eigen::VectorXd gk = w.calibration_aux.row(k).transpose();
      gg += c * gk * gk.transpose();
      gu += c * gk * u[static_cast<std::size_t>(k)].transpose();
    }
    const Eigen::MatrixXd b = gg.ldlt().solve(gu);
    for (Eigen::Index k = 0; k < n; ++k) {
      r[static_cast<std::size_t>(k)] -= b.transpose() * w.calibration_aux.row(k).transpose();
    }
  }
  Eigen::MatrixXd meat = Eigen::MatrixXd::Zero(p, p);
  for (Eigen::Index k = 0; k < n; ++k) {
    const std::size_t i = w.rows[static_cast<std::size_t>(k)];
    const double q = w.stabiliser(k);
    meat += (q * q / design.pi(i)) * u[static_cast<std::size_t>(k)] * u[static_cast<std::size_t>(k)].transpose();
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index l = 0; l < n; ++l) {
      const std::size_t i = w.rows[static_cast<std::size_t>(k)];
      const std::size_t jj = w.rows[static_cast<std::size_t>(l)];
      const double pij = design.joint_inclusion(i, jj);
      const double delta = pij - design.pi(i) * design.pi(jj);
      if (delta == 0.0) continue;
      const double c = delta / pij * w.raking(k) * w.raking(l) * w.base(k) * w.base(l) * w.stabiliser(k) *
                       w.stabiliser(l);
      meat += c * r[static_cast<std::size_t>(k)] * r[static_cast<std::size_t>(l)].transpose();
    }
  }
  meat /= big_n * big_n;
  const Eigen::MatrixXd ji = j.inverse();
  return ji * meat * ji.transpose();
}

// ---------------------------------------------------------------------------
// Least squares
// ---------------------------------------------------------------------------

inline Eigen::MatrixXd with_intercept(const Eigen::MatrixXd& x) {
  Eigen::MatrixXd out(x.rows(), x.cols() + 1);
  out.col(0).setOnes();
  out.rightCols(x.cols()) = x;
  return out;
}

inline std::vector<std::string> names(Eigen::Index p) {
  std::vector<std::string> out{"(Intercept)"};
  for (Eigen::Index k = 1; k < p; ++k) out.push_back("x" + std::to_string(k));
  return out;
}

// Weighted least squares by explicit Gaussian elimination on the normal
// equations (X'WX) b = X'Wy, written out without Eigen's solvers.
inline std::vector<double> normal_equations(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                                     const Eigen::VectorXd& w) {
  const auto p = static_cast<std::size_t>(x.cols());
  std::vector<std::vector<double>> a(p, std::vector<double>(p + 1, 0.0));
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (std::size_t r = 0; r < p; ++r) {
      for (std::size_t c = 0; c < p; ++c) a[r][c] += w(i) * x(i, r) * x(i, c);
      a[r][p] += w(i) * x(i, r) * y(i);
    }
  }
  for (std::size_t k = 0; k < p; ++k) {
    std::size_t piv = k;
    for (std::size_t r = k + 1; r < p; ++r) {
      if (std::abs(a[r][k]) > std::abs(a[piv][k])) piv = r;
    }
    std::swap(a[k], a[piv]);
    for (std::size_t r = 0; r < p; ++r) {
      if (r == k) continue;
      const double f = a[r][k] / a[k][k];
      for (std::size_t c = k; c <= p; ++c) a[r][c] -= f * a[k][c];
    }
  }
  std::vector<double> b(p);
  for (std::size_t k = 0; k < p; ++k) b[k] = a[k][p] / a[k][k];
  return b;
}

// ---------------------------------------------------------------------------
// Calibration
// ---------------------------------------------------------------------------

struct Toy {
  Eigen::MatrixXd aux;
  std::vector<std::size_t> included;
  Eigen::VectorXd d;
};

// N units in one stratum with every other unit sampled; G = [1, x, ...].
inline Toy make_toy(int big_n, int extra_cols, std::mt19937_64& rng, bool constant = true) {
  std::normal_distribution<double> nd;
  Toy t;
  const int k = extra_cols + (constant ? 1 : 0);
  t.aux.resize(big_n, k);
  for (int i = 0; i < big_n; ++i) {
    int c = 0;
    if (constant) t.aux(i, c++) = 1.0;
    for (int j = 0; j < extra_cols; ++j) t.aux(i, c++) = nd(rng) + 0.3 * j;
  }
  for (int i = 0; i < big_n; i += 2) t.included.push_back(static_cast<std::size_t>(i));
  t.d = Eigen::VectorXd::Constant(static_cast<Eigen::Index>(t.included.size()),
                                  static_cast<double>(big_n) / static_cast<double>(t.included.size()));
  return t;
}

inline Eigen::VectorXd calibrated_totals(const CalibrationProblem& p, const Eigen::VectorXd& g) {
  Eigen::VectorXd lhs = Eigen::VectorXd::Zero(p.aux.cols());
  for (std::size_t r = 0; r < p.included.size(); ++r) {
    const auto i = static_cast<Eigen::Index>(p.included[r]);
    const auto rr = static_cast<Eigen::Index>(r);
    lhs += p.base_weights(rr) * g(rr) * p.stabilisers(i) * p.aux.row(i).transpose();
  }
  return lhs;
}

// Convex dual of exponential calibration; its gradient is the constraint gap.
double dual(const CalibrationProblem& p, const Eigen::Vector2d& alpha) {
  double total = -alpha.dot(p.target);
  for (std::size_t r = 0; r < p.included.size(); ++r) {
    const auto i = static_cast<Eigen::Index>(p.included[r]);
    const Eigen::Vector2d gi = p.aux.row(i).transpose();
    total += p.base_weights(static_cast<Eigen::Index>(r)) * p.stabilisers(i) * std::exp(alpha.dot(gi));
  }
  return total;
}

}  // namespace twophase::testing
