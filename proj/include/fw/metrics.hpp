#pragma once

#include <Eigen/Dense>

#include "fw/ortho.hpp"
#include "fw/param_vector.hpp"

namespace fw {

/// First-order Markov signal model with unit variance and correlation rho.
struct MarkovModel {
  double rho = 0.95;
  int size = 8;
};

/// Covariance r_mn = rho^|m-n|, symmetric Toeplitz with unit diagonal.
Eigen::MatrixXd markov_covariance(double rho, int n);  // throws std::domain_error on rho outside (0,1)
RealMat8 markov_covariance8(double rho = 0.95);

/// epsilon = pi * ||C8 - c_hat||_F^2.
double total_error_energy(const RealMat8& c_hat);

/// MSE = tr((C8 - c_hat) R_x (C8 - c_hat)^T) / 8.
double mse(const RealMat8& c_hat, const RealMat8& r_x);

/// Unified coding gain in dB; h_k rows of c_hat, g_k rows of its true inverse:
/// Cg = -(10/8) sum_k log10(A_k B_k), A_k = su[(h_k^T h_k) o R_x], B_k = ||g_k||^2.
double unified_coding_gain(const RealMat8& c_hat, const RealMat8& c_hat_inv, const RealMat8& r_x);

/// eta = 100 * sum_m |R_X(m,m)| / sum_mn |R_X(m,n)| with R_X = c_hat R_x c_hat^T.
double transform_efficiency(const RealMat8& c_hat, const RealMat8& r_x);

/// A(alpha) = 14 + 2 max(1, theta(a1,a5)) + 4 max(1, theta(a0,a2,a4,a6)) - 6,
/// theta = nonzero count. In [14, 28] over P^7.
int addition_count(const ParamVector& alpha);

/// S(alpha) = 2 phi(a3) + 2 phi(a1,a5) + 4 phi(a0,a2,a4,a6),
/// phi = count of entries in {+-1/2, +-2}. In [0, 22] over P^7.
int shift_count(const ParamVector& alpha);

/// Objective 6-tuple of the multicriteria problem, minimized component-wise:
/// (epsilon, MSE, -Cg, -eta, A, S).
struct ObjectiveVector {
  double epsilon = 0.0;
  double mse = 0.0;
  double neg_cg = 0.0;
  double neg_eta = 0.0;
  int adds = 0;
  int shifts = 0;
  bool counters_in_p = true;  // false when alpha leaves P^7 (A/S formulas are nominal only)
};

/// Scores make_approximation(alpha); Cg uses the true inverse of c_hat.
ObjectiveVector objective_vector(const ParamVector& alpha, const MarkovModel& model = {});

/// Scores an explicit approximation (same pipeline, already-built c_hat).
ObjectiveVector objective_vector(const Approximation& app, const MarkovModel& model = {});

}  // namespace fw
