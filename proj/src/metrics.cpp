#include "fw/metrics.hpp"

#include <cmath>

namespace fw {

Eigen::MatrixXd markov_covariance(double rho, int n) {
  if (!(rho > 0.0 && rho < 1.0)) throw std::domain_error("markov_covariance: rho must be in (0,1)");
  if (n < 1) throw std::domain_error("markov_covariance: size must be positive");
  Eigen::MatrixXd r(n, n);
  for (int m = 0; m < n; ++m)
    for (int k = 0; k < n; ++k) r(m, k) = std::pow(rho, std::abs(m - k));
  return r;
}

RealMat8 markov_covariance8(double rho) { return markov_covariance(rho, 8); }

double total_error_energy(const RealMat8& c_hat) {
  return M_PI * (exact_dct() - c_hat).squaredNorm();
}

double mse(const RealMat8& c_hat, const RealMat8& r_x) {
  RealMat8 d = exact_dct() - c_hat;
  return (d * r_x * d.transpose()).trace() / 8.0;
}

double unified_coding_gain(const RealMat8& c_hat, const RealMat8& c_hat_inv, const RealMat8& r_x) {
  double log_sum = 0.0;
  for (int k = 0; k < 8; ++k) {
    RealVec8 h = c_hat.row(k).transpose();
    double a_k = h.dot(r_x * h);  // sum of (h^T h) o R_x
    double b_k = c_hat_inv.row(k).squaredNorm();
    if (!(a_k > 0.0) || !(b_k > 0.0))
      throw std::domain_error("unified_coding_gain: degenerate transform row");
    log_sum += std::log10(a_k * b_k);
  }
  return -10.0 / 8.0 * log_sum;
}

double transform_efficiency(const RealMat8& c_hat, const RealMat8& r_x) {
  RealMat8 r_big = c_hat * r_x * c_hat.transpose();
  double diag = r_big.diagonal().cwiseAbs().sum();
  double all = r_big.cwiseAbs().sum();
  return 100.0 * diag / all;
}

namespace {

int theta(std::initializer_list<Rational> v) {
  int n = 0;
  for (const auto& x : v)
    if (!x.is_zero()) ++n;
  return n;
}

int phi(std::initializer_list<Rational> v) {
  int n = 0;
  for (const auto& x : v) {
    Rational m = abs(x);
    if (m == Rational(1, 2) || m == Rational(2)) ++n;
  }
  return n;
}

}  // namespace

int addition_count(const ParamVector& a) {
  int pair = std::max(1, theta({a[1], a[5]}));
  int quad = std::max(1, theta({a[0], a[2], a[4], a[6]}));
  return 14 + 2 * pair + 4 * quad - 6;
}

int shift_count(const ParamVector& a) {
  return 2 * phi({a[3]}) + 2 * phi({a[1], a[5]}) + 4 * phi({a[0], a[2], a[4], a[6]});
}

ObjectiveVector objective_vector(const Approximation& app, const MarkovModel& model) {
  RealMat8 r_x = markov_covariance8(model.rho);
  RealMat8 inv = approximation_inverse(app);
  ObjectiveVector o;
  o.epsilon = total_error_energy(app.c_hat);
  o.mse = mse(app.c_hat, r_x);
  o.neg_cg = -unified_coding_gain(app.c_hat, inv, r_x);
  o.neg_eta = -transform_efficiency(app.c_hat, r_x);
  o.adds = addition_count(app.alpha);
  o.shifts = shift_count(app.alpha);
  o.counters_in_p = app.alpha.is_low_complexity();
  return o;
}

ObjectiveVector objective_vector(const ParamVector& alpha, const MarkovModel& model) {
  return objective_vector(make_approximation(alpha), model);
}

}  // namespace fw
