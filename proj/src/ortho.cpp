#include "fw/ortho.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace fw {

ExactMat8 gram_matrix(const ParamVector& alpha) {
  ExactMat8 t = fw_map(alpha);
  return ExactMat8(t * t.transpose());
}

bool diagonality_condition(const ParamVector& alpha) {
  ExactMat8 g = gram_matrix(alpha);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (i != j && !g(i, j).is_zero()) return false;
  return true;
}

bool diagonality_sufficient_condition(const ParamVector& a) {
  return a[0] * (a[2] - a[4]) == a[6] * (a[2] + a[4]);
}

RealMat8 spd_sqrt(const RealMat8& m) {
  Eigen::SelfAdjointEigenSolver<RealMat8> es(m);
  if (es.info() != Eigen::Success) throw std::domain_error("spd_sqrt: eigendecomposition failed");
  RealVec8 ev = es.eigenvalues();
  if (ev.minCoeff() <= 0.0) throw std::domain_error("spd_sqrt: matrix is not positive-definite");
  return RealMat8(es.eigenvectors() * ev.cwiseSqrt().asDiagonal() *
                  es.eigenvectors().transpose());
}

RealMat8 polar_scaling(const ParamVector& a) {
  if (!invertibility(a)) throw NotInvertibleError("polar_scaling requires invertible alpha");
  if (diagonality_condition(a)) {
    const double s0 = 1.0 / (std::pow(2.0, 1.5) * a[3].to_double());
    const double s1 =
        1.0 / std::sqrt(2.0 * (a[0] * a[0] + a[2] * a[2] + a[4] * a[4] + a[6] * a[6]).to_double());
    const double s2 = 1.0 / (2.0 * std::sqrt((a[1] * a[1] + a[5] * a[5]).to_double()));
    RealMat8 s = RealMat8::Zero();
    const double d[8] = {s0, s1, s2, s1, s0, s1, s2, s1};
    for (int i = 0; i < 8; ++i) s(i, i) = std::abs(d[i]);
    return s;
  }
  RealMat8 g = to_real(gram_matrix(a));
  return spd_sqrt(g.inverse());
}

RealMat8 near_ortho_scaling(const ParamVector& a) {
  if (!invertibility(a)) throw NotInvertibleError("near_ortho_scaling requires invertible alpha");
  ExactMat8 g = gram_matrix(a);
  RealMat8 s = RealMat8::Zero();
  for (int i = 0; i < 8; ++i) {
    if (g(i, i).is_zero()) throw std::domain_error("near_ortho_scaling: zero row in T");
    s(i, i) = 1.0 / std::sqrt(g(i, i).to_double());
  }
  return s;
}

Approximation make_approximation(const ParamVector& alpha) {
  Approximation app;
  app.alpha = alpha;
  app.low_matrix = fw_map(alpha);
  if (diagonality_condition(alpha)) {
    app.kind = ApproximationKind::orthogonal;
    app.scaling = polar_scaling(alpha);
  } else {
    app.kind = ApproximationKind::near_orthogonal;
    app.scaling = near_ortho_scaling(alpha);
  }
  app.c_hat = RealMat8(app.scaling * to_real(app.low_matrix));
  return app;
}

double deviation_from_diagonality(const RealMat8& m) {
  double total = m.squaredNorm();
  if (total == 0.0) throw std::domain_error("deviation_from_diagonality: zero matrix");
  double diag = m.diagonal().squaredNorm();
  return 1.0 - diag / total;
}

RealMat8 approximation_inverse(const Approximation& app) {
  RealMat8 t_inv = to_real(inverse_matrix(app.alpha));
  bool diagonal = true;
  for (int i = 0; i < 8 && diagonal; ++i)
    for (int j = 0; j < 8; ++j)
      if (i != j && app.scaling(i, j) != 0.0) {
        diagonal = false;
        break;
      }
  RealMat8 s_inv;
  if (diagonal) {
    s_inv = RealMat8::Zero();
    for (int i = 0; i < 8; ++i) s_inv(i, i) = 1.0 / app.scaling(i, i);
  } else {
    s_inv = app.scaling.inverse();
  }
  return RealMat8(t_inv * s_inv);
}

}  // namespace fw
