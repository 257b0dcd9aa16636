#include "fw/inversion.hpp"

namespace fw {

Rational lambda_of(const ParamVector& a) {
  const Rational &a0 = a[0], &a2 = a[2], &a4 = a[4], &a6 = a[6];
  Rational s06 = a0 * a0 + a6 * a6;
  Rational s24 = a2 * a2 + a4 * a4;
  return s06 * s06 + s24 * s24 + Rational(4) * (a0 * a2 - a4 * a6) * (a2 * a6 + a0 * a4);
}

bool invertibility(const ParamVector& a) {
  if (a[3].is_zero()) return false;
  if ((a[1] * a[1] + a[5] * a[5]).is_zero()) return false;
  if ((a[0] * a[0] + a[2] * a[2] + a[4] * a[4] + a[6] * a[6]).is_zero()) return false;
  return !lambda_of(a).is_zero();
}

InverseParams inverse_params(const ParamVector& a) {
  if (!invertibility(a)) throw NotInvertibleError("transform is not invertible for alpha = " + a.str());
  const Rational &a0 = a[0], &a1 = a[1], &a2 = a[2], &a3 = a[3], &a4 = a[4], &a5 = a[5], &a6 = a[6];
  const Rational lambda = lambda_of(a);
  const Rational p15 = a1 * a1 + a5 * a5;
  const Rational two(2);

  ParamVector ap;
  ap[0] = (a0 * a6 * a6 + (a2 * a2 - a4 * a4) * a6 + two * a0 * a2 * a4 + a0 * a0 * a0) / lambda;
  ap[1] = a1 / p15;
  ap[2] = (a2 * a4 * a4 + (a0 * a0 - a6 * a6) * a4 + two * a0 * a2 * a6 + a2 * a2 * a2) / lambda;
  ap[3] = a3.reciprocal();
  ap[4] = (a4 * a2 * a2 + (a0 * a0 - a6 * a6) * a2 - two * a0 * a4 * a6 + a4 * a4 * a4) / lambda;
  ap[5] = a5 / p15;
  ap[6] = (a6 * a0 * a0 + (a2 * a2 - a4 * a4) * a0 - two * a2 * a4 * a6 + a6 * a6 * a6) / lambda;
  return {ap, lambda};
}

namespace {

ExactMat8 d0_matrix() {
  const Rational d[8] = {Rational(1, 8), Rational(1, 2), Rational(1, 4), Rational(1, 2),
                         Rational(1, 8), Rational(1, 2), Rational(1, 4), Rational(1, 2)};
  ExactMat8 m = ExactMat8::Zero();
  for (int i = 0; i < 8; ++i) m(i, i) = d[i];
  return m;
}

}  // namespace

ExactMat8 inverse_matrix(const ParamVector& alpha) {
  const auto ip = inverse_params(alpha);
  const auto& s = structural_matrices();
  return ExactMat8(s.b3 * s.b2 * s.b1 * k_matrix(ip.alpha_prime).transpose() * s.p8.transpose() *
                   d0_matrix());
}

ParamVector transpose_inverse_params(const ParamVector& alpha) {
  const auto ip = inverse_params(alpha);
  const auto& ap = ip.alpha_prime;
  ParamVector app;
  const Rational half(1, 2), quarter(1, 4), eighth(1, 8);
  app[0] = ap[0] * half;
  app[1] = ap[1] * quarter;
  app[2] = ap[2] * half;
  app[3] = ap[3] * eighth;
  app[4] = ap[4] * half;
  app[5] = ap[5] * quarter;
  app[6] = ap[6] * half;
  return app;
}

bool low_complexity_inverse(const ParamVector& alpha, bool relax_dyadic) {
  if (!invertibility(alpha)) return false;
  const ParamVector ap = inverse_params(alpha).alpha_prime;
  if (ap.is_low_complexity()) return true;
  if (!relax_dyadic) return false;
  for (int k = -8; k <= 8; ++k) {
    Rational scale = k >= 0 ? Rational(std::int64_t(1) << k) : Rational(1, std::int64_t(1) << -k);
    bool ok = true;
    for (const auto& v : ap)
      if (!ParamVector::in_low_complexity_set(v * scale)) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

}  // namespace fw
