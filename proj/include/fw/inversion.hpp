#pragma once

#include "fw/fwcore.hpp"
#include "fw/matrix.hpp"
#include "fw/param_vector.hpp"

namespace fw {

struct NotInvertibleError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Closed-form inverse parameters: K(alpha)^-1 = K(alpha')^T, with the common
/// denominator lambda of the quad-group entries.
struct InverseParams {
  ParamVector alpha_prime;
  Rational lambda;
};

/// lambda = (a0^2+a6^2)^2 + (a2^2+a4^2)^2 + 4 (a0 a2 - a4 a6)(a2 a6 + a0 a4).
Rational lambda_of(const ParamVector& alpha);

/// True iff a3 != 0, a1^2 + a5^2 != 0, and a0^2 + a2^2 + a4^2 + a6^2 != 0
/// (and, defensively, lambda != 0 — the alpha' formulas divide by it).
bool invertibility(const ParamVector& alpha);

InverseParams inverse_params(const ParamVector& alpha);  // throws NotInvertibleError

/// Exact inverse via the factorized form T^-1 = B3 B2 B1 K(alpha')^T P8^T D0,
/// D0 = diag(1/8, 1/2, 1/4, 1/2, 1/8, 1/2, 1/4, 1/2).
ExactMat8 inverse_matrix(const ParamVector& alpha);  // throws NotInvertibleError

/// Parameters of the transpose-inverse as a subspace member:
/// T^-T = FW(alpha''), alpha'' = (a0'/2, a1'/4, a2'/2, a3'/8, a4'/2, a5'/4, a6'/2).
ParamVector transpose_inverse_params(const ParamVector& alpha);

/// Inverse applied through the transposed flow graph: T^-1 = FW(alpha'')^T
/// = B3 B2 B1 K(alpha'')^T P8^T, so the stages run in reverse order with the
/// K block transposed. Exact for rational input.
template <typename Scalar>
Vec8<Scalar> fast_inverse(const ParamVector& alpha, const Vec8<Scalar>& x) {
  const ParamVector b = transpose_inverse_params(alpha);
  auto c = [](const Rational& r) { return detail::to_scalar<Scalar>(r); };

  // P8^T: undo the signed output permutation
  std::array<Scalar, 8> u{};
  u[0] = x[0];
  u[4] = -x[1];
  u[2] = x[2];
  u[5] = -x[3];
  u[1] = x[4];
  u[7] = -x[5];
  u[3] = x[6];
  u[6] = x[7];

  // K(alpha'')^T
  std::array<Scalar, 8> v{};
  v[0] = c(b[3]) * u[0];
  v[1] = c(b[3]) * u[1];
  v[2] = c(b[5]) * u[2] - c(b[1]) * u[3];
  v[3] = c(b[1]) * u[2] + c(b[5]) * u[3];
  v[4] = -c(b[6]) * u[4] + c(b[4]) * u[5] - c(b[0]) * u[6] - c(b[2]) * u[7];
  v[5] = -c(b[4]) * u[4] + c(b[0]) * u[5] + c(b[2]) * u[6] - c(b[6]) * u[7];
  v[6] = -c(b[2]) * u[4] + c(b[6]) * u[5] - c(b[4]) * u[6] + c(b[0]) * u[7];
  v[7] = -c(b[0]) * u[4] - c(b[2]) * u[5] + c(b[6]) * u[6] - c(b[4]) * u[7];

  // butterflies B1, B2, B3
  std::array<Scalar, 8> w = v;
  w[0] = v[0] + v[1];
  w[1] = v[0] - v[1];
  std::array<Scalar, 8> z = w;
  z[0] = w[0] + w[3];
  z[1] = w[1] + w[2];
  z[2] = w[1] - w[2];
  z[3] = w[0] - w[3];
  Vec8<Scalar> out;
  for (int i = 0; i < 4; ++i) out[i] = z[i] + z[7 - i];
  for (int i = 4; i < 8; ++i) out[i] = z[7 - i] - z[i];
  return out;
}

/// True iff alpha is invertible and every alpha'_k lies in P. With
/// `relax_dyadic` the membership may hold after one positive dyadic scale
/// 2^k (|k| <= 8) applied to the whole vector.
bool low_complexity_inverse(const ParamVector& alpha, bool relax_dyadic = false);

}  // namespace fw
