#pragma once

#include "fw/inversion.hpp"
#include "fw/matrix.hpp"
#include "fw/param_vector.hpp"

namespace fw {

enum class ApproximationKind { orthogonal, near_orthogonal };

/// A scored DCT approximation: the low-complexity matrix T = FW(alpha) and its
/// orthogonalized (or nearly orthogonalized) form c_hat = scaling * T.
struct Approximation {
  ParamVector alpha;
  ExactMat8 low_matrix;
  RealMat8 scaling;
  RealMat8 c_hat;
  ApproximationKind kind = ApproximationKind::orthogonal;

  bool orthogonal() const { return kind == ApproximationKind::orthogonal; }
};

/// Exact Gram matrix T(alpha) T(alpha)^T.
ExactMat8 gram_matrix(const ParamVector& alpha);

/// True iff T T^T is exactly diagonal. Equivalent to the closed-form
/// condition a0 (a2 - a4) = a6 (a2 + a4); both are exposed and the
/// equivalence is property-tested.
bool diagonality_condition(const ParamVector& alpha);
bool diagonality_sufficient_condition(const ParamVector& alpha);

/// S = sqrt((T T^T)^-1). Diagonal closed form diag(s0,s1,s2,s1,s0,s1,s2,s1)
/// with s0 = 1/(2^{3/2} a3), s1 = 1/sqrt(2(a0^2+a2^2+a4^2+a6^2)),
/// s2 = 1/(2 sqrt(a1^2+a5^2)) when the diagonality condition holds; the dense
/// principal SPD square root otherwise.
RealMat8 polar_scaling(const ParamVector& alpha);  // throws NotInvertibleError

/// S_hat = sqrt(diag(T T^T)^-1), the near-orthogonal scaling.
RealMat8 near_ortho_scaling(const ParamVector& alpha);  // throws NotInvertibleError

/// c_hat = S T when orthogonalizable, S_hat T otherwise.
Approximation make_approximation(const ParamVector& alpha);  // throws NotInvertibleError

/// delta(M) = 1 - ||diag(M)||_F^2 / ||M||_F^2, in [0,1], 0 iff M diagonal.
double deviation_from_diagonality(const RealMat8& m);  // throws std::domain_error on zero matrix

/// Principal square root of a symmetric positive-definite matrix.
RealMat8 spd_sqrt(const RealMat8& m);  // throws std::domain_error if not positive-definite

/// True inverse of c_hat: scaling and T are both invertible, so
/// c_hat^-1 = T^-1 scaling^-1.
RealMat8 approximation_inverse(const Approximation& app);

}  // namespace fw
