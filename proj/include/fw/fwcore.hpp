#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fw/matrix.hpp"
#include "fw/param_vector.hpp"

namespace fw {

/// The constant factors of the Feig-Winograd factorization
/// C8 = (1/2) P8 K8 B1 B2 B3: three symmetric butterfly matrices and the
/// signed output permutation.
struct StructuralMatrices {
  ExactMat8 b1, b2, b3, p8;
};

const StructuralMatrices& structural_matrices();

/// Multiplicative block-diagonal kernel K(alpha): diag(a3, a3), the 2x2
/// rotation-like block in (a5, a1), and the 4x4 block in (a0, a2, a4, a6).
template <typename Scalar>
Mat8<Scalar> k_matrix(const std::array<Scalar, 7>& a) {
  Mat8<Scalar> k = Mat8<Scalar>::Zero();
  k(0, 0) = a[3];
  k(1, 1) = a[3];
  k(2, 2) = a[5];
  k(2, 3) = a[1];
  k(3, 2) = -a[1];
  k(3, 3) = a[5];
  k(4, 4) = -a[6];
  k(4, 5) = -a[4];
  k(4, 6) = -a[2];
  k(4, 7) = -a[0];
  k(5, 4) = a[4];
  k(5, 5) = a[0];
  k(5, 6) = a[6];
  k(5, 7) = -a[2];
  k(6, 4) = -a[0];
  k(6, 5) = a[2];
  k(6, 6) = -a[4];
  k(6, 7) = a[6];
  k(7, 4) = -a[2];
  k(7, 5) = -a[6];
  k(7, 6) = a[0];
  k(7, 7) = -a[4];
  return k;
}

ExactMat8 k_matrix(const ParamVector& alpha);

/// T(alpha) = P8 K(alpha) B1 B2 B3, the parametrized transform.
ExactMat8 fw_map(const ParamVector& alpha);
RealMat8 fw_map(const std::array<double, 7>& alpha);

/// gamma_k = cos(2 pi (k+1) / 32); fw_map(dct_gammas()/2) is the exact DCT.
std::array<double, 7> dct_gammas();

/// The orthogonal 8-point DCT matrix C8.
RealMat8 exact_dct();

/// Arithmetic operations actually performed by a flow-graph evaluation.
struct OpCount {
  int adds = 0;
  int shifts = 0;
  int mults = 0;  // parameters outside {0, +-1/2, +-1, +-2}
};

namespace detail {

template <typename Scalar>
Scalar to_scalar(const Rational& r) {
  if constexpr (std::is_same_v<Scalar, Rational>)
    return r;
  else
    return static_cast<Scalar>(r.to_double());
}

}  // namespace detail

/// Evaluates X = T(alpha) x through the signal flow graph: the three butterfly
/// stages (14 additions), the K block with zero-parameter arcs pruned, then the
/// signed output permutation. Never forms the 8x8 matrix. If `ops` is given it
/// receives the additions/shifts/multiplications actually executed, which for
/// alpha in P^7 equal the A(alpha)/S(alpha) complexity formulas.
template <typename Scalar>
Vec8<Scalar> fast_forward(const ParamVector& alpha, const Vec8<Scalar>& x, OpCount* ops = nullptr) {
  const Scalar zero = detail::to_scalar<Scalar>(Rational(0));
  std::array<Scalar, 8> y{}, z{}, w{};
  for (int i = 0; i < 4; ++i) y[i] = x[i] + x[7 - i];
  for (int i = 4; i < 8; ++i) y[i] = x[7 - i] - x[i];
  z = y;
  z[0] = y[0] + y[3];
  z[1] = y[1] + y[2];
  z[2] = y[1] - y[2];
  z[3] = y[0] - y[3];
  w = z;
  w[0] = z[0] + z[1];
  w[1] = z[0] - z[1];
  if (ops) ops->adds += 14;

  // one scaled arc of the K block
  auto arc = [&](const Rational& c, const Scalar& t) -> Scalar {
    if (ops) {
      Rational m = abs(c);
      if (m == Rational(1, 2) || m == Rational(2))
        ops->shifts += 1;
      else if (!m.is_zero() && m != Rational(1))
        ops->mults += 1;
    }
    return detail::to_scalar<Scalar>(c) * t;
  };
  // signed sum of the active (nonzero-parameter) arcs
  auto comb = [&](std::initializer_list<std::pair<Rational, int>> terms) -> Scalar {
    Scalar acc = zero;
    bool first = true;
    for (const auto& [c, wi] : terms) {
      if (c.is_zero()) continue;
      Scalar t = arc(c, w[wi]);
      if (first) {
        acc = t;
        first = false;
      } else {
        acc = acc + t;
        if (ops) ops->adds += 1;
      }
    }
    return acc;
  };

  const Rational &a0 = alpha[0], &a1 = alpha[1], &a2 = alpha[2], &a3 = alpha[3], &a4 = alpha[4],
                 &a5 = alpha[5], &a6 = alpha[6];
  std::array<Scalar, 8> v{};
  v[0] = comb({{a3, 0}});
  v[1] = comb({{a3, 1}});
  v[2] = comb({{a5, 2}, {a1, 3}});
  v[3] = comb({{-a1, 2}, {a5, 3}});
  v[4] = comb({{-a6, 4}, {-a4, 5}, {-a2, 6}, {-a0, 7}});
  v[5] = comb({{a4, 4}, {a0, 5}, {a6, 6}, {-a2, 7}});
  v[6] = comb({{-a0, 4}, {a2, 5}, {-a4, 6}, {a6, 7}});
  v[7] = comb({{-a2, 4}, {-a6, 5}, {a0, 6}, {-a4, 7}});

  Vec8<Scalar> out;
  out[0] = v[0];
  out[1] = -v[4];
  out[2] = v[2];
  out[3] = -v[5];
  out[4] = v[1];
  out[5] = -v[7];
  out[6] = v[3];
  out[7] = v[6];
  return out;
}

struct UnknownTransformError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A transform from the literature expressed as a Feig-Winograd parameter
/// vector, together with whatever context the citation needs (permutations for
/// the Haar identity, the 1/2 scale for the exact DCT) and the operation
/// counts reported by the original source, when they differ from the generic
/// A/S formulas.
struct KnownTransform {
  std::string name;
  std::string description;
  std::optional<ParamVector> alpha;  // nullopt for the exact DCT (irrational parameters)
  bool low_complexity = false;
  std::optional<int> literature_adds;
  std::optional<int> literature_shifts;
  // Haar: H8 = pre_perm * FW(alpha) * post_perm; matrices M[i][perm[i]] = 1.
  std::optional<std::array<int, 8>> pre_perm;
  std::optional<std::array<int, 8>> post_perm;

  /// The matrix this entry reproduces (real-valued; exact entries for the
  /// rational members, C8 for "dct").
  RealMat8 matrix() const;
};

ExactMat8 permutation_matrix(const std::array<int, 8>& perm);

const std::vector<KnownTransform>& known_transforms();
const KnownTransform& known_transform(std::string_view name);  // throws UnknownTransformError

}  // namespace fw
