#include "fw/fwcore.hpp"

#include <cmath>

namespace fw {

namespace {

ExactMat8 build_b1() {
  ExactMat8 m = ExactMat8::Identity();
  m(0, 0) = Rational(1);
  m(0, 1) = Rational(1);
  m(1, 0) = Rational(1);
  m(1, 1) = Rational(-1);
  return m;
}

ExactMat8 build_b2() {
  ExactMat8 m = ExactMat8::Identity();
  const int block[4][4] = {{1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, -1, 0}, {1, 0, 0, -1}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = Rational(block[i][j]);
  return m;
}

ExactMat8 build_b3() {
  ExactMat8 m = ExactMat8::Zero();
  for (int i = 0; i < 4; ++i) {
    m(i, i) = Rational(1);
    m(i, 7 - i) = Rational(1);
    m(4 + i, 3 - i) = Rational(1);
    m(4 + i, 4 + i) = Rational(-1);
  }
  return m;
}

ExactMat8 build_p8() {
  // output m receives +-(K stage output c): X = P8 v
  const int source[8] = {0, 4, 2, 5, 1, 7, 3, 6};
  const int sign[8] = {1, -1, 1, -1, 1, -1, 1, 1};
  ExactMat8 m = ExactMat8::Zero();
  for (int i = 0; i < 8; ++i) m(i, source[i]) = Rational(sign[i]);
  return m;
}

}  // namespace

const StructuralMatrices& structural_matrices() {
  static const StructuralMatrices s{build_b1(), build_b2(), build_b3(), build_p8()};
  return s;
}

ExactMat8 k_matrix(const ParamVector& alpha) {
  std::array<Rational, 7> a;
  for (std::size_t i = 0; i < 7; ++i) a[i] = alpha[i];
  return k_matrix<Rational>(a);
}

ExactMat8 fw_map(const ParamVector& alpha) {
  const auto& s = structural_matrices();
  return ExactMat8(s.p8 * k_matrix(alpha) * s.b1 * s.b2 * s.b3);
}

RealMat8 fw_map(const std::array<double, 7>& alpha) {
  const auto& s = structural_matrices();
  return RealMat8(to_real(s.p8) * k_matrix<double>(alpha) * to_real(s.b1) * to_real(s.b2) *
                  to_real(s.b3));
}

std::array<double, 7> dct_gammas() {
  std::array<double, 7> g;
  for (int k = 0; k < 7; ++k) g[k] = std::cos(2.0 * M_PI * (k + 1) / 32.0);
  return g;
}

RealMat8 exact_dct() {
  RealMat8 c;
  const double scale = std::sqrt(2.0 / 8.0);
  for (int m = 0; m < 8; ++m) {
    double beta = (m == 0) ? 1.0 / std::sqrt(2.0) : 1.0;
    for (int n = 0; n < 8; ++n)
      c(m, n) = scale * beta * std::cos(M_PI * m * (2 * n + 1) / 16.0);
  }
  return c;
}

ExactMat8 permutation_matrix(const std::array<int, 8>& perm) {
  ExactMat8 m = ExactMat8::Zero();
  for (int i = 0; i < 8; ++i) m(i, perm[i]) = Rational(1);
  return m;
}

RealMat8 KnownTransform::matrix() const {
  if (!alpha) return exact_dct();
  ExactMat8 t = fw_map(*alpha);
  if (pre_perm) t = ExactMat8(permutation_matrix(*pre_perm) * t);
  if (post_perm) t = ExactMat8(t * permutation_matrix(*post_perm));
  return to_real(t);
}

const std::vector<KnownTransform>& known_transforms() {
  static const std::vector<KnownTransform> registry = [] {
    std::vector<KnownTransform> v;
    auto add = [&](KnownTransform kt) {
      kt.low_complexity = kt.alpha && kt.alpha->is_low_complexity();
      v.push_back(std::move(kt));
    };
    const Rational h(1, 2);

    add({.name = "dct",
         .description = "exact 8-point DCT, FW(gamma/2)",
         .alpha = std::nullopt});
    add({.name = "sdct",
         .description = "signed DCT (Haweel 2001)",
         .alpha = ParamVector{1, 1, 1, 1, 1, 1, 1},
         .literature_adds = 24,
         .literature_shifts = 0});
    add({.name = "lo-level1",
         .description = "Lengwehasatit-Ortega level 1 approximation",
         .alpha = ParamVector{1, 1, 1, 1, 1, h, 0},
         .literature_adds = 24,
         .literature_shifts = 2});
    add({.name = "rdct",
         .description = "rounded DCT (Cintra-Bayer 2011)",
         .alpha = ParamVector{1, 1, 1, 1, 1, 0, 0},
         .literature_adds = 22,
         .literature_shifts = 0});
    add({.name = "mrdct",
         .description = "modified rounded DCT (Bayer-Cintra 2012)",
         .alpha = ParamVector{1, 1, 0, 1, 0, 0, 0},
         .literature_adds = 14,
         .literature_shifts = 0});
    add({.name = "rf-imaging",
         .description = "multiplier-free DCT approximation for RF imaging",
         .alpha = ParamVector{2, 2, 1, 1, 1, 1, 0},
         .literature_adds = 24,
         .literature_shifts = 6});
    // H8 = P1 FW(alpha) P2 with the cycle maps (1)(8 2 5 6 4 3 7) and
    // (1)(8 2 6)(5 3 7)(4), zero-based here.
    add({.name = "haar",
         .description = "non-normalized Haar matrix of order 8",
         .alpha = ParamVector{0, 0, 0, 1, 1, 1, 0},
         .pre_perm = std::array<int, 8>{0, 4, 6, 2, 5, 3, 7, 1},
         .post_perm = std::array<int, 8>{0, 5, 6, 3, 2, 7, 4, 1}});
    add({.name = "avc",
         .description = "integer 8-point transform of AVC/H.264",
         .alpha = ParamVector{12, 8, 10, 8, 6, 4, 3},
         .literature_adds = 32,
         .literature_shifts = 10});
    add({.name = "hevc",
         .description = "integer 8-point transform of HEVC/H.265",
         .alpha = ParamVector{89, 83, 75, 64, 50, 36, 18},
         .literature_adds = 28,
         .literature_shifts = 0});
    return v;
  }();
  return registry;
}

const KnownTransform& known_transform(std::string_view name) {
  for (const auto& kt : known_transforms())
    if (kt.name == name) return kt;
  throw UnknownTransformError("unknown transform '" + std::string(name) + "'");
}

}  // namespace fw
