#pragma once

#include <Eigen/Dense>

#include "fw/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<fw::Rational> : GenericNumTraits<fw::Rational> {
  typedef fw::Rational Real;
  typedef fw::Rational NonInteger;
  typedef fw::Rational Nested;

  static inline Real epsilon() { return fw::Rational(0); }
  static inline Real dummy_precision() { return fw::Rational(0); }
  static inline int digits10() { return 0; }

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 20,
    MulCost = 20
  };
};

}  // namespace Eigen

namespace fw {

template <typename Scalar>
using Mat8 = Eigen::Matrix<Scalar, 8, 8>;
template <typename Scalar>
using Vec8 = Eigen::Matrix<Scalar, 8, 1>;

using ExactMat8 = Mat8<Rational>;
using RealMat8 = Mat8<double>;
using ExactVec8 = Vec8<Rational>;
using RealVec8 = Vec8<double>;

inline RealMat8 to_real(const ExactMat8& m) {
  RealMat8 r;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) r(i, j) = m(i, j).to_double();
  return r;
}

inline bool exact_equal(const ExactMat8& a, const ExactMat8& b) {
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

inline bool is_identity(const ExactMat8& m) {
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (m(i, j) != Rational(i == j ? 1 : 0)) return false;
  return true;
}

}  // namespace fw
