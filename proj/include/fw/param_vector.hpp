#pragma once

#include <array>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "fw/rational.hpp"

namespace fw {

/// The seven multiplicative parameters alpha_0..alpha_6 of a point in the
/// Feig-Winograd matrix subspace.
class ParamVector {
public:
  ParamVector() = default;
  explicit ParamVector(std::array<Rational, 7> a) : a_(a) {}
  ParamVector(std::initializer_list<Rational> vals);

  const Rational& operator[](std::size_t i) const { return a_[i]; }
  Rational& operator[](std::size_t i) { return a_[i]; }
  static constexpr std::size_t size() { return 7; }

  auto begin() const { return a_.begin(); }
  auto end() const { return a_.end(); }

  /// The zero-adder parameter set P = {0, +-1/2, +-1, +-2}.
  static const std::vector<Rational>& low_complexity_set();
  static bool in_low_complexity_set(const Rational& v);

  /// True iff every entry lies in P.
  bool is_low_complexity() const;

  /// Parses a comma-separated list of seven entries, each an integer,
  /// a fraction "p/q", or a decimal like "0.5".
  static ParamVector parse(std::string_view csv);
  std::string str() const;

  friend bool operator==(const ParamVector& a, const ParamVector& b) { return a.a_ == b.a_; }
  friend bool operator!=(const ParamVector& a, const ParamVector& b) { return !(a == b); }
  friend bool operator<(const ParamVector& a, const ParamVector& b);

private:
  std::array<Rational, 7> a_{};
};

}  // namespace fw
