#include "fw/param_vector.hpp"

#include <algorithm>
#include <stdexcept>

namespace fw {

ParamVector::ParamVector(std::initializer_list<Rational> vals) {
  if (vals.size() != 7) throw std::invalid_argument("parameter vector needs exactly 7 entries");
  std::copy(vals.begin(), vals.end(), a_.begin());
}

const std::vector<Rational>& ParamVector::low_complexity_set() {
  static const std::vector<Rational> p = {Rational(0),      Rational(1, 2), Rational(-1, 2),
                                          Rational(1),      Rational(-1),   Rational(2),
                                          Rational(-2)};
  return p;
}

bool ParamVector::in_low_complexity_set(const Rational& v) {
  const auto& p = low_complexity_set();
  return std::find(p.begin(), p.end(), v) != p.end();
}

bool ParamVector::is_low_complexity() const {
  return std::all_of(a_.begin(), a_.end(), in_low_complexity_set);
}

ParamVector ParamVector::parse(std::string_view csv) {
  std::array<Rational, 7> vals;
  std::size_t count = 0;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    std::size_t comma = csv.find(',', pos);
    std::string_view entry =
        csv.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    if (count == 7) throw std::invalid_argument("parameter vector has more than 7 entries");
    vals[count++] = Rational::parse(entry);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (count != 7) throw std::invalid_argument("parameter vector needs exactly 7 entries");
  return ParamVector(vals);
}

std::string ParamVector::str() const {
  std::string out;
  for (std::size_t i = 0; i < 7; ++i) {
    if (i) out += ",";
    out += a_[i].str();
  }
  return out;
}

bool operator<(const ParamVector& a, const ParamVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace fw
