#include "fw/rational.hpp"

#include <cctype>
#include <charconv>
#include <ostream>

namespace fw {

namespace {

using Wide = __int128;

Wide wide_abs(Wide v) { return v < 0 ? -v : v; }

Wide gcd_wide(Wide a, Wide b) {
  a = wide_abs(a);
  b = wide_abs(b);
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

constexpr Wide kWideMax = (~static_cast<unsigned __int128>(0)) >> 1;

Wide add_checked(Wide a, Wide b) {
  if (a > 0 && b > 0 && a > kWideMax - b) throw std::overflow_error("rational: addition overflow");
  if (a < 0 && b < 0 && a < -kWideMax - b) throw std::overflow_error("rational: addition overflow");
  return a + b;
}

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("rational: cannot parse integer '" + std::string(s) + "'");
  return v;
}

}  // namespace

Rational Rational::reduce(Wide n, Wide d) {
  if (d == 0) throw std::domain_error("rational: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) return Rational();
  Wide g = gcd_wide(n, d);
  n /= g;
  d /= g;
  constexpr Wide lim = std::numeric_limits<std::int64_t>::max();
  if (n > lim || n < -lim || d > lim)
    throw std::overflow_error("rational: reduced value exceeds 64-bit range");
  return make_raw(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
}

Rational::Rational(std::int64_t n, std::int64_t d) { *this = reduce(n, d); }

Rational Rational::reciprocal() const {
  if (num_ == 0) throw std::domain_error("rational: reciprocal of zero");
  return reduce(den_, num_);
}

Rational operator+(const Rational& a, const Rational& b) {
  Wide g = gcd_wide(a.den_, b.den_);
  Wide bd = b.den_ / g;
  Wide ad = a.den_ / g;
  Wide n = add_checked(static_cast<Wide>(a.num_) * bd, static_cast<Wide>(b.num_) * ad);
  Wide d = static_cast<Wide>(a.den_) * bd;
  return Rational::reduce(n, d);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  Wide g1 = gcd_wide(a.num_, b.den_);
  Wide g2 = gcd_wide(b.num_, a.den_);
  Wide n = (static_cast<Wide>(a.num_) / g1) * (static_cast<Wide>(b.num_) / g2);
  Wide d = (static_cast<Wide>(a.den_) / g2) * (static_cast<Wide>(b.den_) / g1);
  return Rational::reduce(n, d);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("rational: division by zero");
  return a * b.reciprocal();
}

bool operator<(const Rational& a, const Rational& b) {
  return static_cast<Wide>(a.num_) * b.den_ < static_cast<Wide>(b.num_) * a.den_;
}

Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("rational: empty string");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::int64_t n = parse_int(text.substr(0, slash));
    std::int64_t d = parse_int(text.substr(slash + 1));
    return Rational(n, d);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view ip = text.substr(0, dot);
    std::string_view fp = text.substr(dot + 1);
    if (fp.empty() || fp.size() > 18)
      throw std::invalid_argument("rational: cannot parse decimal '" + std::string(text) + "'");
    bool neg = !ip.empty() && ip.front() == '-';
    if (!ip.empty() && (ip.front() == '-' || ip.front() == '+')) ip.remove_prefix(1);
    std::int64_t whole = ip.empty() ? 0 : parse_int(ip);
    std::int64_t frac = parse_int(fp);
    if (frac < 0) throw std::invalid_argument("rational: malformed decimal '" + std::string(text) + "'");
    std::int64_t pow10 = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) pow10 *= 10;
    Rational r = Rational(whole) + Rational(frac, pow10);
    return neg ? -r : r;
  }
  return Rational(parse_int(text));
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace fw
