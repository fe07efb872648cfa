#ifndef MAJORIZE_RATIONAL_HPP
#define MAJORIZE_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "majorize/error.hpp"

namespace majorize {

/// Arbitrary precision integer and canonical rational (gcd(|p|, q) = 1, q >= 1).
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integral(const Rational& r) { return den(r) == 1; }

/// "p/q", or "p" when q = 1.
inline std::string to_string(const Rational& r) { return r.str(); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

}  // namespace detail

/// Parses "p", "p/q" or a finite decimal such as "-0.25". Exact; no binary
/// floating point is involved.
inline Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  const std::string shown(text);
  require(!s.empty(), "empty rational");

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto p = s.substr(0, slash);
    auto q = s.substr(slash + 1);
    require(detail::all_digits(p) && detail::all_digits(q), "malformed rational '" + shown + "'");
    Integer denominator{std::string(q)};
    require(denominator != 0, "zero denominator in '" + shown + "'");
    value = Rational(Integer{std::string(p)}, denominator);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    require((whole.empty() || detail::all_digits(whole)) && (frac.empty() || detail::all_digits(frac)) &&
                !(whole.empty() && frac.empty()),
            "malformed decimal '" + shown + "'");
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Integer w = whole.empty() ? Integer(0) : Integer{std::string(whole)};
    Integer f = frac.empty() ? Integer(0) : Integer{std::string(frac)};
    value = Rational(w * scale + f, scale);
  } else {
    require(detail::all_digits(s), "malformed rational '" + shown + "'");
    value = Rational(Integer{std::string(s)});
  }
  return negative ? Rational(-value) : value;
}

/// base^exponent for a signed machine exponent; 0^negative is rejected.
inline Rational pow(const Rational& base, long long exponent) {
  if (exponent < 0) {
    require(base != 0, "zero raised to a negative power");
    return Rational(1) / pow(base, -exponent);
  }
  auto e = static_cast<unsigned>(exponent);
  return Rational(boost::multiprecision::pow(num(base), e), boost::multiprecision::pow(den(base), e));
}

inline Integer pow(const Integer& base, unsigned exponent) { return boost::multiprecision::pow(base, exponent); }

/// Converts an integral rational to a machine exponent, rejecting huge values.
inline long long to_exponent(const Rational& r) {
  require(is_integral(r), "exponent " + to_string(r) + " is not an integer");
  const Integer& n = num(r);
  require(n >= -(Integer(1) << 40) && n <= (Integer(1) << 40), "exponent " + to_string(r) + " is too large");
  return n.convert_to<long long>();
}

inline Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }
inline Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::lcm(a, b);
}

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

}  // namespace majorize

#endif  // MAJORIZE_RATIONAL_HPP
