#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cdepth/error.hpp"

namespace cdepth {

using BigInt = boost::multiprecision::cpp_int;
/// Exact rational; always kept in lowest terms with a positive denominator.
using Rat = boost::multiprecision::cpp_rational;
using Coords = std::vector<Rat>;

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

inline BigInt parse_signed_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw Error(ErrorKind::parse, "malformed numeral '" + std::string(whole) + "'");
  BigInt value{std::string(s)};
  return negative ? BigInt(-value) : value;
}

}  // namespace detail

/// Parses "n", "-n" or "a/b" into a canonical rational.
inline Rat parse_rat(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(detail::parse_signed_integer(text, text));
  const BigInt num = detail::parse_signed_integer(text.substr(0, slash), text);
  const std::string_view den_text = text.substr(slash + 1);
  if (!detail::all_digits(den_text))
    throw Error(ErrorKind::parse, "malformed numeral '" + std::string(text) + "'");
  const BigInt den(std::string{den_text});
  if (den == 0) throw Error(ErrorKind::parse, "zero denominator in '" + std::string(text) + "'");
  return Rat(num, den);
}

/// "a" for integers, "a/b" otherwise.
inline std::string to_string(const Rat& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline int sign(const Rat& value) { return value.sign(); }
inline int sign(const BigInt& value) { return value.sign(); }

/// Positive multiple of `coords` with coprime integer entries. Every predicate
/// in the library is invariant under positive scaling, so directions stand in
/// for the points themselves.
inline std::vector<BigInt> primitive_direction(std::span<const Rat> coords) {
  BigInt lcm_den = 1;
  for (const Rat& c : coords) lcm_den = boost::multiprecision::lcm(lcm_den, boost::multiprecision::denominator(c));
  std::vector<BigInt> out;
  out.reserve(coords.size());
  BigInt g = 0;
  for (const Rat& c : coords) {
    BigInt v = boost::multiprecision::numerator(c) * (lcm_den / boost::multiprecision::denominator(c));
    g = boost::multiprecision::gcd(g, v);
    out.push_back(std::move(v));
  }
  if (g > 1)
    for (BigInt& v : out) v /= g;
  return out;
}

}  // namespace cdepth
