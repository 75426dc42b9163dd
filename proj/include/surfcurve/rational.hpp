#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "surfcurve/errors.hpp"

namespace surfcurve {

using Rational = boost::rational<std::int64_t>;

// Accepts "3", "0.125", "-2.5" (rejected later if not positive) and "p/q".
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw input_error("ParseError", "empty number");
  auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      std::size_t used = 0;
      std::int64_t p = std::stoll(text.substr(0, slash), &used);
      if (used != slash) throw input_error("ParseError", "bad number '" + text + "'");
      std::string den = text.substr(slash + 1);
      std::int64_t q = std::stoll(den, &used);
      if (used != den.size() || q == 0) throw input_error("ParseError", "bad number '" + text + "'");
      return Rational(p, q);
    }
    bool neg = false;
    std::size_t i = 0;
    if (text[0] == '-' || text[0] == '+') {
      neg = text[0] == '-';
      i = 1;
    }
    std::int64_t num = 0, den = 1;
    bool seen_dot = false, seen_digit = false;
    for (; i < text.size(); ++i) {
      char c = text[i];
      if (c == '.') {
        if (seen_dot) throw input_error("ParseError", "bad number '" + text + "'");
        seen_dot = true;
      } else if (c >= '0' && c <= '9') {
        seen_digit = true;
        if (num > (INT64_MAX - 9) / 10 || (seen_dot && den > INT64_MAX / 10))
          throw input_error("ParseError", "number too precise '" + text + "'");
        num = num * 10 + (c - '0');
        if (seen_dot) den *= 10;
      } else {
        throw input_error("ParseError", "bad number '" + text + "'");
      }
    }
    if (!seen_digit) throw input_error("ParseError", "bad number '" + text + "'");
    return Rational(neg ? -num : num, den);
  } catch (const std::logic_error&) {
    throw input_error("ParseError", "bad number '" + text + "'");
  }
}

// Exact decimal if the denominator only has factors 2 and 5, "p/q" otherwise.
inline std::string format_rational(const Rational& r) {
  std::int64_t n = r.numerator(), d = r.denominator();
  if (d == 1) return std::to_string(n);
  std::int64_t dd = d;
  int twos = 0, fives = 0;
  while (dd % 2 == 0) dd /= 2, ++twos;
  while (dd % 5 == 0) dd /= 5, ++fives;
  if (dd != 1) return std::to_string(n) + "/" + std::to_string(d);
  int digits = std::max(twos, fives);
  // scale numerator so the denominator becomes 10^digits
  std::int64_t factor = 1;
  for (int i = 0; i < digits; ++i) factor *= 10;
  __int128 scaled = static_cast<__int128>(n) * (factor / d);
  bool neg = scaled < 0;
  if (neg) scaled = -scaled;
  std::string s;
  __int128 x = scaled;
  if (x == 0) s = "0";
  while (x > 0) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(x % 10)));
    x /= 10;
  }
  while (static_cast<int>(s.size()) <= digits) s.insert(s.begin(), '0');
  s.insert(s.end() - digits, '.');
  return (neg ? "-" : "") + s;
}

// Common scale so every weight becomes an integer; used by the graph searches.
struct ScaledWeights {
  std::int64_t denominator = 1;
  std::vector<std::int64_t> value;

  Rational to_rational(std::int64_t v) const { return Rational(v, denominator); }
};

inline ScaledWeights scale_weights(const std::vector<Rational>& w) {
  ScaledWeights s;
  for (const auto& r : w) s.denominator = std::lcm(s.denominator, r.denominator());
  s.value.reserve(w.size());
  for (const auto& r : w) s.value.push_back(r.numerator() * (s.denominator / r.denominator()));
  return s;
}

}  // namespace surfcurve
