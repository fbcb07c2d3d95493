#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>
#include <string>

#include "sympair/errors.hpp"

namespace sympair {

// All core arithmetic is exact: arbitrary-precision integers and reduced
// fractions.  No floating point appears anywhere in the library.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

inline Int to_int_exact(const Rat& r) {
  if (!is_integer(r))
    throw InternalError("expected an integral value, got " + r.str());
  return rat_num(r);
}

namespace detail {
// The boost constructor maps "" to zero, so digits are checked up front.
inline Int parse_integer_text(const std::string& text) {
  size_t i = (!text.empty() && text[0] == '-') ? 1 : 0;
  if (i == text.size()) throw ParseError("cannot parse integer: \"" + text + "\"");
  for (; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9')
      throw ParseError("cannot parse integer: \"" + text + "\"");
  return Int(text);
}
} // namespace detail

// Accepts "p", "-p", "p/q".  Whitespace is not tolerated; the CLI passes
// trimmed tokens.
inline Rat parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rat(detail::parse_integer_text(text));
  const Int num = detail::parse_integer_text(text.substr(0, slash));
  const Int den = detail::parse_integer_text(text.substr(slash + 1));
  if (den == 0) throw ParseError("rational with zero denominator: " + text);
  return Rat(num) / Rat(den);
}

inline std::string rat_str(const Rat& r) { return r.str(); }

inline Int binomial(const Int& n, const Int& k) {
  if (k < 0 || k > n) return 0;
  Int result = 1;
  for (Int i = 0; i < k; ++i) {
    result *= (n - i);
    result /= (i + 1);
  }
  return result;
}

} // namespace sympair
