#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace geocover {

/// Exact arbitrary-precision rational, always kept in lowest terms.
using Rational = mpq_class;

/// Formats as "p/q" (denominator always present, e.g. "2/1").
inline std::string to_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Accepts "p/q" or a bare integer "p". Throws std::invalid_argument.
inline Rational parse_fraction(std::string_view text) {
  std::string s(text);
  if (s.empty() || s.find_first_of(".eE") != std::string::npos) {
    throw std::invalid_argument("not an exact fraction: '" + s + "'");
  }
  Rational r;
  if (r.set_str(s, 10) != 0 || r.get_den() == 0) {
    throw std::invalid_argument("not an exact fraction: '" + s + "'");
  }
  r.canonicalize();
  return r;
}

/// Shortest-path distance; std::nullopt stands for +infinity.
using Distance = std::optional<Rational>;

}  // namespace geocover
