#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cliffdet {

// Exact coefficient field. Values are kept canonical (reduced, positive
// denominator) by gmpxx after every operation.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

// Accepts "12", "-3/4", "0.125". Throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

}  // namespace cliffdet
