#pragma once

#include "cliffdet/multivector.hpp"

#include <string>
#include <string_view>

namespace cliffdet {

// Multivector literals such as "5 + 1/2*e2 - 0.25 e12".
//
//   expr   := ['+' | '-'] term (('+' | '-') term)*
//   term   := number ['*'] blade | number | blade
//   number := digits | digits '/' digits | digits '.' digits
//   blade  := 'e' followed by strictly ascending generator digits 1..n
//
// Repeated blades are summed. Errors throw ParseError carrying the offset of
// the offending character.
template <class F>
Multivector<F> parse_multivector(const Signature& sig, std::string_view text);

// Canonical text in blade-bitmask order; parse_multivector reads it back to
// the same value (exactly for doubles as well). The zero multivector is "0".
template <class F>
std::string format_multivector(const Multivector<F>& u);

// Coefficient-wise conversion.
Multivector<double> to_double(const Multivector<Rational>& u);

extern template Multivector<Rational> parse_multivector(const Signature&, std::string_view);
extern template Multivector<double> parse_multivector(const Signature&, std::string_view);
extern template std::string format_multivector(const Multivector<Rational>&);
extern template std::string format_multivector(const Multivector<double>&);

}  // namespace cliffdet
