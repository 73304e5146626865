#pragma once

#include "cliffdet/signature.hpp"

#include <bit>
#include <string>

namespace cliffdet {

// Basis blade as a generator bitmask: bit a set means e_{a+1} participates.
struct BladeIndex {
  unsigned bits = 0;

  constexpr BladeIndex() = default;
  constexpr explicit BladeIndex(unsigned b) : bits(b) {}

  constexpr int grade() const noexcept { return std::popcount(bits); }
  friend constexpr bool operator==(BladeIndex, BladeIndex) = default;
};

// Parity of the transpositions needed to bring e_A e_B into ascending order:
// each generator of B passes every generator of A with a larger index.
constexpr int reorder_sign(unsigned a, unsigned b) noexcept {
  int swaps = 0;
  for (unsigned rest = a >> 1; rest != 0; rest >>= 1) swaps += std::popcount(rest & b);
  return (swaps & 1) ? -1 : 1;
}

// Sign s with e_A e_B = s e_{A xor B}: reordering plus one metric factor for
// each repeated generator.
inline int blade_product_sign(const Signature& sig, BladeIndex a, BladeIndex b) noexcept {
  int sign = reorder_sign(a.bits, b.bits);
  for (unsigned common = a.bits & b.bits; common != 0; common &= common - 1) {
    sign *= sig.metric(std::countr_zero(common));
  }
  return sign;
}

// "1" for the scalar blade, otherwise "e" followed by ascending indices.
std::string blade_name(BladeIndex b);

}  // namespace cliffdet
