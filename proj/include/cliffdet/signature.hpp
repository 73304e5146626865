#pragma once

#include <bit>
#include <cstddef>
#include <string>
#include <vector>

namespace cliffdet {

inline constexpr int kMaxDimension = 6;

// Nondegenerate signature (p, q) with 1 <= p + q <= 6.
class Signature {
 public:
  // Throws std::invalid_argument for negative counts or n outside [1, 6].
  Signature(int p, int q);

  int p() const noexcept { return p_; }
  int q() const noexcept { return q_; }
  int n() const noexcept { return p_ + q_; }

  // Size of the complex representation, 2^floor((n+1)/2); also the degree of
  // the characteristic polynomial.
  int N() const noexcept { return 1 << ((n() + 1) / 2); }

  // Number of triangle conjugations, floor(log2 n) + 1.
  int m() const noexcept { return std::bit_width(static_cast<unsigned>(n())); }

  std::size_t blade_count() const noexcept { return std::size_t{1} << n(); }

  // Square of generator e_{a+1}: +1 for the first p generators, -1 after.
  int metric(int a) const noexcept { return a < p_ ? 1 : -1; }

  // Dense index of this signature among all supported ones.
  int ordinal() const noexcept { return p_ * (kMaxDimension + 1) + q_; }

  std::string to_string() const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  int p_;
  int q_;
};

// All 28 signatures with 1 <= n <= 6, ordered by n then p descending.
const std::vector<Signature>& all_signatures();

}  // namespace cliffdet
