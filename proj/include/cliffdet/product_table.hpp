#pragma once

#include "cliffdet/signature.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace cliffdet {

// Precomputed blade multiplication signs for one signature. Built once per
// signature on first use and immutable afterwards.
class ProductTable {
 public:
  explicit ProductTable(Signature sig);

  const Signature& signature() const noexcept { return sig_; }
  std::size_t blade_count() const noexcept { return size_; }

  // Sign of e_a e_b (result blade a ^ b).
  int sign(unsigned a, unsigned b) const noexcept { return by_operand_[a * size_ + b]; }

  // Row a, indexed by the result blade c: sign of e_a e_{a^c}. Stored as
  // doubles so vector kernels can load it directly.
  std::span<const double> result_row(unsigned a) const noexcept {
    return {by_result_.data() + a * size_, size_};
  }

 private:
  Signature sig_;
  std::size_t size_;
  std::vector<std::int8_t> by_operand_;
  std::vector<double> by_result_;
};

// Shared table for sig; thread-safe lazy construction.
const ProductTable& product_table(const Signature& sig);

}  // namespace cliffdet
