#include "cliffdet/kernels.hpp"
#include "cliffdet/product_table.hpp"

#include <stdexcept>

namespace cliffdet::kernels {

void product_f64_scalar(const Signature& sig, std::span<const double> a, std::span<const double> b,
                        std::span<double> out) {
  const std::size_t size = sig.blade_count();
  if (a.size() != size || b.size() != size || out.size() != size) {
    throw std::invalid_argument("operand length does not match the signature");
  }
  const ProductTable& table = product_table(sig);
  double acc[64] = {};
  for (unsigned i = 0; i < size; ++i) {
    const double x = a[i];
    if (x == 0.0) continue;
    const double* row = table.result_row(i).data();
    for (unsigned c = 0; c < size; ++c) acc[c] += x * row[c] * b[c ^ i];
  }
  for (std::size_t c = 0; c < size; ++c) out[c] = acc[c];
}

}  // namespace cliffdet::kernels
