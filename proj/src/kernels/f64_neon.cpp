// Two-lane variant for AArch64. Same layout as the AVX2 kernel with blocks of
// two result blades.
#include "cliffdet/kernels.hpp"
#include "cliffdet/product_table.hpp"

#include <arm_neon.h>

#include <stdexcept>

namespace cliffdet::kernels {

void product_f64_neon(const Signature& sig, std::span<const double> a, std::span<const double> b,
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
    const unsigned block_xor = i & ~1u;
    const bool swap = (i & 1u) != 0;
    const float64x2_t vx = vdupq_n_f64(x);
    for (std::size_t c0 = 0; c0 < size; c0 += 2) {
      float64x2_t vb = vld1q_f64(b.data() + (c0 ^ block_xor));
      if (swap) vb = vextq_f64(vb, vb, 1);
      const float64x2_t vs = vmulq_f64(vx, vld1q_f64(row + c0));
      vst1q_f64(acc + c0, vfmaq_f64(vld1q_f64(acc + c0), vs, vb));
    }
  }
  for (std::size_t c = 0; c < size; ++c) out[c] = acc[c];
}

}  // namespace cliffdet::kernels
