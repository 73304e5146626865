// Compiled with -mavx2 -mfma; only called after a runtime CPU check.
#include "cliffdet/kernels.hpp"
#include "cliffdet/product_table.hpp"

#include <immintrin.h>

#include <stdexcept>

namespace cliffdet::kernels {
namespace {

// Lane l of the result takes lane l ^ R of v.
template <int R>
inline __m256d xor_lanes(__m256d v) {
  if constexpr (R == 0) return v;
  if constexpr (R == 1) return _mm256_permute_pd(v, 0b0101);
  if constexpr (R == 2) return _mm256_permute4x64_pd(v, 0x4E);
  if constexpr (R == 3) return _mm256_permute4x64_pd(v, 0x1B);
}

// acc[c] += x * sign(i, i^c) * b[c ^ i] for one left blade i. Within a block of
// four result lanes, c ^ i splits into a block offset (i & ~3) and a fixed
// lane permutation (i & 3).
template <int R>
inline void accumulate_row(double* acc, const double* row, const double* b, unsigned block_xor, double x,
                           std::size_t size) {
  const __m256d vx = _mm256_set1_pd(x);
  for (std::size_t c0 = 0; c0 < size; c0 += 4) {
    const __m256d vb = xor_lanes<R>(_mm256_loadu_pd(b + (c0 ^ block_xor)));
    const __m256d vs = _mm256_mul_pd(vx, _mm256_loadu_pd(row + c0));
    _mm256_storeu_pd(acc + c0, _mm256_fmadd_pd(vs, vb, _mm256_loadu_pd(acc + c0)));
  }
}

}  // namespace

void product_f64_avx2(const Signature& sig, std::span<const double> a, std::span<const double> b,
                      std::span<double> out) {
  const std::size_t size = sig.blade_count();
  if (size < 4) {
    product_f64_scalar(sig, a, b, out);
    return;
  }
  if (a.size() != size || b.size() != size || out.size() != size) {
    throw std::invalid_argument("operand length does not match the signature");
  }
  const ProductTable& table = product_table(sig);
  alignas(32) double acc[64] = {};
  for (unsigned i = 0; i < size; ++i) {
    const double x = a[i];
    if (x == 0.0) continue;
    const double* row = table.result_row(i).data();
    const unsigned block_xor = i & ~3u;
    switch (i & 3u) {
      case 0: accumulate_row<0>(acc, row, b.data(), block_xor, x, size); break;
      case 1: accumulate_row<1>(acc, row, b.data(), block_xor, x, size); break;
      case 2: accumulate_row<2>(acc, row, b.data(), block_xor, x, size); break;
      default: accumulate_row<3>(acc, row, b.data(), block_xor, x, size); break;
    }
  }
  for (std::size_t c = 0; c < size; ++c) out[c] = acc[c];
}

}  // namespace cliffdet::kernels
