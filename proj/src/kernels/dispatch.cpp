#include "cliffdet/kernels.hpp"

#include <stdexcept>
#include <string>

namespace cliffdet::kernels {
namespace {

using F64Kernel = void (*)(const Signature&, std::span<const double>, std::span<const double>, std::span<double>);

F64Kernel kernel_for(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return &product_f64_scalar;
    case Isa::Avx2:
#if defined(CLIFFDET_HAVE_AVX2_KERNEL)
      return &product_f64_avx2;
#else
      return nullptr;
#endif
    case Isa::Neon:
#if defined(__ARM_NEON) || defined(__aarch64__)
      return &product_f64_neon;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  if (kernel_for(isa) == nullptr) return false;
#if defined(CLIFFDET_HAVE_AVX2_KERNEL)
  if (isa == Isa::Avx2) {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  }
#endif
  return true;
}

Isa detect_isa() {
  if (isa_available(Isa::Avx2)) return Isa::Avx2;
  if (isa_available(Isa::Neon)) return Isa::Neon;
  return Isa::Scalar;
}

void product_f64(Isa isa, const Signature& sig, std::span<const double> a, std::span<const double> b,
                 std::span<double> out) {
  if (!isa_available(isa)) {
    throw std::invalid_argument("kernel variant not available: " + std::string(isa_name(isa)));
  }
  kernel_for(isa)(sig, a, b, out);
}

void product(const Signature& sig, std::span<const Rational> a, std::span<const Rational> b,
             std::span<Rational> out) {
  product_rational(sig, a, b, out);
}

void product(const Signature& sig, std::span<const double> a, std::span<const double> b,
             std::span<double> out) {
  static const F64Kernel selected = kernel_for(detect_isa());
  selected(sig, a, b, out);
}

}  // namespace cliffdet::kernels
