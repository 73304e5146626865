#include "cliffdet/blade.hpp"
#include "cliffdet/kernels.hpp"

#include <stdexcept>

namespace cliffdet::kernels {
namespace {

template <class F>
void reference_impl(const Signature& sig, std::span<const F> a, std::span<const F> b, std::span<F> out) {
  const std::size_t size = sig.blade_count();
  if (a.size() != size || b.size() != size || out.size() != size) {
    throw std::invalid_argument("operand length does not match the signature");
  }
  for (auto& c : out) c = F(0);
  for (unsigned i = 0; i < size; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < size; ++j) {
      if (b[j] == 0) continue;
      const int s = blade_product_sign(sig, BladeIndex(i), BladeIndex(j));
      const F term = a[i] * b[j];
      if (s > 0)
        out[i ^ j] += term;
      else
        out[i ^ j] -= term;
    }
  }
}

}  // namespace

void product_reference(const Signature& sig, std::span<const Rational> a, std::span<const Rational> b,
                       std::span<Rational> out) {
  reference_impl<Rational>(sig, a, b, out);
}

void product_reference(const Signature& sig, std::span<const double> a, std::span<const double> b,
                       std::span<double> out) {
  reference_impl<double>(sig, a, b, out);
}

}  // namespace cliffdet::kernels
