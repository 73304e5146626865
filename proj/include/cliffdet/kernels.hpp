#pragma once

// Geometric product kernels.
//
// Every kernel computes out = a b for dense coefficient arrays of length 2^n.
// The reference kernel derives each blade sign from the bitmasks directly; the
// others read the precomputed ProductTable. Double kernels exist in scalar and
// vector variants and one of them is chosen at first use from the running
// CPU. All variants are tested against the reference.

#include "cliffdet/rational.hpp"
#include "cliffdet/signature.hpp"

#include <span>
#include <string_view>

namespace cliffdet::kernels {

enum class Isa { Scalar, Avx2, Neon };

std::string_view isa_name(Isa isa);

// Best variant supported by this build and this CPU.
Isa detect_isa();

// True when the variant is compiled in and runnable here.
bool isa_available(Isa isa);

// Sign-by-swap-count product, no tables. Any field.
void product_reference(const Signature& sig, std::span<const Rational> a, std::span<const Rational> b,
                       std::span<Rational> out);
void product_reference(const Signature& sig, std::span<const double> a, std::span<const double> b,
                       std::span<double> out);

// Rational product accumulated over integers: operands are brought to a common
// denominator, numerators are multiplied with fused integer multiply-add, and
// the result is divided once.
void product_rational(const Signature& sig, std::span<const Rational> a, std::span<const Rational> b,
                      std::span<Rational> out);

// Table-driven scalar loop in result-blade order; the layout the vector
// variants follow.
void product_f64_scalar(const Signature& sig, std::span<const double> a, std::span<const double> b,
                        std::span<double> out);

#if defined(CLIFFDET_HAVE_AVX2_KERNEL)
void product_f64_avx2(const Signature& sig, std::span<const double> a, std::span<const double> b,
                      std::span<double> out);
#endif

#if defined(__ARM_NEON) || defined(__aarch64__)
void product_f64_neon(const Signature& sig, std::span<const double> a, std::span<const double> b,
                      std::span<double> out);
#endif

// Runs the named double variant; throws std::invalid_argument when it is not
// available.
void product_f64(Isa isa, const Signature& sig, std::span<const double> a, std::span<const double> b,
                 std::span<double> out);

// Dispatched entry points used by Multivector.
void product(const Signature& sig, std::span<const Rational> a, std::span<const Rational> b,
             std::span<Rational> out);
void product(const Signature& sig, std::span<const double> a, std::span<const double> b,
             std::span<double> out);

}  // namespace cliffdet::kernels
