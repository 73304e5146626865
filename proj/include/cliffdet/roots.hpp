#pragma once

#include "cliffdet/rational.hpp"

#include <complex>
#include <span>
#include <vector>

namespace cliffdet {

// Roots of the monic polynomial x^d + a[d-1] x^{d-1} + ... + a[0] (a is given
// lowest power first), with multiplicity, sorted by (real, imag).
//
// Eigenvalues of the companion matrix come from complex shifted QR and are
// then polished by guarded Newton steps. Simple roots come out to near
// machine precision; a root of multiplicity k only to about eps^(1/k).
// Throws std::runtime_error if QR fails to converge.
std::vector<std::complex<double>> polynomial_roots(std::span<const std::complex<double>> a);

// Same for exact coefficients. The polynomial is first split into
// square-free factors (Yun's algorithm over the rationals), so repeated roots
// are located as simple roots of their factor and reported with their exact
// multiplicity.
std::vector<std::complex<double>> polynomial_roots(std::span<const Rational> a);

// Eigenvalues of an upper Hessenberg matrix (row-major, dim x dim).
std::vector<std::complex<double>> hessenberg_eigenvalues(std::vector<std::complex<double>> h, int dim);

}  // namespace cliffdet
