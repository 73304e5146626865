#pragma once

#include "cliffdet/charpoly.hpp"
#include "cliffdet/multivector.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace cliffdet {

// a + b i over an arbitrary coefficient field.
template <class F>
struct Complex {
  F re{0};
  F im{0};

  friend Complex operator+(const Complex& a, const Complex& b) { return {F(a.re + b.re), F(a.im + b.im)}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {F(a.re - b.re), F(a.im - b.im)}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {F(a.re * b.re - a.im * b.im), F(a.re * b.im + a.im * b.re)};
  }
  friend Complex operator/(const Complex& a, const Complex& b) {
    const F d = F(b.re * b.re + b.im * b.im);
    return {F((a.re * b.re + a.im * b.im) / d), F((a.im * b.re - a.re * b.im) / d)};
  }
  Complex& operator+=(const Complex& o) { return *this = *this + o; }
  Complex& operator-=(const Complex& o) { return *this = *this - o; }
  bool is_zero() const { return FieldTraits<F>::is_zero(re) && FieldTraits<F>::is_zero(im); }
  double magnitude() const { return std::hypot(FieldTraits<F>::to_double(re), FieldTraits<F>::to_double(im)); }
};

// Row-major square complex matrix.
template <class F>
class ComplexMatrix {
 public:
  explicit ComplexMatrix(int dim) : dim_(dim), a_(static_cast<std::size_t>(dim) * dim) {}

  int dim() const noexcept { return dim_; }
  Complex<F>& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * dim_ + c]; }
  const Complex<F>& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * dim_ + c]; }

  static ComplexMatrix identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i).re = F(1);
    return m;
  }

  Complex<F> trace() const {
    Complex<F> t;
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
  }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.dim_);
    for (int i = 0; i < a.dim_; ++i)
      for (int k = 0; k < a.dim_; ++k) {
        const Complex<F>& x = a(i, k);
        if (x.is_zero()) continue;
        for (int j = 0; j < a.dim_; ++j) out(i, j) += x * b(k, j);
      }
    return out;
  }

 private:
  int dim_;
  std::vector<Complex<F>> a_;
};

// Matrix with one nonzero entry per row: row r holds i^phase[r] in column
// col[r]. Products of Pauli matrices stay in this form.
struct MonomialMatrix {
  std::vector<int> col;
  std::vector<int> phase;  // mod 4

  int dim() const noexcept { return static_cast<int>(col.size()); }
  static MonomialMatrix identity(int dim);
  friend MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b);
  friend bool operator==(const MonomialMatrix&, const MonomialMatrix&) = default;
};

// Faithful complex representation of G(p,q) on C^N.
struct Representation {
  Signature sig;
  int dim = 0;                              // N
  std::vector<MonomialMatrix> generators;   // images of e_1..e_n
  std::vector<MonomialMatrix> blades;       // images of all 2^n basis blades
};

// Builds the representation and verifies it: generator squares equal the
// metric, distinct generators anticommute, e maps to I, and the blade images
// are linearly independent (Hermitian trace orthogonality). Throws
// ConsistencyError when a check fails.
Representation build_representation(const Signature& sig);

// Cached per signature.
const Representation& representation(const Signature& sig);

template <class F>
ComplexMatrix<F> represent(const Multivector<F>& u);

// Complex determinant by elimination (exact pivoting for rationals, partial
// pivoting for doubles).
template <class F>
Complex<F> matrix_determinant(ComplexMatrix<F> m);

// Det(U) = det(beta(U)). The imaginary part must vanish (exactly for
// rationals, relative to the Hadamard bound for doubles), else
// ConsistencyError.
template <class F>
F det_matrix(const Multivector<F>& u);

// Coefficients of det(lambda I - beta(U)) by the matrix Faddeev-LeVerrier
// recursion, in the same C_(k) convention as CharPoly.
template <class F>
CharPoly<F> charpoly_matrix(const Multivector<F>& u);

// The N eigenvalues of beta(U) with multiplicity, sorted by (real, imag):
// roots of the exactly computed characteristic polynomial of the given
// doubles. Throws std::invalid_argument for non-finite input.
std::vector<std::complex<double>> eigenvalues(const Multivector<double>& u);

extern template ComplexMatrix<Rational> represent(const Multivector<Rational>&);
extern template ComplexMatrix<double> represent(const Multivector<double>&);
extern template Complex<Rational> matrix_determinant(ComplexMatrix<Rational>);
extern template Complex<double> matrix_determinant(ComplexMatrix<double>);
extern template Rational det_matrix(const Multivector<Rational>&);
extern template double det_matrix(const Multivector<double>&);
extern template CharPoly<Rational> charpoly_matrix(const Multivector<Rational>&);
extern template CharPoly<double> charpoly_matrix(const Multivector<double>&);

}  // namespace cliffdet
