#pragma once

#include "cliffdet/charpoly.hpp"
#include "cliffdet/formula.hpp"
#include "cliffdet/multivector.hpp"

#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cliffdet {

// Independent routes to Det(U) and the characteristic coefficients.
enum class Method {
  FaddeevLeVerrier,  // "fl"
  ClosedTriangle,    // "closed-triangle": basis-free formula with hat/tilde/Delta
  ClosedBar,         // "closed-bar": first cataloged of bar, bar-tilde, bar-tilde-hat
  VietaTriangle,     // "vieta-triangle": tuple sums of the triangle F function
  VietaBar,          // "vieta-bar": tuple sums of the closed-bar F function
  Matrix,            // "matrix": complex matrix representation
  Interp,            // "interp": Det(lambda e - U) via the matrix route, interpolated
};

std::string_view method_name(Method m);
Method parse_method(std::string_view name);  // throws std::invalid_argument
std::span<const Method> all_methods();

// The formula behind closed-bar / vieta-bar for dimension n.
const DetFormula& closed_bar_formula(int n);

// The formula used by a closed-* or vieta-* method; throws
// std::invalid_argument for other methods.
const DetFormula& method_formula(Method m, int n);

template <class F>
F determinant(const Multivector<F>& u, Method m);

// For closed-* methods the coefficients come from interpolating the formula's
// determinant at lambda = 0..N.
template <class F>
CharPoly<F> characteristic_polynomial(const Multivector<F>& u, Method m);

// Adjugate from the FL recursion or from a closed formula (the formula with
// one bare U removed). Other methods throw std::invalid_argument.
template <class F>
Multivector<F> adjugate_by(const Multivector<F>& u, Method m);

template <class F>
struct MethodResult {
  Method method;
  std::vector<F> coefficients;  // C_1..C_N; empty when the method failed
  std::string error;
};

template <class F>
struct CrossCheck {
  std::vector<MethodResult<F>> results;
  bool consistent = true;
  std::string detail;  // first disagreement, if any
};

// Runs every method and compares each against Faddeev-LeVerrier: exact
// equality for rationals, C_k within 1e-9 * binomial(N, k) * max(1, |U|_1)^k
// for doubles. Interpolation routes lose accuracy for large-magnitude float
// input; they then fail with IllConditioned, which counts as a disagreement.
template <class F>
CrossCheck<F> cross_check(const Multivector<F>& u);

// Uniform random coefficients: integers in [-9, 9] for rationals, reals in
// [-1, 1] for doubles.
template <class F>
Multivector<F> random_multivector(const Signature& sig, std::mt19937_64& rng);

extern template Rational determinant(const Multivector<Rational>&, Method);
extern template double determinant(const Multivector<double>&, Method);
extern template CharPoly<Rational> characteristic_polynomial(const Multivector<Rational>&, Method);
extern template CharPoly<double> characteristic_polynomial(const Multivector<double>&, Method);
extern template Multivector<Rational> adjugate_by(const Multivector<Rational>&, Method);
extern template Multivector<double> adjugate_by(const Multivector<double>&, Method);
extern template CrossCheck<Rational> cross_check(const Multivector<Rational>&);
extern template CrossCheck<double> cross_check(const Multivector<double>&);
extern template Multivector<Rational> random_multivector(const Signature&, std::mt19937_64&);
extern template Multivector<double> random_multivector(const Signature&, std::mt19937_64&);

}  // namespace cliffdet
