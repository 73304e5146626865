#pragma once

#include "cliffdet/charpoly.hpp"
#include "cliffdet/formula.hpp"

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace cliffdet {

// A determinant formula read as a function of N independent arguments: the
// i-th occurrence of U (left to right, separately in each term) becomes x_i.
struct FFunction {
  std::string name;
  int n = 0;
  Family family = Family::Triangle;
  int arity = 0;
  std::vector<FormulaTerm> terms;
};

FFunction f_function(const DetFormula& formula);

// Throws UnknownFormula when the catalog has no (n, family) formula and
// std::invalid_argument for n outside [1, 6].
FFunction f_function(int n, Family family);

// F(x_1, ..., x_N). Throws std::invalid_argument unless slots.size() == arity.
template <class F>
Multivector<F> evaluate_f(const FFunction& f, std::span<const Multivector<F>> slots);

// X(k) as bitmasks over the N slot positions (bit i set: x_{i+1} = U, else e),
// in increasing numeric order. |X(k)| = binomial(N, k).
std::vector<std::uint32_t> x_tuples(int arity, int k);

// F(X) for every mask X in [0, 2^N), sharing subexpressions between tuples:
// each subtree is evaluated once per assignment of its own slots.
template <class F>
std::vector<Multivector<F>> f_on_all_tuples(const FFunction& f, const Multivector<F>& u);

// Sum of F(X) over the given tuples, in the given order.
template <class F>
Multivector<F> vieta_sum(const FFunction& f, const Multivector<F>& u, std::span<const std::uint32_t> tuples);

// C_(k) = (-1)^{k+1} sum_{X in X(k)} F(X). Throws ConsistencyError when the
// sum has a nonscalar part.
template <class F>
F vieta_coefficient(const FFunction& f, const Multivector<F>& u, int k);

// All C_(k), k = 1..N.
template <class F>
CharPoly<F> vieta_all(const FFunction& f, const Multivector<F>& u);

// Ordered solutions x_k of phi_U(x) = 0, Vandermonde elements
// v_k = P_{k-1}(x_k), and y_k = v_k x_k v_k^{-1}.
template <class F>
struct GelfandRetakhSet {
  std::vector<Multivector<F>> xs;
  std::vector<Multivector<F>> vs;
  std::vector<Multivector<F>> ys;
};

// Runs the construction for an arbitrary ordered solution list. Throws
// NotGeneric(k) when Det(v_k) vanishes.
template <class F>
GelfandRetakhSet<F> gelfand_retakh(std::vector<Multivector<F>> xs);

// The known generic orderings for n <= 3:
//   n = 1: (U, hat U)
//   n = 2: (U, tilde U)
//   n = 3: (U, hat tilde U, hat U, tilde U)
// Throws std::invalid_argument for n > 3.
template <class F>
std::vector<Multivector<F>> gelfand_retakh_solutions(const Multivector<F>& u);

template <class F>
GelfandRetakhSet<F> gelfand_retakh_ys(const Multivector<F>& u) {
  return gelfand_retakh(gelfand_retakh_solutions(u));
}

// a_k = (-1)^{k+1} sum_{i_1 < ... < i_k} y_{i_k} ... y_{i_1}, k = 1..N.
template <class F>
std::vector<Multivector<F>> noncommutative_vieta(std::span<const Multivector<F>> ys);

// n <= 2 comparison of eigenvalues with the y_k:
//   lambda_{1,2} = <U>_0 +- sqrt(g^2),  y_{1,2} = <U>_0 +- g,  g = U - <U>_0.
struct EigenComparison {
  double radicand = 0;  // g^2, a scalar for n <= 2
  bool complex_pair = false;
  std::complex<double> lambda1, lambda2;
  std::vector<Multivector<double>> ys;
  double c1 = 0, c2 = 0;          // from Faddeev-LeVerrier
  bool vieta_sum_ok = false;      // lambda1 + lambda2 == C_(1)
  bool vieta_product_ok = false;  // lambda1 lambda2 == -C_(2)
  bool coincide = false;          // lambdas equal the y's (g == 0)
};

// Throws std::invalid_argument for n > 2.
EigenComparison eigen_compare(const Multivector<double>& u);

extern template Multivector<Rational> evaluate_f(const FFunction&, std::span<const Multivector<Rational>>);
extern template Multivector<double> evaluate_f(const FFunction&, std::span<const Multivector<double>>);
extern template std::vector<Multivector<Rational>> f_on_all_tuples(const FFunction&, const Multivector<Rational>&);
extern template std::vector<Multivector<double>> f_on_all_tuples(const FFunction&, const Multivector<double>&);
extern template Multivector<Rational> vieta_sum(const FFunction&, const Multivector<Rational>&,
                                                std::span<const std::uint32_t>);
extern template Multivector<double> vieta_sum(const FFunction&, const Multivector<double>&,
                                              std::span<const std::uint32_t>);
extern template Rational vieta_coefficient(const FFunction&, const Multivector<Rational>&, int);
extern template double vieta_coefficient(const FFunction&, const Multivector<double>&, int);
extern template CharPoly<Rational> vieta_all(const FFunction&, const Multivector<Rational>&);
extern template CharPoly<double> vieta_all(const FFunction&, const Multivector<double>&);
extern template GelfandRetakhSet<Rational> gelfand_retakh(std::vector<Multivector<Rational>>);
extern template GelfandRetakhSet<double> gelfand_retakh(std::vector<Multivector<double>>);
extern template std::vector<Multivector<Rational>> gelfand_retakh_solutions(const Multivector<Rational>&);
extern template std::vector<Multivector<double>> gelfand_retakh_solutions(const Multivector<double>&);
extern template std::vector<Multivector<Rational>> noncommutative_vieta(std::span<const Multivector<Rational>>);
extern template std::vector<Multivector<double>> noncommutative_vieta(std::span<const Multivector<double>>);

}  // namespace cliffdet
