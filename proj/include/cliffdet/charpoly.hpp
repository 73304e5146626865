#pragma once

#include "cliffdet/errors.hpp"
#include "cliffdet/multivector.hpp"

#include <cmath>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace cliffdet {

// Characteristic polynomial phi_U(x) = x^N - C_1 x^{N-1} - ... - C_N, stored as
// C_1..C_N. C_1 = Tr(U), -C_N = Det(U).
template <class F>
class CharPoly {
 public:
  CharPoly(Signature sig, std::vector<F> coeffs) : sig_(sig), coeffs_(std::move(coeffs)) {
    if (static_cast<int>(coeffs_.size()) != sig_.N()) {
      throw std::invalid_argument("characteristic polynomial needs exactly N coefficients");
    }
  }

  const Signature& signature() const noexcept { return sig_; }
  int degree() const noexcept { return sig_.N(); }

  // C_k for 1 <= k <= N.
  const F& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k - 1)); }
  std::span<const F> coefficients() const noexcept { return coeffs_; }

  F trace() const { return coeffs_.front(); }
  F determinant() const { return F(-coeffs_.back()); }

  // phi(lambda) for a scalar lambda.
  F evaluate(const F& lambda) const {
    F acc(1);
    for (const F& c : coeffs_) acc = F(acc * lambda - c);
    return acc;
  }

  // phi(x) as a multivector, by Horner's rule.
  Multivector<F> evaluate(const Multivector<F>& x) const {
    if (!(x.signature() == sig_)) throw SignatureMismatch();
    Multivector<F> acc = Multivector<F>::identity(sig_);
    for (const F& c : coeffs_) {
      acc = acc * x;
      acc.add_scalar(F(-c));
    }
    return acc;
  }

 private:
  Signature sig_;
  std::vector<F> coeffs_;
};

template <class F>
bool operator==(const CharPoly<F>& a, const CharPoly<F>& b) {
  if (!(a.signature() == b.signature())) return false;
  for (int k = 1; k <= a.degree(); ++k)
    if (!FieldTraits<F>::equal(a[k], b[k])) return false;
  return true;
}

// State left by the Faddeev-LeVerrier recursion
//   U_(1) = U,  C_(k) = (N/k) <U_(k)>_0,  U_(k+1) = U (U_(k) - C_(k)).
// `penultimate` is U_(N-1); the adjugate is C_(N-1) e - U_(N-1).
template <class F>
struct FaddeevLeVerrier {
  CharPoly<F> poly;
  Multivector<F> penultimate;
};

template <class F>
FaddeevLeVerrier<F> faddeev_leverrier(const Multivector<F>& u);

template <class F>
CharPoly<F> fl_coefficients(const Multivector<F>& u) {
  return faddeev_leverrier(u).poly;
}

// Det(U) = -C_(N).
template <class F>
F det_fl(const Multivector<F>& u) {
  return faddeev_leverrier(u).poly.determinant();
}

// U Adj(U) = Adj(U) U = Det(U) e.
template <class F>
Multivector<F> adjugate(const Multivector<F>& u);

// Adj(U) / Det(U). Throws NotInvertible when Det(U) vanishes (exactly for
// rationals, within the float equality tolerance for doubles).
template <class F>
Multivector<F> inverse(const Multivector<F>& u);

// Coefficients of the unique degree-N polynomial through the points
// (x_i, y_i), lowest power first, by Newton divided differences.
template <class F>
std::vector<F> interpolate_monomial(std::span<const F> xs, std::span<const F> ys) {
  const std::size_t n = xs.size();
  std::vector<F> dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = F((dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]));
      if (i == level) break;
    }
  }
  // Horner over the Newton basis: p = dd[n-1]; p = p (x - x_i) + dd[i].
  std::vector<F> poly(n, F(0));
  poly[0] = dd[n - 1];
  std::size_t deg = 0;
  for (std::size_t i = n - 1; i-- > 0;) {
    // poly *= (x - xs[i])
    ++deg;
    for (std::size_t d = deg; d > 0; --d) poly[d] = F(poly[d - 1] - xs[i] * poly[d]);
    poly[0] = F(-xs[i] * poly[0]);
    poly[0] += dd[i];
  }
  return poly;
}

// Characteristic polynomial reconstructed from determinants: evaluates
// D(lambda) = Det(lambda e - U) at lambda = 0, 1, ..., N with the supplied
// determinant routine and interpolates. For doubles, throws IllConditioned
// when the fitted leading coefficient differs from 1 by more than 1e-6.
template <class F, class DetFn>
CharPoly<F> charpoly_interp(const Multivector<F>& u, DetFn&& det) {
  const Signature& sig = u.signature();
  const int N = sig.N();
  std::vector<F> xs, ys;
  xs.reserve(N + 1);
  ys.reserve(N + 1);
  for (int i = 0; i <= N; ++i) {
    F lambda(i);
    Multivector<F> shifted = -u;
    shifted.add_scalar(lambda);
    ys.push_back(F(det(static_cast<const Multivector<F>&>(shifted))));
    xs.push_back(std::move(lambda));
  }
  std::vector<F> poly = interpolate_monomial<F>(xs, ys);
  const F& lead = poly[N];
  if constexpr (FieldTraits<F>::exact) {
    if (lead != 1) throw ConsistencyError("interpolated characteristic polynomial is not monic");
  } else {
    if (std::fabs(lead - 1.0) > 1e-6) {
      throw IllConditioned("interpolated leading coefficient " + FieldTraits<F>::to_string(lead) +
                           " deviates from 1");
    }
  }
  std::vector<F> coeffs(N);
  for (int k = 1; k <= N; ++k) coeffs[k - 1] = F(-poly[N - k]);
  return CharPoly<F>(sig, std::move(coeffs));
}

extern template FaddeevLeVerrier<Rational> faddeev_leverrier(const Multivector<Rational>&);
extern template FaddeevLeVerrier<double> faddeev_leverrier(const Multivector<double>&);
extern template Multivector<Rational> adjugate(const Multivector<Rational>&);
extern template Multivector<double> adjugate(const Multivector<double>&);
extern template Multivector<Rational> inverse(const Multivector<Rational>&);
extern template Multivector<double> inverse(const Multivector<double>&);

}  // namespace cliffdet
