#include "cliffdet/charpoly.hpp"

namespace cliffdet {

template <class F>
FaddeevLeVerrier<F> faddeev_leverrier(const Multivector<F>& u) {
  const Signature& sig = u.signature();
  const int N = sig.N();
  std::vector<F> coeffs;
  coeffs.reserve(N);
  Multivector<F> current = u;  // U_(k)
  Multivector<F> penultimate = u;
  for (int k = 1; k <= N; ++k) {
    F c = F(current.scalar_part() * F(N));
    c /= F(k);
    coeffs.push_back(c);
    if (k == N) break;
    if (k == N - 1) penultimate = current;
    current.add_scalar(F(-c));
    current = u * current;
  }
  return {CharPoly<F>(sig, std::move(coeffs)), std::move(penultimate)};
}

template <class F>
Multivector<F> adjugate(const Multivector<F>& u) {
  FaddeevLeVerrier<F> fl = faddeev_leverrier(u);
  Multivector<F> adj = -fl.penultimate;
  adj.add_scalar(fl.poly[u.signature().N() - 1]);
  return adj;
}

template <class F>
Multivector<F> inverse(const Multivector<F>& u) {
  FaddeevLeVerrier<F> fl = faddeev_leverrier(u);
  const F det = fl.poly.determinant();
  if (FieldTraits<F>::is_zero(det)) throw NotInvertible(FieldTraits<F>::to_string(det));
  Multivector<F> adj = -fl.penultimate;
  adj.add_scalar(fl.poly[u.signature().N() - 1]);
  return adj * F(F(1) / det);
}

template FaddeevLeVerrier<Rational> faddeev_leverrier(const Multivector<Rational>&);
template FaddeevLeVerrier<double> faddeev_leverrier(const Multivector<double>&);
template Multivector<Rational> adjugate(const Multivector<Rational>&);
template Multivector<double> adjugate(const Multivector<double>&);
template Multivector<Rational> inverse(const Multivector<Rational>&);
template Multivector<double> inverse(const Multivector<double>&);

}  // namespace cliffdet
