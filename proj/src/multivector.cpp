#include "cliffdet/multivector.hpp"

#include "cliffdet/kernels.hpp"

namespace cliffdet {

template <class F>
Multivector<F> geometric_product(const Multivector<F>& a, const Multivector<F>& b) {
  a.check_same(b);
  Multivector<F> out(a.signature());
  kernels::product(a.signature(), a.coeffs(), b.coeffs(), out.coeffs());
  return out;
}

template Multivector<Rational> geometric_product(const Multivector<Rational>&, const Multivector<Rational>&);
template Multivector<double> geometric_product(const Multivector<double>&, const Multivector<double>&);

}  // namespace cliffdet
