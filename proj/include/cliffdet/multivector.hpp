#pragma once

#include "cliffdet/blade.hpp"
#include "cliffdet/errors.hpp"
#include "cliffdet/field.hpp"
#include "cliffdet/signature.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cliffdet {

// Dense multivector over G(p,q): one coefficient per basis blade, indexed by
// the blade bitmask.
template <class F>
class Multivector {
 public:
  using value_type = F;

  explicit Multivector(Signature sig) : sig_(sig), coeffs_(sig.blade_count(), F(0)) {}

  Multivector(Signature sig, std::vector<F> coeffs) : sig_(sig), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != sig_.blade_count()) {
      throw std::invalid_argument("coefficient count must equal 2^n");
    }
  }

  static Multivector identity(Signature sig) { return scalar(sig, F(1)); }

  static Multivector scalar(Signature sig, F value) {
    Multivector m(sig);
    m.coeffs_[0] = std::move(value);
    return m;
  }

  static Multivector basis(Signature sig, BladeIndex b, F value = F(1)) {
    if (b.bits >= sig.blade_count()) throw std::out_of_range("blade index outside the algebra");
    Multivector m(sig);
    m.coeffs_[b.bits] = std::move(value);
    return m;
  }

  const Signature& signature() const noexcept { return sig_; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  const F& coeff(BladeIndex b) const { return coeffs_.at(b.bits); }
  F& coeff(BladeIndex b) { return coeffs_.at(b.bits); }
  const F& operator[](std::size_t i) const noexcept { return coeffs_[i]; }
  F& operator[](std::size_t i) noexcept { return coeffs_[i]; }

  std::span<const F> coeffs() const noexcept { return coeffs_; }
  std::span<F> coeffs() noexcept { return coeffs_; }

  const F& scalar_part() const noexcept { return coeffs_[0]; }

  bool is_zero() const {
    for (const F& c : coeffs_)
      if (!FieldTraits<F>::is_zero(c)) return false;
    return true;
  }

  // True when every grade >= 1 coefficient vanishes.
  bool is_scalar() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (!FieldTraits<F>::is_zero(coeffs_[i])) return false;
    return true;
  }

  Multivector& operator+=(const Multivector& o) {
    check_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  Multivector& operator-=(const Multivector& o) {
    check_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  Multivector& operator*=(const F& s) {
    for (F& c : coeffs_) c *= s;
    return *this;
  }

  // Adds s * e.
  Multivector& add_scalar(const F& s) {
    coeffs_[0] += s;
    return *this;
  }

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator-(Multivector a) {
    for (F& c : a.coeffs_) c = -c;
    return a;
  }
  friend Multivector operator*(Multivector a, const F& s) { return a *= s; }
  friend Multivector operator*(const F& s, Multivector a) { return a *= s; }

  void check_same(const Multivector& o) const {
    if (!(sig_ == o.sig_)) throw SignatureMismatch();
  }

 private:
  Signature sig_;
  std::vector<F> coeffs_;
};

// Coefficient-wise equality: exact for rationals, toleranced for doubles.
template <class F>
bool equal(const Multivector<F>& a, const Multivector<F>& b) {
  if (!(a.signature() == b.signature())) throw SignatureMismatch();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!FieldTraits<F>::equal(a[i], b[i])) return false;
  return true;
}

template <class F>
bool operator==(const Multivector<F>& a, const Multivector<F>& b) {
  return equal(a, b);
}

template <class F>
Multivector<F> geometric_product(const Multivector<F>& a, const Multivector<F>& b);

template <class F>
Multivector<F> operator*(const Multivector<F>& a, const Multivector<F>& b) {
  return geometric_product(a, b);
}

// Keeps grade-k coefficients. Throws std::out_of_range unless 0 <= k <= n.
template <class F>
Multivector<F> grade_projection(const Multivector<F>& u, int k) {
  if (k < 0 || k > u.signature().n()) throw std::out_of_range("grade outside [0, n]");
  Multivector<F> out(u.signature());
  for (std::size_t i = 0; i < u.size(); ++i)
    if (BladeIndex(static_cast<unsigned>(i)).grade() == k) out[i] = u[i];
  return out;
}

template <class F>
const F& scalar_part(const Multivector<F>& u) {
  return u.scalar_part();
}

// Tr(U) = N <U>_0, the trace of the complex representation.
template <class F>
F trace(const Multivector<F>& u) {
  return F(u.scalar_part() * F(u.signature().N()));
}

// Sum of absolute coefficient values; bounds the magnitude of every
// coefficient of a product of k conjugates of u by l1_norm(u)^k.
template <class F>
double l1_norm(const Multivector<F>& u) {
  double s = 0;
  for (const F& c : u.coeffs()) s += FieldTraits<F>::magnitude(c);
  return s;
}

extern template Multivector<Rational> geometric_product(const Multivector<Rational>&,
                                                        const Multivector<Rational>&);
extern template Multivector<double> geometric_product(const Multivector<double>&,
                                                      const Multivector<double>&);

}  // namespace cliffdet
