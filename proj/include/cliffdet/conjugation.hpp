#pragma once

#include "cliffdet/multivector.hpp"

#include <stdexcept>
#include <string>

namespace cliffdet {

// Grade-sign conjugations. Each multiplies the grade-k part of U by a sign
// that depends on k only, so all of them are linear, involutive and fix e.
//
//   GradeInvolution  (-1)^k
//   Reversion        (-1)^(k(k-1)/2)
//   Delta(j)         (-1)^binomial(k, 2^(j-1)),  1 <= j <= m
//   Bar              +1 on grade 0, -1 elsewhere  (U -> 2<U>_0 - U)
//
// Delta(1) acts as GradeInvolution and Delta(2) as Reversion; Delta(3) is the
// triangle operation that flips grades 4..7 mod 8.
class Conjugation {
 public:
  enum class Kind { GradeInvolution, Reversion, Delta, Bar };

  static constexpr Conjugation hat() { return Conjugation(Kind::GradeInvolution, 0); }
  static constexpr Conjugation tilde() { return Conjugation(Kind::Reversion, 0); }
  static constexpr Conjugation bar() { return Conjugation(Kind::Bar, 0); }
  static constexpr Conjugation delta(int j) {
    if (j < 1) throw std::invalid_argument("Delta(j) needs j >= 1");
    return Conjugation(Kind::Delta, j);
  }
  // Delta(3), written U^triangle.
  static constexpr Conjugation triangle() { return delta(3); }

  constexpr Kind kind() const noexcept { return kind_; }
  constexpr int order() const noexcept { return j_; }

  constexpr int sign(int grade) const noexcept {
    switch (kind_) {
      case Kind::GradeInvolution: return (grade & 1) ? -1 : 1;
      case Kind::Reversion: return ((grade * (grade - 1) / 2) & 1) ? -1 : 1;
      // binomial(k, 2^(j-1)) is odd exactly when bit j-1 of k is set (Lucas).
      case Kind::Delta: return ((grade >> (j_ - 1)) & 1) ? -1 : 1;
      case Kind::Bar: return grade == 0 ? 1 : -1;
    }
    return 1;
  }

  // Throws std::invalid_argument when Delta(j) has j > m for sig.
  void check(const Signature& sig) const {
    if (kind_ == Kind::Delta && j_ > sig.m()) {
      throw std::invalid_argument("Delta(" + std::to_string(j_) + ") undefined for n = " + std::to_string(sig.n()));
    }
  }

  // "hat", "tilde", "bar", "delta<j>".
  std::string name() const {
    switch (kind_) {
      case Kind::GradeInvolution: return "hat";
      case Kind::Reversion: return "tilde";
      case Kind::Delta: return "delta" + std::to_string(j_);
      case Kind::Bar: return "bar";
    }
    return "?";
  }

  friend constexpr bool operator==(const Conjugation&, const Conjugation&) = default;

 private:
  constexpr Conjugation(Kind k, int j) : kind_(k), j_(j) {}
  Kind kind_;
  int j_;
};

// Inverse of Conjugation::name(); throws std::invalid_argument.
Conjugation parse_conjugation(const std::string& name);

template <class F>
Multivector<F> conjugate(Multivector<F> u, Conjugation c) {
  c.check(u.signature());
  for (std::size_t i = 0; i < u.size(); ++i)
    if (c.sign(BladeIndex(static_cast<unsigned>(i)).grade()) < 0) u[i] = -u[i];
  return u;
}

template <class F>
Multivector<F> hat(Multivector<F> u) {
  return conjugate(std::move(u), Conjugation::hat());
}
template <class F>
Multivector<F> tilde(Multivector<F> u) {
  return conjugate(std::move(u), Conjugation::tilde());
}
template <class F>
Multivector<F> hat_tilde(Multivector<F> u) {
  return conjugate(conjugate(std::move(u), Conjugation::tilde()), Conjugation::hat());
}
template <class F>
Multivector<F> bar(Multivector<F> u) {
  return conjugate(std::move(u), Conjugation::bar());
}
template <class F>
Multivector<F> triangle(Multivector<F> u) {
  return conjugate(std::move(u), Conjugation::triangle());
}

// <U>_0 e as the average of U over all 2^m compositions of Delta(1..m).
template <class F>
Multivector<F> scalar_projection_by_deltas(const Multivector<F>& u) {
  const int m = u.signature().m();
  Multivector<F> sum(u.signature());
  for (unsigned subset = 0; subset < (1u << m); ++subset) {
    Multivector<F> term = u;
    for (int j = 1; j <= m; ++j)
      if (subset & (1u << (j - 1))) term = conjugate(std::move(term), Conjugation::delta(j));
    sum += term;
  }
  return sum * FieldTraits<F>::from_rational(Rational(1, 1ul << m));
}

}  // namespace cliffdet
