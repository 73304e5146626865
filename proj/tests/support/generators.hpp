#pragma once

// Hand-rolled generators for property tests, plus an independent product
// oracle that reduces generator words by adjacent swaps.

#include "cliffdet/multivector.hpp"

#include <random>
#include <vector>

namespace test_support {

using cliffdet::Multivector;
using cliffdet::Rational;
using cliffdet::Signature;

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x5eed'c11f'de7ULL);
  return engine;
}

// Integer coefficients in [-lo_hi, lo_hi]; each coefficient is zeroed with
// probability `sparsity` to reach sparse and degenerate shapes.
inline Multivector<Rational> random_rational(const Signature& sig, int lo_hi = 9, double sparsity = 0.0) {
  std::uniform_int_distribution<int> value(-lo_hi, lo_hi);
  std::bernoulli_distribution drop(sparsity);
  Multivector<Rational> u(sig);
  for (std::size_t i = 0; i < u.size(); ++i) u[i] = drop(rng()) ? 0 : value(rng());
  return u;
}

// Mixed integers and small fractions.
inline Multivector<Rational> random_fractional(const Signature& sig) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
  Multivector<Rational> u(sig);
  for (std::size_t i = 0; i < u.size(); ++i) {
    u[i] = Rational(num(rng()), den(rng()));
    u[i].canonicalize();
  }
  return u;
}

inline Multivector<double> random_float(const Signature& sig, double scale = 1.0) {
  std::uniform_real_distribution<double> value(-scale, scale);
  Multivector<double> u(sig);
  for (std::size_t i = 0; i < u.size(); ++i) u[i] = value(rng());
  return u;
}

inline Rational random_nonzero_rational() {
  std::uniform_int_distribution<int> num(-7, 7), den(1, 4);
  int n = 0;
  while (n == 0) n = num(rng());
  Rational r(n, den(rng()));
  r.canonicalize();
  return r;
}

// e_A e_B computed by writing both blades as generator words, bubble-sorting
// the concatenation (one sign flip per swap of distinct generators) and
// contracting equal neighbours with their metric.
inline std::pair<int, unsigned> word_product(const Signature& sig, unsigned a, unsigned b) {
  std::vector<int> word;
  for (int i = 0; i < sig.n(); ++i)
    if (a & (1u << i)) word.push_back(i);
  for (int i = 0; i < sig.n(); ++i)
    if (b & (1u << i)) word.push_back(i);
  int sign = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < word.size(); ++k) {
      if (word[k] > word[k + 1]) {
        std::swap(word[k], word[k + 1]);
        sign = -sign;
        changed = true;
      } else if (word[k] == word[k + 1]) {
        sign *= sig.metric(word[k]);
        word.erase(word.begin() + static_cast<long>(k), word.begin() + static_cast<long>(k) + 2);
        changed = true;
        break;
      }
    }
  }
  unsigned bits = 0;
  for (int g : word) bits |= 1u << g;
  return {sign, bits};
}

template <class F>
Multivector<F> oracle_product(const Multivector<F>& x, const Multivector<F>& y) {
  const Signature& sig = x.signature();
  Multivector<F> out(sig);
  for (unsigned a = 0; a < sig.blade_count(); ++a)
    for (unsigned b = 0; b < sig.blade_count(); ++b) {
      const auto [s, c] = word_product(sig, a, b);
      out[c] += F(s) * F(x[a] * y[b]);
    }
  return out;
}

}  // namespace test_support
