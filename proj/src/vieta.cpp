#include "cliffdet/vieta.hpp"

#include "cliffdet/errors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace cliffdet {

FFunction f_function(const DetFormula& formula) {
  return FFunction{formula.name, formula.n, formula.family, formula.arity(), formula.terms};
}

FFunction f_function(int n, Family family) {
  if (n < 1 || n > kMaxDimension) throw std::invalid_argument("n must be in [1, 6]");
  return f_function(det_formula(n, family));
}

template <class F>
Multivector<F> evaluate_f(const FFunction& f, std::span<const Multivector<F>> slots) {
  if (static_cast<int>(slots.size()) != f.arity) {
    throw std::invalid_argument("F function " + f.name + " takes " + std::to_string(f.arity) + " arguments, got " +
                                std::to_string(slots.size()));
  }
  Multivector<F> sum(slots.front().signature());
  for (const FormulaTerm& t : f.terms) {
    Multivector<F> value = evaluate_word<F>(t.word, slots);
    if (t.weight != 1) value *= FieldTraits<F>::from_rational(t.weight);
    sum += value;
  }
  return sum;
}

std::vector<std::uint32_t> x_tuples(int arity, int k) {
  if (arity < 0 || arity > 30) throw std::invalid_argument("arity out of range");
  std::vector<std::uint32_t> out;
  if (k < 0 || k > arity) return out;
  for (std::uint32_t mask = 0; mask < (1u << arity); ++mask)
    if (std::popcount(mask) == k) out.push_back(mask);
  return out;
}

namespace {

// Values of a subtree for every assignment of its own slots, indexed by a
// local mask whose bit i refers to the subtree's i-th slot. Slots of a subtree
// are contiguous, so a product's table index is left_mask | right_mask << w.
template <class F>
std::vector<Multivector<F>> subset_table(const Word& w, const Multivector<F>& u) {
  switch (w.op) {
    case Word::Op::Slot:
      return {Multivector<F>::identity(u.signature()), u};
    case Word::Op::Conjugate: {
      w.conj.check(u.signature());
      std::vector<Multivector<F>> t = subset_table(w.children.front(), u);
      // Conjugations fix e, so entry 0 stays.
      for (std::size_t i = 1; i < t.size(); ++i) t[i] = conjugate(std::move(t[i]), w.conj);
      return t;
    }
    case Word::Op::Product: {
      std::vector<Multivector<F>> acc = subset_table(w.children.front(), u);
      for (std::size_t c = 1; c < w.children.size(); ++c) {
        const std::vector<Multivector<F>> right = subset_table(w.children[c], u);
        const int shift = std::countr_zero(acc.size());
        std::vector<Multivector<F>> next(acc.size() * right.size(), Multivector<F>(u.signature()));
        for (std::size_t mb = 0; mb < right.size(); ++mb) {
          for (std::size_t ma = 0; ma < acc.size(); ++ma) {
            const std::size_t idx = ma | (mb << shift);
            if (ma == 0) next[idx] = right[mb];
            else if (mb == 0) next[idx] = acc[ma];
            else next[idx] = acc[ma] * right[mb];
          }
        }
        acc = std::move(next);
      }
      return acc;
    }
  }
  throw std::logic_error("malformed word");
}

template <class F>
void check_dimension(const FFunction& f, const Multivector<F>& u) {
  if (u.signature().n() != f.n) {
    throw std::invalid_argument("F function " + f.name + " is for n = " + std::to_string(f.n) + ", got n = " +
                                std::to_string(u.signature().n()));
  }
}

template <class F>
Multivector<F> masked_sum(const std::vector<Multivector<F>>& table, std::span<const std::uint32_t> tuples,
                          const Signature& sig) {
  Multivector<F> sum(sig);
  for (std::uint32_t mask : tuples) sum += table.at(mask);
  return sum;
}

// Nonscalar tolerance for sum_{X(k)} F(X): each of the binomial(N, k) terms
// is a product bounded by l1(U)^k.
template <class F>
double tuple_sum_scale(const Multivector<F>& u, int arity, int k) {
  double binom = 1;
  for (int i = 0; i < k; ++i) binom = binom * (arity - i) / (i + 1);
  return std::max(1.0, binom * std::pow(l1_norm(u), k));
}

template <class F>
F signed_coefficient(const Multivector<F>& sum, int k) {
  F c = sum.scalar_part();
  if (k % 2 == 0) c = F(-c);
  return c;
}

}  // namespace

template <class F>
std::vector<Multivector<F>> f_on_all_tuples(const FFunction& f, const Multivector<F>& u) {
  check_dimension(f, u);
  std::vector<Multivector<F>> total(std::size_t{1} << f.arity, Multivector<F>(u.signature()));
  for (const FormulaTerm& t : f.terms) {
    std::vector<Multivector<F>> table = subset_table(t.word, u);
    if (table.size() != total.size()) throw std::logic_error("term arity differs from F arity");
    const bool weighted = t.weight != 1;
    const F w = FieldTraits<F>::from_rational(t.weight);
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (weighted) table[i] *= w;
      total[i] += table[i];
    }
  }
  return total;
}

template <class F>
Multivector<F> vieta_sum(const FFunction& f, const Multivector<F>& u, std::span<const std::uint32_t> tuples) {
  const std::uint32_t limit = 1u << f.arity;
  for (std::uint32_t mask : tuples)
    if (mask >= limit) throw std::invalid_argument("tuple mask exceeds the F arity");
  return masked_sum(f_on_all_tuples(f, u), tuples, u.signature());
}

template <class F>
F vieta_coefficient(const FFunction& f, const Multivector<F>& u, int k) {
  if (k < 1 || k > f.arity) throw std::out_of_range("Vieta coefficient index out of range");
  Multivector<F> sum(u.signature());
  if (k == f.arity) {
    // X(N) is the single tuple (U, ..., U).
    check_dimension(f, u);
    const std::vector<Multivector<F>> slots(static_cast<std::size_t>(f.arity), u);
    sum = evaluate_f<F>(f, slots);
  } else {
    const std::vector<std::uint32_t> tuples = x_tuples(f.arity, k);
    sum = vieta_sum(f, u, std::span<const std::uint32_t>(tuples));
  }
  require_scalar(sum, tuple_sum_scale(u, f.arity, k), "Vieta tuple sum");
  return signed_coefficient(sum, k);
}

template <class F>
CharPoly<F> vieta_all(const FFunction& f, const Multivector<F>& u) {
  const std::vector<Multivector<F>> table = f_on_all_tuples(f, u);
  std::vector<F> coeffs;
  coeffs.reserve(static_cast<std::size_t>(f.arity));
  for (int k = 1; k <= f.arity; ++k) {
    const std::vector<std::uint32_t> tuples = x_tuples(f.arity, k);
    Multivector<F> sum = masked_sum(table, std::span<const std::uint32_t>(tuples), u.signature());
    require_scalar(sum, tuple_sum_scale(u, f.arity, k), "Vieta tuple sum");
    coeffs.push_back(signed_coefficient(sum, k));
  }
  return CharPoly<F>(u.signature(), std::move(coeffs));
}

namespace {

// E_j of (z_1, ..., z_r) with products taken in descending index order:
// E_j = sum_{i_1 < ... < i_j} z_{i_j} ... z_{i_1}.
template <class F>
std::vector<Multivector<F>> descending_elementary(std::span<const Multivector<F>> zs, const Signature& sig) {
  std::vector<Multivector<F>> e(zs.size() + 1, Multivector<F>(sig));
  e[0] = Multivector<F>::identity(sig);
  for (std::size_t i = 0; i < zs.size(); ++i)
    for (std::size_t j = i + 1; j >= 1; --j) e[j] += zs[i] * e[j - 1];
  return e;
}

template <class F>
bool determinant_vanishes(const F& det, const Multivector<F>& v) {
  if constexpr (FieldTraits<F>::exact) {
    return det == 0;
  } else {
    const double scale = std::max(1.0, std::pow(l1_norm(v), v.signature().N()));
    return std::fabs(det) <= 1e-12 * scale;
  }
}

}  // namespace

template <class F>
GelfandRetakhSet<F> gelfand_retakh(std::vector<Multivector<F>> xs) {
  if (xs.empty()) throw std::invalid_argument("need at least one solution");
  const Signature sig = xs.front().signature();
  for (const auto& x : xs) x.check_same(xs.front());
  GelfandRetakhSet<F> out;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const Multivector<F>& x = xs[k];
    // v = x^k - E_1 x^{k-1} + ... + (-1)^k E_k, elementary sums over the
    // previous y's, coefficients on the left.
    const std::vector<Multivector<F>> e = descending_elementary<F>(out.ys, sig);
    Multivector<F> v(sig);
    Multivector<F> power = Multivector<F>::identity(sig);  // x^(k - j), built from j = k down
    for (std::size_t j = k + 1; j-- > 0;) {
      Multivector<F> term = e[j] * power;
      if (j % 2 == 1) v -= term;
      else v += term;
      if (j > 0) power = power * x;
    }
    auto fl = faddeev_leverrier(v);
    const F det = fl.poly.determinant();
    if (determinant_vanishes(det, v)) throw NotGeneric(static_cast<int>(k + 1));
    out.ys.push_back(v * x * inverse(v));
    out.vs.push_back(std::move(v));
  }
  out.xs = std::move(xs);
  return out;
}

template <class F>
std::vector<Multivector<F>> gelfand_retakh_solutions(const Multivector<F>& u) {
  switch (u.signature().n()) {
    case 1: return {u, hat(u)};
    case 2: return {u, tilde(u)};
    case 3: return {u, hat_tilde(u), hat(u), tilde(u)};
    default: throw std::invalid_argument("ordered solutions are known only for n <= 3");
  }
}

template <class F>
std::vector<Multivector<F>> noncommutative_vieta(std::span<const Multivector<F>> ys) {
  if (ys.empty()) return {};
  std::vector<Multivector<F>> e = descending_elementary<F>(ys, ys.front().signature());
  std::vector<Multivector<F>> a;
  a.reserve(ys.size());
  for (std::size_t k = 1; k < e.size(); ++k) a.push_back(k % 2 == 1 ? e[k] : -e[k]);
  return a;
}

EigenComparison eigen_compare(const Multivector<double>& u) {
  const Signature& sig = u.signature();
  if (sig.n() > 2) throw std::invalid_argument("eigenvalue comparison is implemented for n <= 2");
  EigenComparison out;
  const double s0 = u.scalar_part();
  Multivector<double> g = u;
  g.add_scalar(-s0);
  const Multivector<double> g2 = g * g;
  require_scalar(g2, std::max(1.0, l1_norm(g) * l1_norm(g)), "square of the nonscalar part");
  out.radicand = g2.scalar_part();
  out.complex_pair = out.radicand < 0;
  const std::complex<double> root = std::sqrt(std::complex<double>(out.radicand, 0.0));
  out.lambda1 = s0 + root;
  out.lambda2 = s0 - root;
  Multivector<double> y1 = Multivector<double>::scalar(sig, s0);
  Multivector<double> y2 = y1;
  y1 += g;
  y2 -= g;
  out.ys = {y1, y2};

  const CharPoly<double> poly = fl_coefficients(u);
  out.c1 = poly[1];
  out.c2 = poly[2];
  const double scale = std::max(1.0, std::fabs(s0) + std::sqrt(std::fabs(out.radicand)));
  out.vieta_sum_ok = std::abs(out.lambda1 + out.lambda2 - out.c1) <= 1e-9 * scale;
  out.vieta_product_ok = std::abs(out.lambda1 * out.lambda2 + out.c2) <= 1e-9 * scale * scale;
  out.coincide = g.is_zero();
  return out;
}

template Multivector<Rational> evaluate_f(const FFunction&, std::span<const Multivector<Rational>>);
template Multivector<double> evaluate_f(const FFunction&, std::span<const Multivector<double>>);
template std::vector<Multivector<Rational>> f_on_all_tuples(const FFunction&, const Multivector<Rational>&);
template std::vector<Multivector<double>> f_on_all_tuples(const FFunction&, const Multivector<double>&);
template Multivector<Rational> vieta_sum(const FFunction&, const Multivector<Rational>&,
                                         std::span<const std::uint32_t>);
template Multivector<double> vieta_sum(const FFunction&, const Multivector<double>&, std::span<const std::uint32_t>);
template Rational vieta_coefficient(const FFunction&, const Multivector<Rational>&, int);
template double vieta_coefficient(const FFunction&, const Multivector<double>&, int);
template CharPoly<Rational> vieta_all(const FFunction&, const Multivector<Rational>&);
template CharPoly<double> vieta_all(const FFunction&, const Multivector<double>&);
template GelfandRetakhSet<Rational> gelfand_retakh(std::vector<Multivector<Rational>>);
template GelfandRetakhSet<double> gelfand_retakh(std::vector<Multivector<double>>);
template std::vector<Multivector<Rational>> gelfand_retakh_solutions(const Multivector<Rational>&);
template std::vector<Multivector<double>> gelfand_retakh_solutions(const Multivector<double>&);
template std::vector<Multivector<Rational>> noncommutative_vieta(std::span<const Multivector<Rational>>);
template std::vector<Multivector<double>> noncommutative_vieta(std::span<const Multivector<double>>);

}  // namespace cliffdet
