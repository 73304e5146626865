#include "cliffdet/matrix_oracle.hpp"

#include "cliffdet/errors.hpp"
#include "cliffdet/roots.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <mutex>
#include <optional>
#include <string>

namespace cliffdet {

MonomialMatrix MonomialMatrix::identity(int dim) {
  MonomialMatrix m;
  m.col.resize(static_cast<std::size_t>(dim));
  m.phase.assign(static_cast<std::size_t>(dim), 0);
  for (int i = 0; i < dim; ++i) m.col[static_cast<std::size_t>(i)] = i;
  return m;
}

MonomialMatrix operator*(const MonomialMatrix& a, const MonomialMatrix& b) {
  MonomialMatrix out;
  out.col.resize(a.col.size());
  out.phase.resize(a.col.size());
  for (std::size_t r = 0; r < a.col.size(); ++r) {
    const auto mid = static_cast<std::size_t>(a.col[r]);
    out.col[r] = b.col[mid];
    out.phase[r] = (a.phase[r] + b.phase[mid]) & 3;
  }
  return out;
}

namespace {

MonomialMatrix scaled(MonomialMatrix m, int phase) {
  for (int& p : m.phase) p = (p + phase) & 3;
  return m;
}

MonomialMatrix kron(const MonomialMatrix& a, const MonomialMatrix& b) {
  const int db = b.dim();
  MonomialMatrix out;
  for (int ra = 0; ra < a.dim(); ++ra)
    for (int rb = 0; rb < db; ++rb) {
      out.col.push_back(a.col[static_cast<std::size_t>(ra)] * db + b.col[static_cast<std::size_t>(rb)]);
      out.phase.push_back((a.phase[static_cast<std::size_t>(ra)] + b.phase[static_cast<std::size_t>(rb)]) & 3);
    }
  return out;
}

MonomialMatrix block_diag(const MonomialMatrix& a, const MonomialMatrix& b) {
  MonomialMatrix out = a;
  for (std::size_t r = 0; r < b.col.size(); ++r) {
    out.col.push_back(b.col[r] + a.dim());
    out.phase.push_back(b.phase[r]);
  }
  return out;
}

const MonomialMatrix kSigma1{{1, 0}, {0, 0}};
const MonomialMatrix kSigma2{{1, 0}, {3, 1}};  // [[0, -i], [i, 0]]
const MonomialMatrix kSigma3{{0, 1}, {0, 2}};

// 2k Hermitian generators of size 2^k that square to I and anticommute.
std::vector<MonomialMatrix> even_gammas(int k) {
  std::vector<MonomialMatrix> out;
  for (int i = 0; i < k; ++i) {
    for (const MonomialMatrix* pauli : {&kSigma1, &kSigma2}) {
      MonomialMatrix g = MonomialMatrix::identity(1);
      for (int j = 0; j < k; ++j) {
        if (j < i) g = kron(g, kSigma3);
        else if (j == i) g = kron(g, *pauli);
        else g = kron(g, MonomialMatrix::identity(2));
      }
      out.push_back(std::move(g));
    }
  }
  return out;
}

bool is_scalar_multiple_of_identity(const MonomialMatrix& m, int phase) {
  for (int r = 0; r < m.dim(); ++r)
    if (m.col[static_cast<std::size_t>(r)] != r || m.phase[static_cast<std::size_t>(r)] != phase) return false;
  return true;
}

// Tr(A^dagger B) as a Gaussian integer.
std::array<long, 2> hermitian_trace(const MonomialMatrix& a, const MonomialMatrix& b) {
  std::array<long, 2> t{0, 0};
  for (std::size_t r = 0; r < a.col.size(); ++r) {
    if (a.col[r] != b.col[r]) continue;
    switch ((b.phase[r] - a.phase[r]) & 3) {
      case 0: ++t[0]; break;
      case 1: ++t[1]; break;
      case 2: --t[0]; break;
      case 3: --t[1]; break;
    }
  }
  return t;
}

void verify(const Representation& rep) {
  const int n = rep.sig.n();
  auto fail = [&](const std::string& what) {
    throw ConsistencyError("representation of G(" + rep.sig.to_string() + "): " + what);
  };
  for (int a = 0; a < n; ++a) {
    const MonomialMatrix& ga = rep.generators[static_cast<std::size_t>(a)];
    if (ga.dim() != rep.dim) fail("generator size");
    if (!is_scalar_multiple_of_identity(ga * ga, rep.sig.metric(a) > 0 ? 0 : 2)) fail("generator square");
    for (int b = a + 1; b < n; ++b) {
      const MonomialMatrix& gb = rep.generators[static_cast<std::size_t>(b)];
      if (!(ga * gb == scaled(gb * ga, 2))) fail("generators do not anticommute");
    }
  }
  if (!is_scalar_multiple_of_identity(rep.blades.front(), 0)) fail("identity not mapped to I");
  for (std::size_t a = 0; a < rep.blades.size(); ++a)
    for (std::size_t b = a; b < rep.blades.size(); ++b) {
      const auto t = hermitian_trace(rep.blades[a], rep.blades[b]);
      const long want = a == b ? rep.dim : 0;
      if (t[0] != want || t[1] != 0) fail("blade images are not independent");
    }
}

}  // namespace

Representation build_representation(const Signature& sig) {
  const int n = sig.n();
  const int k = n / 2;
  Representation rep{sig, sig.N(), {}, {}};
  std::vector<MonomialMatrix> gammas = even_gammas(k);
  for (int a = 0; a < 2 * k; ++a)
    if (sig.metric(a) < 0) gammas[static_cast<std::size_t>(a)] = scaled(gammas[static_cast<std::size_t>(a)], 1);
  if (n % 2 == 0) {
    rep.generators = std::move(gammas);
  } else {
    MonomialMatrix omega = MonomialMatrix::identity(1 << k);
    for (const MonomialMatrix& g : gammas) omega = omega * g;
    const MonomialMatrix sq = omega * omega;
    const int s = sq.phase.front() == 0 ? 1 : -1;
    if (!is_scalar_multiple_of_identity(sq, s > 0 ? 0 : 2)) throw ConsistencyError("volume element square");
    const int c = s == sig.metric(n - 1) ? 0 : 1;
    for (const MonomialMatrix& g : gammas) rep.generators.push_back(block_diag(g, g));
    rep.generators.push_back(block_diag(scaled(omega, c), scaled(omega, c + 2)));
  }
  rep.blades.reserve(sig.blade_count());
  for (unsigned bits = 0; bits < sig.blade_count(); ++bits) {
    MonomialMatrix m = MonomialMatrix::identity(rep.dim);
    for (int a = 0; a < n; ++a)
      if (bits & (1u << a)) m = m * rep.generators[static_cast<std::size_t>(a)];
    rep.blades.push_back(std::move(m));
  }
  verify(rep);
  return rep;
}

const Representation& representation(const Signature& sig) {
  static std::array<std::optional<Representation>, 49> cache;
  static std::array<std::once_flag, 49> once;
  const auto slot = static_cast<std::size_t>(sig.ordinal());
  std::call_once(once[slot], [&] { cache[slot] = build_representation(sig); });
  return *cache[slot];
}

template <class F>
ComplexMatrix<F> represent(const Multivector<F>& u) {
  const Representation& rep = representation(u.signature());
  ComplexMatrix<F> m(rep.dim);
  for (std::size_t b = 0; b < u.size(); ++b) {
    const F& x = u[b];
    if (FieldTraits<F>::is_zero(x)) continue;
    const MonomialMatrix& blade = rep.blades[b];
    for (int r = 0; r < rep.dim; ++r) {
      Complex<F>& cell = m(r, blade.col[static_cast<std::size_t>(r)]);
      switch (blade.phase[static_cast<std::size_t>(r)]) {
        case 0: cell.re += x; break;
        case 1: cell.im += x; break;
        case 2: cell.re -= x; break;
        case 3: cell.im -= x; break;
      }
    }
  }
  return m;
}

template <class F>
Complex<F> matrix_determinant(ComplexMatrix<F> m) {
  const int d = m.dim();
  Complex<F> det{F(1), F(0)};
  for (int k = 0; k < d; ++k) {
    int pivot = -1;
    if constexpr (FieldTraits<F>::exact) {
      for (int r = k; r < d; ++r)
        if (!m(r, k).is_zero()) {
          pivot = r;
          break;
        }
    } else {
      double best = 0;
      for (int r = k; r < d; ++r)
        if (m(r, k).magnitude() > best) {
          best = m(r, k).magnitude();
          pivot = r;
        }
    }
    if (pivot < 0) return Complex<F>{};
    if (pivot != k) {
      for (int c = 0; c < d; ++c) std::swap(m(k, c), m(pivot, c));
      det = Complex<F>{} - det;
    }
    det = det * m(k, k);
    for (int r = k + 1; r < d; ++r) {
      if (m(r, k).is_zero()) continue;
      const Complex<F> factor = m(r, k) / m(k, k);
      for (int c = k; c < d; ++c) m(r, c) -= factor * m(k, c);
    }
  }
  return det;
}

namespace {

// Product of row 2-norms, bounding |det| from above.
template <class F>
double hadamard_bound(const ComplexMatrix<F>& m) {
  double bound = 1;
  for (int r = 0; r < m.dim(); ++r) {
    double s = 0;
    for (int c = 0; c < m.dim(); ++c) s += std::pow(m(r, c).magnitude(), 2);
    bound *= std::sqrt(s);
  }
  return bound;
}

template <class F>
F require_real(const Complex<F>& z, double scale, const char* what) {
  if constexpr (FieldTraits<F>::exact) {
    (void)scale;
    if (z.im != 0) throw ConsistencyError(std::string(what) + " has a nonzero imaginary part");
  } else {
    if (std::fabs(z.im) > 1e-9 * std::max(1.0, scale)) {
      throw ConsistencyError(std::string(what) + " has imaginary part " + FieldTraits<F>::to_string(z.im));
    }
  }
  return z.re;
}

}  // namespace

template <class F>
F det_matrix(const Multivector<F>& u) {
  ComplexMatrix<F> m = represent(u);
  const double scale = FieldTraits<F>::exact ? 0.0 : hadamard_bound(m);
  return require_real(matrix_determinant(std::move(m)), scale, "matrix determinant");
}

template <class F>
CharPoly<F> charpoly_matrix(const Multivector<F>& u) {
  const ComplexMatrix<F> a = represent(u);
  const int d = a.dim();
  const double norm = FieldTraits<F>::exact ? 0.0 : std::max(1.0, l1_norm(u));
  std::vector<F> coeffs;
  ComplexMatrix<F> mk = a;
  for (int k = 1; k <= d; ++k) {
    Complex<F> t = mk.trace();
    const Complex<F> ck{F(t.re / F(k)), F(t.im / F(k))};
    const F c = require_real(ck, std::pow(norm, k) * d, "matrix characteristic coefficient");
    coeffs.push_back(c);
    if (k == d) break;
    for (int i = 0; i < d; ++i) mk(i, i).re -= c;
    mk = a * mk;
  }
  return CharPoly<F>(u.signature(), std::move(coeffs));
}

std::vector<std::complex<double>> eigenvalues(const Multivector<double>& u) {
  // Doubles convert to rationals exactly, so the characteristic polynomial of
  // the given input, multiplicities included, is known without rounding.
  Multivector<Rational> exact(u.signature());
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!std::isfinite(u[i])) throw std::invalid_argument("eigenvalues need finite coefficients");
    exact[i] = Rational(u[i]);
  }
  const CharPoly<Rational> poly = charpoly_matrix(exact);
  const int d = poly.degree();
  // det(lambda I - A) = lambda^d - C_1 lambda^{d-1} - ... - C_d.
  std::vector<Rational> a(static_cast<std::size_t>(d));
  for (int k = 1; k <= d; ++k) a[static_cast<std::size_t>(d - k)] = -poly[k];
  return polynomial_roots(std::span<const Rational>(a));
}

template ComplexMatrix<Rational> represent(const Multivector<Rational>&);
template ComplexMatrix<double> represent(const Multivector<double>&);
template Complex<Rational> matrix_determinant(ComplexMatrix<Rational>);
template Complex<double> matrix_determinant(ComplexMatrix<double>);
template Rational det_matrix(const Multivector<Rational>&);
template double det_matrix(const Multivector<double>&);
template CharPoly<Rational> charpoly_matrix(const Multivector<Rational>&);
template CharPoly<double> charpoly_matrix(const Multivector<double>&);

}  // namespace cliffdet
