#include "cliffdet/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace cliffdet {

namespace {

using cd = std::complex<double>;

// Eigenvalue of [[a, b], [c, d]] closest to d.
cd wilkinson_shift(cd a, cd b, cd c, cd d) {
  const cd half_tr = 0.5 * (a + d);
  const cd det = a * d - b * c;
  const cd disc = std::sqrt(half_tr * half_tr - det);
  const cd l1 = half_tr + disc;
  const cd l2 = half_tr - disc;
  return std::abs(l1 - d) < std::abs(l2 - d) ? l1 : l2;
}

}  // namespace

std::vector<cd> hessenberg_eigenvalues(std::vector<cd> h, int dim) {
  auto at = [&](int r, int c) -> cd& { return h[static_cast<std::size_t>(r) * dim + c]; };
  const double eps = std::numeric_limits<double>::epsilon();
  std::vector<cd> eig(static_cast<std::size_t>(dim));
  int hi = dim - 1;
  int iter = 0;
  while (hi >= 0) {
    if (hi == 0) {
      eig[0] = at(0, 0);
      break;
    }
    int l = hi;
    while (l > 0) {
      const double local = std::abs(at(l - 1, l - 1)) + std::abs(at(l, l));
      if (std::abs(at(l, l - 1)) <= eps * (local > 0 ? local : 1.0)) break;
      --l;
    }
    if (l == hi) {
      eig[static_cast<std::size_t>(hi)] = at(hi, hi);
      --hi;
      iter = 0;
      continue;
    }
    if (++iter > 300) throw std::runtime_error("shifted QR iteration did not converge");

    cd mu = wilkinson_shift(at(hi - 1, hi - 1), at(hi - 1, hi), at(hi, hi - 1), at(hi, hi));
    if (iter % 11 == 0) mu = at(hi, hi) + std::abs(at(hi, hi - 1)) * cd(0.75, 0.4375);  // exceptional shift

    for (int i = l; i <= hi; ++i) at(i, i) -= mu;
    std::vector<cd> cs, ss;
    for (int k = l; k < hi; ++k) {
      const cd a = at(k, k);
      const cd b = at(k + 1, k);
      const double r = std::hypot(std::abs(a), std::abs(b));
      const cd c = r > 0 ? a / r : cd(1);
      const cd s = r > 0 ? b / r : cd(0);
      cs.push_back(c);
      ss.push_back(s);
      for (int j = k; j <= hi; ++j) {
        const cd x = at(k, j);
        const cd y = at(k + 1, j);
        at(k, j) = std::conj(c) * x + std::conj(s) * y;
        at(k + 1, j) = -s * x + c * y;
      }
    }
    for (int k = l; k < hi; ++k) {
      const cd c = cs[static_cast<std::size_t>(k - l)];
      const cd s = ss[static_cast<std::size_t>(k - l)];
      for (int i = l; i <= std::min(k + 2, hi); ++i) {
        const cd x = at(i, k);
        const cd y = at(i, k + 1);
        at(i, k) = x * c + y * s;
        at(i, k + 1) = -x * std::conj(s) + y * std::conj(c);
      }
    }
    for (int i = l; i <= hi; ++i) at(i, i) += mu;
  }
  return eig;
}

std::vector<cd> polynomial_roots(std::span<const cd> a) {
  const int d = static_cast<int>(a.size());
  if (d == 0) return {};
  // Companion matrix: ones on the subdiagonal, -a in the last column.
  std::vector<cd> h(static_cast<std::size_t>(d) * d);
  for (int i = 1; i < d; ++i) h[static_cast<std::size_t>(i) * d + i - 1] = 1;
  for (int i = 0; i < d; ++i) h[static_cast<std::size_t>(i) * d + d - 1] = -a[static_cast<std::size_t>(i)];
  std::vector<cd> roots = hessenberg_eigenvalues(std::move(h), d);

  auto eval = [&](cd z, cd* deriv) {
    cd p = 1, dp = 0;
    for (int i = d - 1; i >= 0; --i) {
      dp = dp * z + p;
      p = p * z + a[static_cast<std::size_t>(i)];
    }
    if (deriv) *deriv = dp;
    return p;
  };

  std::vector<cd> out;
  out.reserve(roots.size());
  for (cd z : roots) {
    for (int step = 0; step < 8; ++step) {
      cd dp;
      const cd p = eval(z, &dp);
      if (std::abs(p) == 0 || std::abs(dp) == 0) break;
      const cd next = z - p / dp;
      if (std::abs(eval(next, nullptr)) >= std::abs(p)) break;
      z = next;
    }
    out.push_back(z);
  }
  std::sort(out.begin(), out.end(), [](cd x, cd y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  return out;
}

namespace {

// Dense polynomials over Q, lowest power first, without trailing zeros.
using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(Rational(p[i] * static_cast<long>(i)));
  trim(d);
  return d;
}

Poly subtract(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// a = q b + r with deg r < deg b; b must be nonzero.
std::pair<Poly, Poly> divide(Poly a, const Poly& b) {
  trim(a);
  if (a.size() < b.size()) return {Poly{}, a};
  Poly q(a.size() - b.size() + 1, Rational(0));
  for (std::size_t i = q.size(); i-- > 0;) {
    const Rational c = a[i + b.size() - 1] / b.back();
    q[i] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= c * b[j];
  }
  a.resize(b.size() - 1);
  trim(a);
  trim(q);
  return {q, a};
}

Poly monic(Poly p) {
  const Rational lead = p.back();
  for (Rational& c : p) c /= lead;
  return p;
}

Poly gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = divide(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

Poly exact_quotient(const Poly& a, const Poly& b) {
  auto [q, r] = divide(a, b);
  if (!r.empty()) throw std::logic_error("inexact polynomial division");
  return q;
}

}  // namespace

std::vector<cd> polynomial_roots(std::span<const Rational> a) {
  Poly f(a.begin(), a.end());
  f.push_back(Rational(1));
  if (f.size() == 1) return {};

  // Yun: f = prod_i g_i^i with square-free, pairwise coprime g_i.
  std::vector<std::pair<Poly, int>> factors;
  const Poly fp = derivative(f);
  const Poly a0 = gcd(f, fp);
  Poly b = exact_quotient(f, a0);
  Poly d = subtract(exact_quotient(fp, a0), derivative(b));
  for (int i = 1; b.size() > 1; ++i) {
    const Poly g = gcd(b, d);
    if (g.size() > 1) factors.emplace_back(g, i);
    b = exact_quotient(b, g);
    d = subtract(exact_quotient(d, g), derivative(b));
  }

  std::vector<cd> out;
  for (const auto& [g, mult] : factors) {
    std::vector<cd> coeffs;
    for (std::size_t i = 0; i + 1 < g.size(); ++i)
      coeffs.emplace_back(g[i].get_num().get_d() / g[i].get_den().get_d());
    for (cd z : polynomial_roots(std::span<const cd>(coeffs))) out.insert(out.end(), static_cast<std::size_t>(mult), z);
  }
  std::sort(out.begin(), out.end(), [](cd x, cd y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  return out;
}

}  // namespace cliffdet
