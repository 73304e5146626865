#include "cliffdet/methods.hpp"

#include "cliffdet/errors.hpp"
#include "cliffdet/matrix_oracle.hpp"
#include "cliffdet/vieta.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace cliffdet {

namespace {

constexpr std::array<Method, 7> kMethods = {Method::FaddeevLeVerrier, Method::ClosedTriangle, Method::ClosedBar,
                                            Method::VietaTriangle,    Method::VietaBar,       Method::Matrix,
                                            Method::Interp};

}  // namespace

std::string_view method_name(Method m) {
  switch (m) {
    case Method::FaddeevLeVerrier: return "fl";
    case Method::ClosedTriangle: return "closed-triangle";
    case Method::ClosedBar: return "closed-bar";
    case Method::VietaTriangle: return "vieta-triangle";
    case Method::VietaBar: return "vieta-bar";
    case Method::Matrix: return "matrix";
    case Method::Interp: return "interp";
  }
  return "?";
}

Method parse_method(std::string_view name) {
  for (Method m : kMethods)
    if (method_name(m) == name) return m;
  throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

std::span<const Method> all_methods() { return kMethods; }

const DetFormula& closed_bar_formula(int n) {
  for (Family f : {Family::Bar, Family::BarTilde, Family::BarTildeHat})
    for (const DetFormula* d : formulas_for(n))
      if (d->family == f) return det_formula(n, f);
  throw UnknownFormula("no bar-type formula for n = " + std::to_string(n));
}

const DetFormula& method_formula(Method m, int n) {
  switch (m) {
    case Method::ClosedTriangle:
    case Method::VietaTriangle: return det_formula(n, Family::Triangle);
    case Method::ClosedBar:
    case Method::VietaBar: return closed_bar_formula(n);
    default: throw std::invalid_argument(std::string(method_name(m)) + " does not use a closed formula");
  }
}

template <class F>
CharPoly<F> characteristic_polynomial(const Multivector<F>& u, Method m) {
  const int n = u.signature().n();
  switch (m) {
    case Method::FaddeevLeVerrier: return fl_coefficients(u);
    case Method::ClosedTriangle:
    case Method::ClosedBar: {
      const DetFormula& f = method_formula(m, n);
      return charpoly_interp(u, [&](const Multivector<F>& v) { return evaluate_det(f, v); });
    }
    case Method::VietaTriangle:
    case Method::VietaBar: return vieta_all(f_function(method_formula(m, n)), u);
    case Method::Matrix: return charpoly_matrix(u);
    case Method::Interp: return charpoly_interp(u, [](const Multivector<F>& v) { return det_matrix(v); });
  }
  throw std::logic_error("unhandled method");
}

template <class F>
F determinant(const Multivector<F>& u, Method m) {
  const int n = u.signature().n();
  switch (m) {
    case Method::FaddeevLeVerrier: return det_fl(u);
    case Method::ClosedTriangle:
    case Method::ClosedBar: return evaluate_det(method_formula(m, n), u);
    case Method::VietaTriangle:
    case Method::VietaBar: {
      const FFunction f = f_function(method_formula(m, n));
      return F(-vieta_coefficient(f, u, f.arity));
    }
    case Method::Matrix: return det_matrix(u);
    case Method::Interp: return characteristic_polynomial(u, m).determinant();
  }
  throw std::logic_error("unhandled method");
}

template <class F>
Multivector<F> adjugate_by(const Multivector<F>& u, Method m) {
  switch (m) {
    case Method::FaddeevLeVerrier: return adjugate(u);
    case Method::ClosedTriangle:
    case Method::ClosedBar: return evaluate_adjugate(method_formula(m, u.signature().n()), u);
    default:
      throw std::invalid_argument("adjugate is available for fl, closed-triangle and closed-bar, not " +
                                  std::string(method_name(m)));
  }
}

template <class F>
CrossCheck<F> cross_check(const Multivector<F>& u) {
  CrossCheck<F> out;
  const int N = u.signature().N();
  const double norm = std::max(1.0, l1_norm(u));
  for (Method m : kMethods) {
    MethodResult<F> r{m, {}, {}};
    try {
      const CharPoly<F> p = characteristic_polynomial(u, m);
      r.coefficients.assign(p.coefficients().begin(), p.coefficients().end());
    } catch (const std::exception& e) {
      r.error = e.what();
      if (out.consistent) out.detail = std::string(method_name(m)) + ": " + e.what();
      out.consistent = false;
    }
    out.results.push_back(std::move(r));
  }
  const MethodResult<F>& ref = out.results.front();
  if (ref.coefficients.empty()) return out;
  for (const MethodResult<F>& r : out.results) {
    if (r.coefficients.empty()) continue;
    double binom = 1;
    for (int k = 1; k <= N; ++k) {
      binom = binom * (N - k + 1) / k;
      const F& a = ref.coefficients[static_cast<std::size_t>(k - 1)];
      const F& b = r.coefficients[static_cast<std::size_t>(k - 1)];
      bool same;
      if constexpr (FieldTraits<F>::exact) same = a == b;
      else same = close_scaled(a, b, binom * std::pow(norm, k));
      if (!same) {
        if (out.consistent) {
          out.detail = std::string(method_name(r.method)) + " disagrees with fl at C_" + std::to_string(k) + ": " +
                       FieldTraits<F>::to_string(b) + " vs " + FieldTraits<F>::to_string(a);
        }
        out.consistent = false;
        break;
      }
    }
  }
  return out;
}

template <class F>
Multivector<F> random_multivector(const Signature& sig, std::mt19937_64& rng) {
  Multivector<F> u(sig);
  if constexpr (FieldTraits<F>::exact) {
    std::uniform_int_distribution<int> dist(-9, 9);
    for (std::size_t i = 0; i < u.size(); ++i) u[i] = F(dist(rng));
  } else {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (std::size_t i = 0; i < u.size(); ++i) u[i] = dist(rng);
  }
  return u;
}

template Rational determinant(const Multivector<Rational>&, Method);
template double determinant(const Multivector<double>&, Method);
template CharPoly<Rational> characteristic_polynomial(const Multivector<Rational>&, Method);
template CharPoly<double> characteristic_polynomial(const Multivector<double>&, Method);
template Multivector<Rational> adjugate_by(const Multivector<Rational>&, Method);
template Multivector<double> adjugate_by(const Multivector<double>&, Method);
template CrossCheck<Rational> cross_check(const Multivector<Rational>&);
template CrossCheck<double> cross_check(const Multivector<double>&);
template Multivector<Rational> random_multivector(const Signature&, std::mt19937_64&);
template Multivector<double> random_multivector(const Signature&, std::mt19937_64&);

}  // namespace cliffdet
