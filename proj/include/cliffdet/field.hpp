#pragma once

#include "cliffdet/rational.hpp"

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstdio>
#include <string>

namespace cliffdet {

template <class F>
struct FieldTraits;

// Exact backend: equality is literal.
template <>
struct FieldTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr const char* name = "rational";

  static Rational from_int(long v) { return Rational(v); }
  static Rational from_rational(const Rational& r) { return r; }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static bool equal(const Rational& a, const Rational& b) { return a == b; }
  static double to_double(const Rational& x) { return x.get_d(); }
  static double magnitude(const Rational& x) { return std::fabs(x.get_d()); }
  static std::string to_string(const Rational& x) { return x.get_str(); }
};

// Float backend: relative 1e-9 / absolute 1e-12 equality.
template <>
struct FieldTraits<double> {
  static constexpr bool exact = false;
  static constexpr const char* name = "float";
  static constexpr double rel_tol = 1e-9;
  static constexpr double abs_tol = 1e-12;

  static double from_int(long v) { return static_cast<double>(v); }
  static double from_rational(const Rational& r) { return r.get_num().get_d() / r.get_den().get_d(); }
  static bool is_zero(double x) { return std::fabs(x) <= abs_tol; }
  static bool equal(double a, double b) {
    const double diff = std::fabs(a - b);
    return diff <= abs_tol || diff <= rel_tol * std::max(std::fabs(a), std::fabs(b));
  }
  static double to_double(double x) { return x; }
  static double magnitude(double x) { return std::fabs(x); }
  static std::string to_string(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
  }
};

template <class F>
concept CoefficientField = requires(const F& a, const F& b) {
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { a / b } -> std::convertible_to<F>;
  { FieldTraits<F>::exact } -> std::convertible_to<bool>;
  { FieldTraits<F>::is_zero(a) } -> std::same_as<bool>;
};

// Float comparison with an explicit magnitude scale; used where a value is the
// result of heavy cancellation (determinants, nonscalar residue of products).
inline bool close_scaled(double a, double b, double scale, double rel = 1e-9) {
  const double m = std::max({std::fabs(a), std::fabs(b), scale});
  return std::fabs(a - b) <= rel * m || std::fabs(a - b) <= FieldTraits<double>::abs_tol;
}

}  // namespace cliffdet
