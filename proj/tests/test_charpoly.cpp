#include "support/generators.hpp"

#include "cliffdet/charpoly.hpp"
#include "cliffdet/conjugation.hpp"
#include "cliffdet/expr.hpp"
#include "cliffdet/matrix_oracle.hpp"

#include <doctest.h>

using namespace cliffdet;
using test_support::random_rational;

TEST_CASE("worked example in G(2,0)") {
  const Signature sig(2, 0);
  const auto u = parse_multivector<Rational>(sig, "5 + 1/2*e2 + 1/2*e12");
  const auto poly = fl_coefficients(u);
  CHECK(poly[1] == 10);
  CHECK(poly[2] == -25);
  CHECK(det_fl(u) == 25);
  CHECK(poly.trace() == trace(u));
}

TEST_CASE("n = 1 and n = 2 against hand-expanded determinants") {
  for (const Signature& sig : all_signatures()) {
    if (sig.n() > 2) continue;
    for (int t = 0; t < 20; ++t) {
      const auto u = test_support::random_fractional(sig);
      Rational expected;
      if (sig.n() == 1) {
        expected = u[0] * u[0] - sig.metric(0) * u[1] * u[1];
      } else {
        const int h1 = sig.metric(0), h2 = sig.metric(1);
        expected = u[0] * u[0] - h1 * u[1] * u[1] - h2 * u[2] * u[2] + h1 * h2 * u[3] * u[3];
      }
      REQUIRE(det_fl(u) == expected);
      REQUIRE(fl_coefficients(u)[1] == 2 * u[0]);
    }
  }
}

TEST_CASE("charpoly example from the CLI: 1 + 2 e1 in G(1,0)") {
  const auto poly = fl_coefficients(parse_multivector<Rational>(Signature(1, 0), "1 + 2*e1"));
  CHECK(poly[1] == 2);
  CHECK(poly[2] == 3);
  CHECK(poly.determinant() == -3);
}

TEST_CASE("FL coefficients equal the matrix-representation coefficients") {
  for (const Signature& sig : all_signatures()) {
    for (int t = 0; t < 5; ++t) {
      const auto u = random_rational(sig, 9, t == 0 ? 0.6 : 0.0);
      REQUIRE(fl_coefficients(u) == charpoly_matrix(u));
    }
  }
}

TEST_CASE("identity and scalar multiples") {
  for (const Signature& sig : all_signatures()) {
    const auto e = Multivector<Rational>::identity(sig);
    CHECK(det_fl(e) == 1);
    const Rational lambda(3, 2);
    Rational pow = 1;
    for (int i = 0; i < sig.N(); ++i) pow *= lambda;
    CHECK(det_fl(Multivector<Rational>::scalar(sig, lambda)) == pow);
    CHECK(fl_coefficients(e)[1] == sig.N());
  }
}

TEST_CASE("adjugate and inverse") {
  for (const Signature& sig : all_signatures()) {
    const auto u = random_rational(sig);
    const auto adj = adjugate(u);
    const auto det_e = Multivector<Rational>::scalar(sig, det_fl(u));
    REQUIRE(u * adj == det_e);
    REQUIRE(adj * u == det_e);
    if (det_fl(u) != 0) {
      const auto inv = inverse(u);
      REQUIRE(u * inv == Multivector<Rational>::identity(sig));
      REQUIRE(inv * u == Multivector<Rational>::identity(sig));
    }
  }
}

TEST_CASE("singular multivectors are reported") {
  const auto u = parse_multivector<Rational>(Signature(1, 0), "1 + e1");
  CHECK(det_fl(u) == 0);
  CHECK_THROWS_AS(inverse(u), NotInvertible);
  try {
    inverse(u);
  } catch (const NotInvertible& e) {
    CHECK(e.determinant() == "0");
  }
  const auto ud = parse_multivector<double>(Signature(3, 0), "1 + e1");
  CHECK_THROWS_AS(inverse(ud), NotInvertible);
}

TEST_CASE("Cayley-Hamilton on U and its conjugates") {
  for (const Signature& sig : all_signatures()) {
    const auto u = random_rational(sig);
    const auto poly = fl_coefficients(u);
    REQUIRE(poly.evaluate(u).is_zero());
    REQUIRE(poly.evaluate(hat(u)).is_zero());
    REQUIRE(poly.evaluate(tilde(u)).is_zero());
    REQUIRE(poly.evaluate(hat_tilde(u)).is_zero());
  }
}

TEST_CASE("float FL tracks the exact recursion") {
  for (const Signature& sig : all_signatures()) {
    const auto u = test_support::random_fractional(sig);
    const auto exact = fl_coefficients(u);
    const auto approx = fl_coefficients(to_double(u));
    double scale = 1;
    for (int k = 1; k <= sig.N(); ++k) {
      scale *= std::max(1.0, l1_norm(u));
      REQUIRE(close_scaled(approx[k], exact[k].get_d(), scale * 64));
    }
  }
}

TEST_CASE("Newton interpolation recovers monomial coefficients") {
  // p(x) = 2 - 3x + x^3
  const std::vector<Rational> xs = {0, 1, 2, 3};
  std::vector<Rational> ys;
  for (const auto& x : xs) ys.push_back(2 - 3 * x + x * x * x);
  const auto p = interpolate_monomial<Rational>(xs, ys);
  CHECK(p == std::vector<Rational>{2, -3, 0, 1});
}

TEST_CASE("interpolated charpoly equals FL") {
  for (const Signature& sig : all_signatures()) {
    const auto u = random_rational(sig);
    REQUIRE(charpoly_interp(u, [](const Multivector<Rational>& v) { return det_fl(v); }) == fl_coefficients(u));
    const auto ud = test_support::random_float(sig);
    const auto fit = charpoly_interp(ud, [](const Multivector<double>& v) { return det_fl(v); });
    const auto fl = fl_coefficients(ud);
    double scale = 1;
    for (int k = 1; k <= sig.N(); ++k) {
      scale *= std::max(1.0, l1_norm(ud)) * (sig.N() - k + 1) / k;
      REQUIRE(close_scaled(fit[k], fl[k], scale));
    }
  }
}

TEST_CASE("interpolation detects a non-monic fit") {
  const Signature sig(1, 0);
  const auto u = parse_multivector<Rational>(sig, "1 + e1");
  auto doubled = [](const Multivector<Rational>& v) { return Rational(2 * det_fl(v)); };
  CHECK_THROWS_AS(charpoly_interp(u, doubled), ConsistencyError);
  auto doubled_f = [](const Multivector<double>& v) { return 2 * det_fl(v); };
  CHECK_THROWS_AS(charpoly_interp(to_double(u), doubled_f), IllConditioned);
}

TEST_CASE("CharPoly validates its size and signature") {
  CHECK_THROWS_AS(CharPoly<Rational>(Signature(2, 0), {1, 2, 3}), std::invalid_argument);
  const CharPoly<Rational> p(Signature(1, 0), {2, 3});
  CHECK_THROWS_AS(p.evaluate(Multivector<Rational>(Signature(2, 0))), SignatureMismatch);
  CHECK(p.evaluate(Rational(3)) == 9 - 6 - 3);
}
