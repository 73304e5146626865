#include "support/generators.hpp"

#include "cliffdet/conjugation.hpp"
#include "cliffdet/expr.hpp"
#include "cliffdet/multivector.hpp"
#include "cliffdet/product_table.hpp"

#include <doctest.h>

using namespace cliffdet;
using test_support::random_rational;

TEST_CASE("signature dimensions") {
  const int Ns[] = {2, 2, 4, 4, 8, 8};
  const int ms[] = {1, 2, 2, 3, 3, 3};
  for (int n = 1; n <= 6; ++n) {
    const Signature s(n, 0);
    CHECK(s.N() == Ns[n - 1]);
    CHECK(s.m() == ms[n - 1]);
    CHECK(s.blade_count() == (std::size_t{1} << n));
  }
  CHECK(all_signatures().size() == 27);  // n = 1..6 gives 2 + 3 + ... + 7
  CHECK_THROWS_AS(Signature(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(Signature(4, 3), std::invalid_argument);
  CHECK_THROWS_AS(Signature(-1, 2), std::invalid_argument);
  CHECK(Signature(1, 2).metric(0) == 1);
  CHECK(Signature(1, 2).metric(2) == -1);
}

TEST_CASE("blade product signs match word reduction on every signature") {
  for (const Signature& sig : all_signatures()) {
    for (unsigned a = 0; a < sig.blade_count(); ++a)
      for (unsigned b = 0; b < sig.blade_count(); ++b) {
        const auto [s, c] = test_support::word_product(sig, a, b);
        REQUIRE(c == (a ^ b));
        REQUIRE(blade_product_sign(sig, BladeIndex{a}, BladeIndex{b}) == s);
        REQUIRE(product_table(sig).sign(a, b) == s);
      }
  }
}

TEST_CASE("basic products in G(2,0)") {
  const Signature sig(2, 0);
  const auto e1 = Multivector<Rational>::basis(sig, BladeIndex{1});
  const auto e2 = Multivector<Rational>::basis(sig, BladeIndex{2});
  const auto e12 = Multivector<Rational>::basis(sig, BladeIndex{3});
  CHECK(e12 * e12 == -Multivector<Rational>::identity(sig));
  CHECK(e1 * e2 == e12);
  CHECK(e2 * e1 == -e12);
  CHECK(e1 * e1 == Multivector<Rational>::identity(sig));
  CHECK(blade_name(BladeIndex{0}) == "1");
  CHECK(blade_name(BladeIndex{0b101}) == "e13");
}

TEST_CASE("negative generators square to -e") {
  const Signature sig(0, 1);
  const auto e1 = Multivector<Rational>::basis(sig, BladeIndex{1});
  CHECK(e1 * e1 == -Multivector<Rational>::identity(sig));
}

TEST_CASE("product agrees with the word-reduction oracle") {
  for (const Signature& sig : all_signatures()) {
    for (int t = 0; t < 3; ++t) {
      const auto u = random_rational(sig, 9, 0.3);
      const auto v = random_rational(sig, 9, 0.3);
      REQUIRE(u * v == test_support::oracle_product(u, v));
      const auto ud = to_double(u), vd = to_double(v);
      REQUIRE(ud * vd == test_support::oracle_product(ud, vd));
    }
  }
}

TEST_CASE("geometric product is associative and distributive") {
  for (const Signature& sig : all_signatures()) {
    const auto u = random_rational(sig), v = random_rational(sig), w = random_rational(sig);
    REQUIRE((u * v) * w == u * (v * w));
    REQUIRE(u * (v + w) == u * v + u * w);
    REQUIRE((u + v) * w == u * w + v * w);
  }
}

TEST_CASE("multivector construction and access") {
  const Signature sig(2, 1);
  CHECK_THROWS_AS(Multivector<Rational>(sig, std::vector<Rational>(3)), std::invalid_argument);
  CHECK_THROWS_AS(Multivector<Rational>::basis(sig, BladeIndex{8}), std::out_of_range);
  const auto u = random_rational(Signature(1, 1));
  CHECK_THROWS_AS(u + Multivector<Rational>(Signature(2, 0)), SignatureMismatch);
  auto s = Multivector<Rational>::scalar(sig, 3);
  CHECK(s.is_scalar());
  CHECK_FALSE(s.is_zero());
  CHECK(trace(s) == 12);  // N <U>_0
  CHECK(grade_projection(parse_multivector<Rational>(sig, "1 + 2*e1 + 3*e12 + 4*e123"), 2) ==
        parse_multivector<Rational>(sig, "3*e12"));
  CHECK_THROWS_AS(grade_projection(s, 4), std::out_of_range);
}

TEST_CASE("conjugations are linear involutions fixing e") {
  const Conjugation all[] = {Conjugation::hat(), Conjugation::tilde(), Conjugation::bar(), Conjugation::delta(1),
                             Conjugation::delta(2), Conjugation::triangle()};
  for (const Signature& sig : all_signatures()) {
    const auto u = random_rational(sig), v = random_rational(sig);
    const Rational a = test_support::random_nonzero_rational();
    for (const Conjugation& c : all) {
      if (c.kind() == Conjugation::Kind::Delta && c.order() > sig.m()) continue;
      REQUIRE(conjugate(conjugate(u, c), c) == u);
      REQUIRE(conjugate(u + a * v, c) == conjugate(u, c) + a * conjugate(v, c));
      REQUIRE(conjugate(Multivector<Rational>::identity(sig), c) == Multivector<Rational>::identity(sig));
    }
  }
}

TEST_CASE("Delta(1) and Delta(2) coincide with hat and tilde") {
  for (int k = 0; k <= 6; ++k) {
    CHECK(Conjugation::delta(1).sign(k) == Conjugation::hat().sign(k));
    CHECK(Conjugation::delta(2).sign(k) == Conjugation::tilde().sign(k));
  }
  // Delta(3) flips grades 4..7.
  const int expected[] = {1, 1, 1, 1, -1, -1, -1};
  for (int k = 0; k <= 6; ++k) CHECK(Conjugation::triangle().sign(k) == expected[k]);
}

TEST_CASE("Delta(j) sign equals (-1)^binomial(k, 2^(j-1))") {
  auto binom = [](int n, int r) {
    long b = 1;
    for (int i = 0; i < r; ++i) b = b * (n - i) / (i + 1);
    return r > n ? 0L : b;
  };
  for (int j = 1; j <= 3; ++j)
    for (int k = 0; k <= 6; ++k) CHECK(Conjugation::delta(j).sign(k) == ((binom(k, 1 << (j - 1)) % 2) ? -1 : 1));
}

TEST_CASE("Delta(3) is undefined below n = 4") {
  CHECK_THROWS_AS(Conjugation::triangle().check(Signature(3, 0)), std::invalid_argument);
  CHECK_NOTHROW(Conjugation::triangle().check(Signature(2, 2)));
  CHECK_THROWS_AS(Conjugation::delta(0), std::invalid_argument);
}

TEST_CASE("hat is multiplicative, tilde reverses products") {
  for (const Signature& sig : all_signatures()) {
    const auto u = random_rational(sig), v = random_rational(sig);
    REQUIRE(hat(u * v) == hat(u) * hat(v));
    REQUIRE(tilde(u * v) == tilde(v) * tilde(u));
    REQUIRE(hat_tilde(u) == tilde(hat(u)));
  }
}

TEST_CASE("bar is U -> 2<U>_0 - U") {
  for (const Signature& sig : all_signatures()) {
    const auto u = random_rational(sig);
    auto expected = -u;
    expected.add_scalar(Rational(2) * u.scalar_part());
    REQUIRE(bar(u) == expected);
  }
}

TEST_CASE("Delta(3) is neither multiplicative nor anti-multiplicative") {
  const Signature sig(4, 0);
  const auto e12 = parse_multivector<Rational>(sig, "e12");
  const auto e34 = parse_multivector<Rational>(sig, "e34");
  CHECK_FALSE(triangle(e12 * e34) == triangle(e12) * triangle(e34));
  CHECK_FALSE(triangle(e12 * e34) == triangle(e34) * triangle(e12));
}

TEST_CASE("scalar part from the Delta(j) average") {
  for (const Signature& sig : all_signatures()) {
    const auto u = random_rational(sig);
    REQUIRE(scalar_projection_by_deltas(u) == Multivector<Rational>::scalar(sig, u.scalar_part()));
  }
}

TEST_CASE("low-dimensional commutation facts") {
  // n = 2: U hat(tilde(U)) is a scalar; n = 3: it lies in the center.
  for (const Signature& sig : all_signatures()) {
    const auto u = random_rational(sig);
    if (sig.n() == 2) REQUIRE((u * hat_tilde(u)).is_scalar());
    if (sig.n() == 3) {
      const auto c = u * hat_tilde(u);
      for (unsigned b = 1; b < sig.blade_count(); ++b) {
        const auto eb = Multivector<Rational>::basis(sig, BladeIndex{b});
        REQUIRE(c * eb == eb * c);
      }
    }
  }
}

TEST_CASE("l1 norm and float equality") {
  const Signature sig(2, 0);
  CHECK(l1_norm(parse_multivector<Rational>(sig, "1 - 2*e1 + 1/2*e12")) == doctest::Approx(3.5));
  CHECK(FieldTraits<double>::equal(1.0, 1.0 + 1e-12));
  CHECK_FALSE(FieldTraits<double>::equal(1.0, 1.0 + 1e-6));
  CHECK(close_scaled(1e-3, 1e-3 + 1e-8, 1e4));
  CHECK_FALSE(close_scaled(1.0, 1.1, 1.0));
}
