#include "support/generators.hpp"

#include "cliffdet/charpoly.hpp"
#include "cliffdet/errors.hpp"
#include "cliffdet/expr.hpp"
#include "cliffdet/formula.hpp"
#include "cliffdet/formula_json.hpp"

#include <doctest.h>

#include <functional>
#include <map>
#include <set>

using namespace cliffdet;
using test_support::random_rational;

namespace {

void collect_conjugations(const Word& w, std::set<std::string>& out) {
  if (w.op == Word::Op::Conjugate) out.insert(w.conj.name());
  for (const Word& c : w.children) collect_conjugations(c, out);
}

std::set<std::string> allowed(Family f) {
  switch (f) {
    case Family::Triangle: return {"hat", "tilde", "delta3"};
    case Family::Bar: return {"bar"};
    case Family::BarTilde: return {"bar", "tilde"};
    case Family::BarTildeHat: return {"bar", "tilde", "hat"};
  }
  return {};
}

}  // namespace

TEST_CASE("every cataloged formula equals the FL determinant") {
  for (const Signature& sig : all_signatures()) {
    for (const DetFormula* f : formulas_for(sig.n())) {
      CAPTURE(f->name);
      CAPTURE(sig.to_string());
      for (int t = 0; t < 4; ++t) {
        const auto u = random_rational(sig, 9, t == 0 ? 0.5 : 0.0);
        REQUIRE(evaluate_det(*f, u) == det_fl(u));
      }
      const auto ud = test_support::random_float(sig);
      REQUIRE(close_scaled(evaluate_det(*f, ud), det_fl(ud), std::pow(std::max(1.0, l1_norm(ud)), sig.N())));
    }
  }
}

TEST_CASE("term counts per family and dimension") {
  // Minimal number of summed terms; 0 marks a family with no formula.
  const std::map<Family, std::vector<int>> counts = {
      {Family::Triangle, {1, 1, 1, 1, 1, 2}},
      {Family::Bar, {1, 1, 2, 2, 0, 0}},
      {Family::BarTilde, {1, 1, 1, 1, 2, 2}},
      {Family::BarTildeHat, {1, 1, 1, 1, 1, 0}},
  };
  for (const auto& [family, per_n] : counts) {
    for (int n = 1; n <= 6; ++n) {
      CAPTURE(family_name(family));
      CAPTURE(n);
      const int want = per_n[static_cast<std::size_t>(n - 1)];
      if (want == 0) {
        CHECK_THROWS_AS(det_formula(n, family), UnknownFormula);
      } else {
        CHECK(det_formula(n, family).terms.size() == static_cast<std::size_t>(want));
      }
    }
  }
}

TEST_CASE("catalog structure") {
  std::set<std::string> names;
  for (const DetFormula& f : formula_catalog()) {
    CAPTURE(f.name);
    CHECK(names.insert(f.name).second);
    CHECK(f.arity() == Signature(f.n, 0).N());
    Rational weight_sum = 0;
    for (const FormulaTerm& t : f.terms) {
      CHECK(t.word.slot_count() == f.arity());
      weight_sum += t.weight;
      std::set<std::string> used;
      collect_conjugations(t.word, used);
      for (const auto& c : used) CHECK(allowed(f.family).count(c) == 1);
    }
    CHECK(weight_sum == 1);  // Det(e) = 1
    CHECK(&formula_by_name(f.name) == &f);
  }
  CHECK_THROWS_AS(formula_by_name("triangle-n7"), UnknownFormula);
  CHECK_THROWS_AS(det_formula(7, Family::Triangle), std::invalid_argument);
}

TEST_CASE("unknown family cells name the alternatives") {
  try {
    det_formula(5, Family::Bar);
    FAIL("expected UnknownFormula");
  } catch (const UnknownFormula& e) {
    CHECK(std::string(e.what()).find("bar-tilde") != std::string::npos);
  }
}

TEST_CASE("both n = 3 orderings are valid") {
  const DetFormula& a = det_formula(3, Family::Triangle);
  const DetFormula& b = formula_by_name("triangle-n3an");
  CHECK_FALSE(a.terms == b.terms);
  for (const Signature& sig : all_signatures()) {
    if (sig.n() != 3) continue;
    for (int t = 0; t < 10; ++t) {
      const auto u = random_rational(sig);
      REQUIRE(evaluate_det(a, u) == evaluate_det(b, u));
    }
  }
}

TEST_CASE("rendered formulas") {
  CHECK(to_string(det_formula(1, Family::Triangle)) == "x1*hat(x2)");
  CHECK(to_string(det_formula(2, Family::Bar), false) == "U*bar(U)");
  CHECK(to_string(det_formula(3, Family::Triangle)) == "x1*hat(x2)*tilde(x3)*hat(tilde(x4))");
  CHECK(to_string(det_formula(4, Family::Triangle)) == "x1*hat(tilde(x2))*delta3(hat(x3)*tilde(x4))");
}

TEST_CASE("Bar-family coincidences between neighbouring dimensions") {
  CHECK(det_formula(3, Family::Bar).terms == det_formula(4, Family::Bar).terms);
  CHECK(det_formula(5, Family::BarTilde).terms == det_formula(6, Family::BarTilde).terms);
  CHECK(det_formula(1, Family::Bar).terms == det_formula(2, Family::Bar).terms);
  CHECK_FALSE(det_formula(4, Family::Bar).terms == det_formula(5, Family::BarTilde).terms);
}

TEST_CASE("JSON round trip of every formula") {
  for (const DetFormula& f : formula_catalog()) {
    const auto j = formula_to_json(f);
    const DetFormula back = formula_from_json(j);
    CHECK(back.name == f.name);
    CHECK(back.n == f.n);
    CHECK(back.family == f.family);
    CHECK(back.terms == f.terms);
    CHECK(j["text"] == to_string(f));
  }
  std::vector<const DetFormula*> all;
  for (const DetFormula& f : formula_catalog()) all.push_back(&f);
  CHECK(catalog_to_json(all)["formulas"].size() == formula_catalog().size());
  CHECK_THROWS_AS(word_from_json(nlohmann::json{{"op", "slot"}}), std::invalid_argument);
  CHECK_THROWS_AS(word_from_json(nlohmann::json{{"op", "conjugation"}, {"kind", "sideways"}}), std::invalid_argument);
}

TEST_CASE("family names round trip") {
  for (Family f : {Family::Triangle, Family::Bar, Family::BarTilde, Family::BarTildeHat})
    CHECK(parse_family(family_name(f)) == f);
  CHECK_THROWS_AS(parse_family("hat"), std::invalid_argument);
}

TEST_CASE("formula adjugates satisfy U Adj(U) = Det(U) e") {
  for (const Signature& sig : all_signatures()) {
    for (const DetFormula* f : formulas_for(sig.n())) {
      const auto u = random_rational(sig);
      const auto adj = evaluate_adjugate(*f, u);
      REQUIRE(u * adj == Multivector<Rational>::scalar(sig, det_fl(u)));
    }
  }
}

TEST_CASE("wrong dimension and nonscalar results are rejected") {
  const auto u = random_rational(Signature(2, 1));
  CHECK_THROWS_AS(evaluate_det(det_formula(2, Family::Triangle), u), std::invalid_argument);
  // U U is not a determinant formula: its value keeps grade >= 1 parts.
  const DetFormula bogus{"bogus", 1, Family::Triangle, {FormulaTerm{1, words::product({words::U(), words::U()})}}};
  DetFormula numbered = bogus;
  for (auto& t : numbered.terms) words::number_slots(t.word);
  const auto v = parse_multivector<Rational>(Signature(1, 0), "1 + e1");
  CHECK_THROWS_AS(evaluate_det(numbered, v), ConsistencyError);
  CHECK_THROWS_AS(evaluate_det(numbered, to_double(v)), ConsistencyError);
}

TEST_CASE("Delta(3) formulas refuse signatures with n < 4") {
  const Word w = [] {
    Word x = words::tri(words::U());
    words::number_slots(x);
    return x;
  }();
  const std::vector<Multivector<Rational>> slots = {random_rational(Signature(3, 0))};
  CHECK_THROWS_AS(evaluate_word<Rational>(w, slots), std::invalid_argument);
}
