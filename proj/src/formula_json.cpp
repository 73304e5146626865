#include "cliffdet/formula_json.hpp"

#include <stdexcept>

namespace cliffdet {

using nlohmann::json;

json word_to_json(const Word& w) {
  switch (w.op) {
    case Word::Op::Slot:
      return {{"op", "slot"}, {"index", w.slot + 1}};
    case Word::Op::Product: {
      json factors = json::array();
      for (const Word& c : w.children) factors.push_back(word_to_json(c));
      return {{"op", "product"}, {"factors", std::move(factors)}};
    }
    case Word::Op::Conjugate: {
      json node = {{"op", "conjugation"}};
      switch (w.conj.kind()) {
        case Conjugation::Kind::GradeInvolution: node["kind"] = "hat"; break;
        case Conjugation::Kind::Reversion: node["kind"] = "tilde"; break;
        case Conjugation::Kind::Bar: node["kind"] = "bar"; break;
        case Conjugation::Kind::Delta:
          node["kind"] = "delta";
          node["j"] = w.conj.order();
          break;
      }
      node["arg"] = word_to_json(w.children.front());
      return node;
    }
  }
  throw std::logic_error("malformed word");
}

Word word_from_json(const json& j) {
  try {
    const std::string op = j.at("op").get<std::string>();
    if (op == "slot") {
      Word w;
      w.slot = j.at("index").get<int>() - 1;
      if (w.slot < 0) throw std::invalid_argument("slot index must be >= 1");
      return w;
    }
    if (op == "product") {
      Word w;
      w.op = Word::Op::Product;
      for (const json& f : j.at("factors")) w.children.push_back(word_from_json(f));
      if (w.children.empty()) throw std::invalid_argument("empty product");
      return w;
    }
    if (op == "conjugation") {
      const std::string kind = j.at("kind").get<std::string>();
      const Conjugation c = kind == "delta" ? Conjugation::delta(j.at("j").get<int>()) : parse_conjugation(kind);
      Word w;
      w.op = Word::Op::Conjugate;
      w.conj = c;
      w.children.push_back(word_from_json(j.at("arg")));
      return w;
    }
    throw std::invalid_argument("unknown node op '" + op + "'");
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed formula node: ") + e.what());
  }
}

json formula_to_json(const DetFormula& f) {
  json terms = json::array();
  for (const FormulaTerm& t : f.terms) terms.push_back({{"weight", t.weight.get_str()}, {"word", word_to_json(t.word)}});
  return {{"name", f.name},
          {"n", f.n},
          {"family", std::string(family_name(f.family))},
          {"arity", f.arity()},
          {"text", to_string(f)},
          {"terms", std::move(terms)}};
}

DetFormula formula_from_json(const json& j) {
  try {
    DetFormula f;
    f.name = j.at("name").get<std::string>();
    f.n = j.at("n").get<int>();
    f.family = parse_family(j.at("family").get<std::string>());
    for (const json& t : j.at("terms")) {
      f.terms.push_back({parse_rational(t.at("weight").get<std::string>()), word_from_json(t.at("word"))});
    }
    return f;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed formula: ") + e.what());
  }
}

json catalog_to_json(std::span<const DetFormula* const> formulas) {
  json out = json::array();
  for (const DetFormula* f : formulas) out.push_back(formula_to_json(*f));
  return {{"formulas", std::move(out)}};
}

}  // namespace cliffdet
