#include "cliffdet/formula.hpp"

#include "cliffdet/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cliffdet {

Conjugation parse_conjugation(const std::string& name) {
  if (name == "hat") return Conjugation::hat();
  if (name == "tilde") return Conjugation::tilde();
  if (name == "bar") return Conjugation::bar();
  if (name.rfind("delta", 0) == 0 && name.size() == 6 && name[5] >= '1' && name[5] <= '9') {
    return Conjugation::delta(name[5] - '0');
  }
  throw std::invalid_argument("unknown conjugation '" + name + "'");
}

int Word::slot_count() const {
  if (op == Op::Slot) return 1;
  int total = 0;
  for (const Word& c : children) total += c.slot_count();
  return total;
}

namespace words {

Word U() { return Word{}; }

Word product(std::vector<Word> factors) {
  Word w;
  w.op = Word::Op::Product;
  for (Word& f : factors) {
    if (f.op == Word::Op::Product) {
      for (Word& g : f.children) w.children.push_back(std::move(g));
    } else {
      w.children.push_back(std::move(f));
    }
  }
  return w;
}

Word conj(Conjugation c, Word arg) {
  Word w;
  w.op = Word::Op::Conjugate;
  w.conj = c;
  w.children.push_back(std::move(arg));
  return w;
}

Word hat(Word w) { return conj(Conjugation::hat(), std::move(w)); }
Word tilde(Word w) { return conj(Conjugation::tilde(), std::move(w)); }
Word hat_tilde(Word w) { return hat(tilde(std::move(w))); }
Word tri(Word w) { return conj(Conjugation::triangle(), std::move(w)); }
Word bar(Word w) { return conj(Conjugation::bar(), std::move(w)); }

namespace {
void number_from(Word& w, int& next) {
  if (w.op == Word::Op::Slot) {
    w.slot = next++;
    return;
  }
  for (Word& c : w.children) number_from(c, next);
}
}  // namespace

void number_slots(Word& w) {
  int next = 0;
  number_from(w, next);
}

}  // namespace words

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Triangle: return "triangle";
    case Family::Bar: return "bar";
    case Family::BarTilde: return "bar-tilde";
    case Family::BarTildeHat: return "bar-tilde-hat";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::Triangle, Family::Bar, Family::BarTilde, Family::BarTildeHat})
    if (family_name(f) == name) return f;
  throw std::invalid_argument("unknown formula family '" + std::string(name) + "'");
}

namespace {

using namespace words;

FormulaTerm term(Rational weight, Word w) {
  number_slots(w);
  return {std::move(weight), std::move(w)};
}

DetFormula make(std::string name, int n, Family family, std::vector<FormulaTerm> terms) {
  return {std::move(name), n, family, std::move(terms)};
}

// U bar(U); valid for n = 1, 2 in every bar family.
std::vector<FormulaTerm> u_bar_u() { return {term(1, product({U(), bar(U())}))}; }

// (1/3) X X bar(X X) + (2/3) X bar(bar(X) bar(bar(X) bar(X))), with X = U for
// n = 3, 4 and X = U tilde(U) for n = 5, 6.
std::vector<FormulaTerm> bar_two_term(Word (*x)()) {
  return {
      term(Rational(1, 3), product({x(), x(), bar(product({x(), x()}))})),
      term(Rational(2, 3), product({x(), bar(product({bar(x()), bar(product({bar(x()), bar(x())}))}))})),
  };
}

Word h_pair() { return product({U(), tilde(U())}); }

std::vector<FormulaTerm> u_tilde_bar() {
  return {term(1, product({U(), tilde(U()), bar(product({U(), tilde(U())}))}))};
}

std::vector<DetFormula> build_catalog() {
  std::vector<DetFormula> c;

  c.push_back(make("triangle-n1", 1, Family::Triangle, {term(1, product({U(), hat(U())}))}));
  c.push_back(make("triangle-n2", 2, Family::Triangle, {term(1, product({U(), hat_tilde(U())}))}));
  c.push_back(make("triangle-n3", 3, Family::Triangle,
                   {term(1, product({U(), hat(U()), tilde(U()), hat_tilde(U())}))}));
  c.push_back(make("triangle-n3an", 3, Family::Triangle,
                   {term(1, product({tilde(U()), hat(U()), hat_tilde(U()), U()}))}));
  c.push_back(make("triangle-n4", 4, Family::Triangle,
                   {term(1, product({U(), hat_tilde(U()), tri(product({hat(U()), tilde(U())}))}))}));
  c.push_back(make("triangle-n5", 5, Family::Triangle,
                   {term(1, product({U(), hat_tilde(U()), hat(U()), tilde(U()),
                                     tri(product({hat(U()), tilde(U()), U(), hat_tilde(U())}))}))}));
  c.push_back(make(
      "triangle-n6", 6, Family::Triangle,
      {term(Rational(1, 3), product({U(), tilde(U()), hat(U()), hat_tilde(U()),
                                     tri(product({hat(U()), hat_tilde(U()), U(), tilde(U())}))})),
       term(Rational(2, 3),
            product({U(), tilde(U()),
                     tri(product({tri(product({hat(U()), hat_tilde(U())})),
                                  tri(product({tri(product({hat(U()), hat_tilde(U())})),
                                               tri(product({U(), tilde(U())}))}))}))}))}));

  c.push_back(make("bar-n1", 1, Family::Bar, u_bar_u()));
  c.push_back(make("bar-n2", 2, Family::Bar, u_bar_u()));
  c.push_back(make("bar-n3", 3, Family::Bar, bar_two_term(&U)));
  c.push_back(make("bar-n4", 4, Family::Bar, bar_two_term(&U)));

  c.push_back(make("bar-tilde-n1", 1, Family::BarTilde, u_bar_u()));
  c.push_back(make("bar-tilde-n2", 2, Family::BarTilde, u_bar_u()));
  c.push_back(make("bar-tilde-n3", 3, Family::BarTilde, u_tilde_bar()));
  c.push_back(make("bar-tilde-n4", 4, Family::BarTilde, u_tilde_bar()));
  c.push_back(make("bar-tilde-n5", 5, Family::BarTilde, bar_two_term(&h_pair)));
  c.push_back(make("bar-tilde-n6", 6, Family::BarTilde, bar_two_term(&h_pair)));

  c.push_back(make("bar-tilde-hat-n1", 1, Family::BarTildeHat, u_bar_u()));
  c.push_back(make("bar-tilde-hat-n2", 2, Family::BarTildeHat, u_bar_u()));
  c.push_back(make("bar-tilde-hat-n3", 3, Family::BarTildeHat, u_tilde_bar()));
  c.push_back(make("bar-tilde-hat-n4", 4, Family::BarTildeHat, u_tilde_bar()));
  // J hat(J) bar(J hat(J)) with J = U hat(tilde(U)), hat(J) expanded.
  c.push_back(make("bar-tilde-hat-n5", 5, Family::BarTildeHat,
                   {term(1, product({U(), hat_tilde(U()), hat(U()), tilde(U()),
                                     bar(product({U(), hat_tilde(U()), hat(U()), tilde(U())}))}))}));
  return c;
}

}  // namespace

const std::vector<DetFormula>& formula_catalog() {
  static const std::vector<DetFormula> catalog = build_catalog();
  return catalog;
}

std::vector<const DetFormula*> formulas_for(int n) {
  std::vector<const DetFormula*> out;
  for (const DetFormula& f : formula_catalog())
    if (f.n == n) out.push_back(&f);
  return out;
}

const DetFormula& det_formula(int n, Family family) {
  for (const DetFormula& f : formula_catalog())
    if (f.n == n && f.family == family) return f;
  std::string available;
  for (const DetFormula* f : formulas_for(n)) {
    const std::string fam(family_name(f->family));
    if (available.find(fam) == std::string::npos) available += (available.empty() ? "" : ", ") + fam;
  }
  throw UnknownFormula("no " + std::string(family_name(family)) + " formula for n = " + std::to_string(n) +
                       "; available: " + (available.empty() ? "none" : available));
}

const DetFormula& formula_by_name(std::string_view name) {
  for (const DetFormula& f : formula_catalog())
    if (f.name == name) return f;
  throw UnknownFormula("no formula named '" + std::string(name) + "'");
}

std::string to_string(const Word& w, bool indexed) {
  switch (w.op) {
    case Word::Op::Slot:
      return indexed ? "x" + std::to_string(w.slot + 1) : "U";
    case Word::Op::Conjugate:
      return w.conj.name() + "(" + to_string(w.children.front(), indexed) + ")";
    case Word::Op::Product: {
      std::string s;
      for (const Word& c : w.children) s += (s.empty() ? "" : "*") + to_string(c, indexed);
      return s;
    }
  }
  return {};
}

std::string to_string(const DetFormula& f, bool indexed) {
  std::string s;
  for (const FormulaTerm& t : f.terms) {
    if (!s.empty()) s += " + ";
    if (t.weight != 1) s += t.weight.get_str() + " * ";
    s += to_string(t.word, indexed);
  }
  return s;
}

template <class F>
Multivector<F> evaluate_word(const Word& w, std::span<const Multivector<F>> slots) {
  switch (w.op) {
    case Word::Op::Slot:
      return slots[static_cast<std::size_t>(w.slot)];
    case Word::Op::Conjugate:
      return conjugate(evaluate_word(w.children.front(), slots), w.conj);
    case Word::Op::Product: {
      Multivector<F> acc = evaluate_word(w.children.front(), slots);
      for (std::size_t i = 1; i < w.children.size(); ++i) acc = acc * evaluate_word(w.children[i], slots);
      return acc;
    }
  }
  throw std::logic_error("malformed word");
}

namespace {

template <class F>
void check_dimension(const DetFormula& f, const Multivector<F>& u) {
  if (u.signature().n() != f.n) {
    throw std::invalid_argument("formula " + f.name + " is for n = " + std::to_string(f.n) + ", got n = " +
                                std::to_string(u.signature().n()));
  }
}

template <class F>
double scalar_scale(const Multivector<F>& u) {
  return std::max(1.0, std::pow(l1_norm(u), u.signature().N()));
}

}  // namespace

template <class F>
void require_scalar(const Multivector<F>& v, double scale, const char* what) {
  if constexpr (FieldTraits<F>::exact) {
    (void)scale;
    if (!v.is_scalar()) throw ConsistencyError(std::string(what) + ": result has nonzero grade >= 1 part");
  } else {
    double worst = 0;
    for (std::size_t i = 1; i < v.size(); ++i) worst = std::max(worst, std::fabs(v[i]));
    if (worst > 1e-9 * scale) {
      throw ConsistencyError(std::string(what) + ": nonscalar residue " + FieldTraits<F>::to_string(worst));
    }
  }
}

template <class F>
Multivector<F> evaluate_formula(const DetFormula& f, const Multivector<F>& u) {
  check_dimension(f, u);
  const std::vector<Multivector<F>> slots(static_cast<std::size_t>(f.arity()), u);
  Multivector<F> sum(u.signature());
  for (const FormulaTerm& t : f.terms) {
    Multivector<F> value = evaluate_word<F>(t.word, slots);
    if (t.weight != 1) value *= FieldTraits<F>::from_rational(t.weight);
    sum += value;
  }
  return sum;
}

template <class F>
F evaluate_det(const DetFormula& f, const Multivector<F>& u) {
  Multivector<F> v = evaluate_formula(f, u);
  require_scalar(v, scalar_scale(u), f.name.c_str());
  return v.scalar_part();
}

template <class F>
Multivector<F> evaluate_adjugate(const DetFormula& f, const Multivector<F>& u) {
  check_dimension(f, u);
  const std::vector<Multivector<F>> slots(static_cast<std::size_t>(f.arity()), u);
  Multivector<F> sum(u.signature());
  for (const FormulaTerm& t : f.terms) {
    const Word& w = t.word;
    auto bare = [](const Word& x) { return x.op == Word::Op::Slot; };
    if (w.op != Word::Op::Product || w.children.size() < 2) {
      throw std::logic_error("formula term is not a product: " + f.name);
    }
    Word rest;
    rest.op = Word::Op::Product;
    if (bare(w.children.front())) {
      rest.children.assign(w.children.begin() + 1, w.children.end());
    } else if (bare(w.children.back())) {
      rest.children.assign(w.children.begin(), w.children.end() - 1);
    } else {
      throw std::logic_error("formula term has no bare outer factor U: " + f.name);
    }
    Multivector<F> value = evaluate_word<F>(rest, slots);
    if (t.weight != 1) value *= FieldTraits<F>::from_rational(t.weight);
    sum += value;
  }
  return sum;
}

template Multivector<Rational> evaluate_word(const Word&, std::span<const Multivector<Rational>>);
template Multivector<double> evaluate_word(const Word&, std::span<const Multivector<double>>);
template Multivector<Rational> evaluate_formula(const DetFormula&, const Multivector<Rational>&);
template Multivector<double> evaluate_formula(const DetFormula&, const Multivector<double>&);
template Rational evaluate_det(const DetFormula&, const Multivector<Rational>&);
template double evaluate_det(const DetFormula&, const Multivector<double>&);
template Multivector<Rational> evaluate_adjugate(const DetFormula&, const Multivector<Rational>&);
template Multivector<double> evaluate_adjugate(const DetFormula&, const Multivector<double>&);
template void require_scalar(const Multivector<Rational>&, double, const char*);
template void require_scalar(const Multivector<double>&, double, const char*);

}  // namespace cliffdet
