#pragma once

#include "cliffdet/conjugation.hpp"
#include "cliffdet/multivector.hpp"
#include "cliffdet/rational.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cliffdet {

// Expression tree over numbered occurrences ("slots") of U. Slots are numbered
// 0, 1, ... in left-to-right reading order, so every subtree covers a
// contiguous slot range.
struct Word {
  enum class Op { Slot, Product, Conjugate };

  Op op = Op::Slot;
  int slot = -1;                                // Op::Slot
  Conjugation conj = Conjugation::hat();        // Op::Conjugate
  std::vector<Word> children;                   // factors, or the single argument

  int slot_count() const;
  friend bool operator==(const Word&, const Word&) = default;
};

// Builders. Slots come out unnumbered (-1) until number_slots() runs.
namespace words {
Word U();
Word product(std::vector<Word> factors);  // nested products are flattened
Word conj(Conjugation c, Word w);
Word hat(Word w);
Word tilde(Word w);
Word hat_tilde(Word w);
Word tri(Word w);  // Delta(3)
Word bar(Word w);
void number_slots(Word& w);
}  // namespace words

struct FormulaTerm {
  Rational weight;
  Word word;
  friend bool operator==(const FormulaTerm&, const FormulaTerm&) = default;
};

// Which conjugations a basis-free determinant formula may use.
enum class Family {
  Triangle,     // hat, tilde, Delta(j)
  Bar,          // bar only
  BarTilde,     // bar, tilde
  BarTildeHat,  // bar, tilde, hat
};

std::string_view family_name(Family f);  // "triangle", "bar", "bar-tilde", "bar-tilde-hat"
Family parse_family(std::string_view name);  // throws std::invalid_argument

// Det(U) = sum_j weight_j word_j(U, ..., U); every word has N slots.
struct DetFormula {
  std::string name;
  int n = 0;
  Family family = Family::Triangle;
  std::vector<FormulaTerm> terms;

  int arity() const { return terms.empty() ? 0 : terms.front().word.slot_count(); }
};

// Every cataloged formula, n = 1..6.
const std::vector<DetFormula>& formula_catalog();

// Formulas available for dimension n, catalog order.
std::vector<const DetFormula*> formulas_for(int n);

// The primary formula for (n, family). Throws UnknownFormula (listing the
// families available for n) when the catalog has none.
const DetFormula& det_formula(int n, Family family);

// Lookup by catalog name, e.g. "triangle-n3an". Throws UnknownFormula.
const DetFormula& formula_by_name(std::string_view name);

// Renders with slot names x1..xN ("x1*hat(x2)") or all slots as "U".
std::string to_string(const Word& w, bool indexed = true);
std::string to_string(const DetFormula& f, bool indexed = true);

// Evaluates a word with the given value in each slot.
template <class F>
Multivector<F> evaluate_word(const Word& w, std::span<const Multivector<F>> slots);

// sum_j weight_j word_j(U, ..., U), not yet checked for scalarity.
template <class F>
Multivector<F> evaluate_formula(const DetFormula& f, const Multivector<F>& u);

// Scalar value of the formula at U. Throws std::invalid_argument for a
// dimension mismatch and ConsistencyError when a nonscalar part survives
// (exactly for rationals; relative to l1_norm(U)^N for doubles).
template <class F>
F evaluate_det(const DetFormula& f, const Multivector<F>& u);

// sum_j weight_j H_j(U) where word_j = U H_j (or H_j U): the factor of the
// formula left after removing its bare leading (else trailing) slot.
template <class F>
Multivector<F> evaluate_adjugate(const DetFormula& f, const Multivector<F>& u);

// Throws ConsistencyError when grades >= 1 of v do not vanish; for doubles
// the tolerance is 1e-9 * scale.
template <class F>
void require_scalar(const Multivector<F>& v, double scale, const char* what);

extern template Multivector<Rational> evaluate_word(const Word&, std::span<const Multivector<Rational>>);
extern template Multivector<double> evaluate_word(const Word&, std::span<const Multivector<double>>);
extern template Multivector<Rational> evaluate_formula(const DetFormula&, const Multivector<Rational>&);
extern template Multivector<double> evaluate_formula(const DetFormula&, const Multivector<double>&);
extern template Rational evaluate_det(const DetFormula&, const Multivector<Rational>&);
extern template double evaluate_det(const DetFormula&, const Multivector<double>&);
extern template Multivector<Rational> evaluate_adjugate(const DetFormula&, const Multivector<Rational>&);
extern template Multivector<double> evaluate_adjugate(const DetFormula&, const Multivector<double>&);
extern template void require_scalar(const Multivector<Rational>&, double, const char*);
extern template void require_scalar(const Multivector<double>&, double, const char*);

}  // namespace cliffdet
