#include "cliffdet/blade.hpp"
#include "cliffdet/product_table.hpp"
#include "cliffdet/rational.hpp"
#include "cliffdet/signature.hpp"

#include <array>
#include <cctype>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace cliffdet {

Signature::Signature(int p, int q) : p_(p), q_(q) {
  if (p < 0 || q < 0) throw std::invalid_argument("signature counts must be non-negative");
  if (p + q < 1 || p + q > kMaxDimension) throw std::invalid_argument("signature needs 1 <= p+q <= 6");
}

std::string Signature::to_string() const { return std::to_string(p_) + "," + std::to_string(q_); }

const std::vector<Signature>& all_signatures() {
  static const std::vector<Signature> sigs = [] {
    std::vector<Signature> v;
    for (int n = 1; n <= kMaxDimension; ++n)
      for (int p = n; p >= 0; --p) v.emplace_back(p, n - p);
    return v;
  }();
  return sigs;
}

std::string blade_name(BladeIndex b) {
  if (b.bits == 0) return "1";
  std::string s = "e";
  for (int a = 0; a < kMaxDimension; ++a)
    if (b.bits & (1u << a)) s += static_cast<char>('1' + a);
  return s;
}

ProductTable::ProductTable(Signature sig)
    : sig_(sig), size_(sig.blade_count()), by_operand_(size_ * size_), by_result_(size_ * size_) {
  for (unsigned a = 0; a < size_; ++a) {
    for (unsigned b = 0; b < size_; ++b) {
      const int s = blade_product_sign(sig, BladeIndex(a), BladeIndex(b));
      by_operand_[a * size_ + b] = static_cast<std::int8_t>(s);
      by_result_[a * size_ + (a ^ b)] = s;
    }
  }
}

const ProductTable& product_table(const Signature& sig) {
  constexpr int kSlots = (kMaxDimension + 1) * (kMaxDimension + 1);
  static std::array<std::once_flag, kSlots> flags;
  static std::array<std::unique_ptr<ProductTable>, kSlots> tables;
  const int i = sig.ordinal();
  std::call_once(flags[i], [&] { tables[i] = std::make_unique<ProductTable>(sig); });
  return *tables[i];
}

Rational parse_rational(std::string_view text) {
  auto bad = [&] { return std::invalid_argument("not a rational literal: '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  std::size_t i = 0;
  bool negative = false;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    ++i;
  }
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    return j;
  };
  const std::size_t int_end = digits(i);
  if (int_end == i) throw bad();
  Rational value(mpz_class(std::string(text.substr(i, int_end - i))));
  if (int_end == text.size()) {
  } else if (text[int_end] == '/') {
    const std::size_t den_end = digits(int_end + 1);
    if (den_end == int_end + 1 || den_end != text.size()) throw bad();
    mpz_class den(std::string(text.substr(int_end + 1, den_end - int_end - 1)));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    value = Rational(value.get_num(), den);
    value.canonicalize();
  } else if (text[int_end] == '.') {
    const std::size_t frac_end = digits(int_end + 1);
    if (frac_end == int_end + 1 || frac_end != text.size()) throw bad();
    const std::string frac(text.substr(int_end + 1, frac_end - int_end - 1));
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    value = Rational(value.get_num() * scale + mpz_class(frac), scale);
    value.canonicalize();
  } else {
    throw bad();
  }
  return negative ? Rational(-value) : value;
}

}  // namespace cliffdet
