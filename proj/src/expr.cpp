#include "cliffdet/expr.hpp"

#include "cliffdet/errors.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

namespace cliffdet {

namespace {

template <class F>
F number_value(std::string_view text);

template <>
Rational number_value<Rational>(std::string_view text) {
  return parse_rational(text);
}

template <>
double number_value<double>(std::string_view text) {
  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    const Rational r = parse_rational(text);
    return FieldTraits<double>::from_rational(r);
  }
  double value = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  }
  return value;
}

template <class F>
class Parser {
 public:
  Parser(const Signature& sig, std::string_view text) : sig_(sig), text_(text), out_(sig) {}

  Multivector<F> run() {
    skip_space();
    if (at_end()) fail("empty expression");
    bool first = true;
    while (true) {
      skip_space();
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      term(negative);
      first = false;
      skip_space();
      if (at_end()) break;
    }
    return std::move(out_);
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  static bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void term(bool negative) {
    F coeff(1);
    bool have_number = false;
    if (is_digit(peek())) {
      coeff = number();
      have_number = true;
      skip_space();
      if (peek() == '*') {
        ++pos_;
        skip_space();
        if (peek() != 'e') fail("expected a blade after '*'");
      }
    }
    unsigned bits = 0;
    if (peek() == 'e') {
      bits = blade();
    } else if (!have_number) {
      fail(at_end() ? "unexpected end of expression" : std::string("unexpected character '") + peek() + "'");
    }
    if (negative) coeff = F(-coeff);
    out_[bits] += coeff;
  }

  F number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      const std::size_t from = pos_;
      while (is_digit(peek())) ++pos_;
      if (pos_ == from) fail("expected digits");
    };
    digits();
    if (peek() == '.') {
      ++pos_;
      digits();
    } else if (peek() == '/') {
      const std::size_t den_start = ++pos_;
      digits();
      if (text_.substr(den_start, pos_ - den_start).find_first_not_of('0') == std::string_view::npos) {
        pos_ = den_start;
        fail("zero denominator");
      }
    }
    return number_value<F>(text_.substr(start, pos_ - start));
  }

  unsigned blade() {
    ++pos_;  // 'e'
    if (!is_digit(peek())) fail("expected generator index after 'e'");
    unsigned bits = 0;
    int last = 0;
    while (is_digit(peek())) {
      const int idx = peek() - '0';
      if (idx < 1 || idx > sig_.n()) {
        fail("generator index " + std::to_string(idx) + " out of range 1.." + std::to_string(sig_.n()));
      }
      if (bits & (1u << (idx - 1))) fail("repeated generator index " + std::to_string(idx));
      if (idx < last) fail("generator indices must be strictly ascending");
      bits |= 1u << (idx - 1);
      last = idx;
      ++pos_;
    }
    return bits;
  }

  Signature sig_;
  std::string_view text_;
  std::size_t pos_ = 0;
  Multivector<F> out_;
};

std::string coefficient_text(const Rational& x) { return x.get_str(); }

std::string coefficient_text(double x) {
  char buf[512];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed);
  return std::string(buf, res.ptr);
}

}  // namespace

template <class F>
Multivector<F> parse_multivector(const Signature& sig, std::string_view text) {
  return Parser<F>(sig, text).run();
}

template <class F>
std::string format_multivector(const Multivector<F>& u) {
  std::string out;
  for (std::size_t b = 0; b < u.size(); ++b) {
    const F& c = u[b];
    if (c == 0) continue;
    const bool negative = c < 0;
    const F mag = negative ? F(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const std::string blade = blade_name(BladeIndex{static_cast<unsigned>(b)});
    if (b == 0) out += coefficient_text(mag);
    else if (mag == 1) out += blade;
    else out += coefficient_text(mag) + "*" + blade;
  }
  return out.empty() ? "0" : out;
}

Multivector<double> to_double(const Multivector<Rational>& u) {
  Multivector<double> out(u.signature());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = FieldTraits<double>::from_rational(u[i]);
  return out;
}

template Multivector<Rational> parse_multivector(const Signature&, std::string_view);
template Multivector<double> parse_multivector(const Signature&, std::string_view);
template std::string format_multivector(const Multivector<Rational>&);
template std::string format_multivector(const Multivector<double>&);

}  // namespace cliffdet
