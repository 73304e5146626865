#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cliffdet {

struct SignatureMismatch : std::invalid_argument {
  SignatureMismatch() : std::invalid_argument("operands belong to different signatures") {}
};

// Determinant vanished; the offending value is kept in text form so both
// backends can report it.
class NotInvertible : public std::domain_error {
 public:
  explicit NotInvertible(std::string det)
      : std::domain_error("multivector is not invertible (Det = " + det + ")"), det_(std::move(det)) {}
  const std::string& determinant() const noexcept { return det_; }

 private:
  std::string det_;
};

// An ordered solution set whose k-th Vandermonde element is singular.
class NotGeneric : public std::domain_error {
 public:
  explicit NotGeneric(int k)
      : std::domain_error("solution set is not generic: v_" + std::to_string(k) + " is not invertible"),
        k_(k) {}
  int index() const noexcept { return k_; }

 private:
  int k_;
};

// Raised when an identity that must hold structurally does not: nonscalar
// determinant, nonreal matrix determinant, disagreeing methods.
struct ConsistencyError : std::logic_error {
  using std::logic_error::logic_error;
};

struct IllConditioned : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

struct UnknownFormula : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace cliffdet
