#include "cliffdet/kernels.hpp"
#include "cliffdet/product_table.hpp"

#include <stdexcept>
#include <vector>

namespace cliffdet::kernels {
namespace {

// Per-thread integer scratch, reused across calls to avoid reallocating limbs.
struct Scratch {
  std::vector<mpz_class> lhs, rhs, acc;
  std::vector<unsigned> rhs_nonzero;
  mpz_class lhs_den, rhs_den, den, tmp;

  void resize(std::size_t n) {
    if (lhs.size() < n) {
      lhs.resize(n);
      rhs.resize(n);
      acc.resize(n);
    }
  }
};

// Writes integer numerators over a shared denominator into nums.
void to_common_denominator(std::span<const Rational> x, std::vector<mpz_class>& nums, mpz_class& den,
                           mpz_class& tmp) {
  den = 1;
  for (const Rational& v : x) {
    if (mpz_cmp_ui(v.get_den_mpz_t(), 1) != 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  }
  const bool integral = mpz_cmp_ui(den.get_mpz_t(), 1) == 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (integral) {
      mpz_set(nums[i].get_mpz_t(), x[i].get_num_mpz_t());
    } else {
      mpz_divexact(tmp.get_mpz_t(), den.get_mpz_t(), x[i].get_den_mpz_t());
      mpz_mul(nums[i].get_mpz_t(), x[i].get_num_mpz_t(), tmp.get_mpz_t());
    }
  }
}

}  // namespace

void product_rational(const Signature& sig, std::span<const Rational> a, std::span<const Rational> b,
                      std::span<Rational> out) {
  const std::size_t size = sig.blade_count();
  if (a.size() != size || b.size() != size || out.size() != size) {
    throw std::invalid_argument("operand length does not match the signature");
  }
  const ProductTable& table = product_table(sig);
  thread_local Scratch s;
  s.resize(size);

  to_common_denominator(a, s.lhs, s.lhs_den, s.tmp);
  to_common_denominator(b, s.rhs, s.rhs_den, s.tmp);

  s.rhs_nonzero.clear();
  for (unsigned j = 0; j < size; ++j)
    if (mpz_sgn(s.rhs[j].get_mpz_t()) != 0) s.rhs_nonzero.push_back(j);
  for (std::size_t c = 0; c < size; ++c) mpz_set_ui(s.acc[c].get_mpz_t(), 0);

  for (unsigned i = 0; i < size; ++i) {
    const mpz_srcptr x = s.lhs[i].get_mpz_t();
    if (mpz_sgn(x) == 0) continue;
    for (unsigned j : s.rhs_nonzero) {
      mpz_ptr target = s.acc[i ^ j].get_mpz_t();
      if (table.sign(i, j) > 0)
        mpz_addmul(target, x, s.rhs[j].get_mpz_t());
      else
        mpz_submul(target, x, s.rhs[j].get_mpz_t());
    }
  }

  mpz_mul(s.den.get_mpz_t(), s.lhs_den.get_mpz_t(), s.rhs_den.get_mpz_t());
  const bool integral = mpz_cmp_ui(s.den.get_mpz_t(), 1) == 0;
  for (std::size_t c = 0; c < size; ++c) {
    mpq_ptr r = out[c].get_mpq_t();
    if (integral) {
      mpq_set_z(r, s.acc[c].get_mpz_t());
    } else {
      mpq_set_num(r, s.acc[c].get_mpz_t());
      mpq_set_den(r, s.den.get_mpz_t());
      mpq_canonicalize(r);
    }
  }
}

}  // namespace cliffdet::kernels
