#include "flinthills/reduction.hpp"

#include <stdexcept>

#include "flinthills/errors.hpp"

namespace flinthills {

namespace {

long decimal_digits(const mpz_class& n) {
  return static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 10));
}

// rad < 10^-target * max(|mid|, 10^-target), evaluated conservatively.
bool residual_certified(const Ball& r, long target) {
  Real tiny = Real::from_decimal("1e-" + std::to_string(target), 64, MPFR_RNDD);
  Real mag = Real::abs(r.mid());
  const Real& big = (mag > tiny) ? mag : tiny;
  Real bound = Real::mul(tiny, big, 64, MPFR_RNDD);
  return r.rad() < bound;
}

}  // namespace

ReductionResult reduce_mod_pi(const mpz_class& n, long target_digits) {
  if (n < 1) throw std::invalid_argument("reduce_mod_pi: n must be >= 1");
  if (target_digits < 1) target_digits = 1;
  long dec_n = decimal_digits(n);
  long work = dec_n + target_digits + 12;
  for (;;) {
    check_precision_cap(work);
    mpfr_prec_t bits = digits_to_bits(work);
    Ball pi = Ball::pi(bits);
    Ball nb = Ball::exact_mpz(n);
    Ball quotient = Ball::div(nb, pi, bits);
    mpz_class m_lo = quotient.lower().to_mpz_nearest();
    mpz_class m_hi = quotient.upper().to_mpz_nearest();
    if (m_lo == m_hi) {
      mpz_class m = m_lo;
      mpfr_prec_t prod_bits =
          bits + static_cast<mpfr_prec_t>(mpz_sizeinbase(m.get_mpz_t(), 2)) + 8;
      Ball residual = Ball::sub(nb, Ball::mul_mpz(pi, m, prod_bits), prod_bits);
      if (residual_certified(residual, target_digits))
        return {std::move(m), std::move(residual), work};
    }
    work *= 2;
  }
}

bool digits_agree(const Real& a, const Real& b, long d) {
  Real diff = Real::abs(Real::sub(a, b, 64, MPFR_RNDU));
  Real unit = Real::from_decimal("1e-" + std::to_string(d - 1), 64, MPFR_RNDD);
  Real bound = Real::mul(unit, Real::abs(b), 64, MPFR_RNDD);
  return diff < bound;
}

Ball sin_of_integer(const mpz_class& n, long target_digits) {
  if (n < 1) throw std::invalid_argument("sin_of_integer: n must be >= 1");
  if (target_digits < 1) target_digits = 1;
  long t = target_digits + 2;
  bool have_prev = false;
  Real prev_mid;
  for (;;) {
    ReductionResult red = reduce_mod_pi(n, t);
    mpfr_prec_t bits = digits_to_bits(red.working_digits);
    Ball s = Ball::sin(red.residual, bits);
    if (mpz_odd_p(red.multiple.get_mpz_t())) s = Ball::neg(s);
    if (have_prev && s.certified_digits() >= target_digits &&
        digits_agree(prev_mid, s.mid(), target_digits)) {
      return s;
    }
    prev_mid = s.mid();
    have_prev = true;
    t *= 2;
  }
}

Ball lemma1_upper_slack(const Real& x) {
  mpfr_prec_t bits = x.precision() + 64;
  Ball xb = Ball::exact(x);
  Ball s = Ball::sin(xb, bits);
  return Ball::sub(Ball::abs(xb), Ball::abs(s), bits);
}

Lemma1Slacks lemma1_slacks(const Real& x) {
  mpfr_prec_t bits = x.precision() + 64;
  Ball xb = Ball::abs(Ball::exact(x));
  // Certify |x| <= pi/2, escalating pi's precision while undecided. x is an
  // exact binary rational and pi/2 is irrational, so this terminates.
  for (;;) {
    check_precision_cap(static_cast<long>(bits / 3) + 1);
    Ball half_pi = Ball::mul(Ball::pi(bits), Ball::exact_double(0.5), bits);
    int sign = Ball::sub(half_pi, xb, bits).certified_sign();
    if (sign < 0)
      throw std::domain_error("lemma1_slacks: |x| > pi/2");
    if (sign > 0) break;
    bits *= 2;
  }
  Lemma1Slacks out;
  out.upper_slack = lemma1_upper_slack(x);
  Ball s = Ball::abs(Ball::sin(xb, bits));
  Ball two_over_pi = Ball::div(Ball::exact_long(2), Ball::pi(bits), bits);
  out.lower_slack = Ball::sub(s, Ball::mul(two_over_pi, xb, bits), bits);
  return out;
}

}  // namespace flinthills
