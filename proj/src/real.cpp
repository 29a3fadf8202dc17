#include "flinthills/real.hpp"

#include <cassert>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "flinthills/errors.hpp"

namespace flinthills {

namespace {
std::atomic<long> g_precision_cap{100000};
}  // namespace

long precision_cap() { return g_precision_cap.load(std::memory_order_relaxed); }

void set_precision_cap(long digits) {
  if (digits < 1) throw std::invalid_argument("precision cap must be >= 1");
  g_precision_cap.store(digits, std::memory_order_relaxed);
}

void check_precision_cap(long digits) {
  long cap = precision_cap();
  if (digits > cap) throw PrecisionCapError(digits, cap);
}

mpfr_prec_t digits_to_bits(long decimal_digits) {
  // log2(10) = 3.3219..., rounded up, plus guard bits.
  return static_cast<mpfr_prec_t>(decimal_digits * 3.3220) + 32;
}

Real::Real() { mpfr_init2(x_, MPFR_PREC_MIN); }

Real::Real(mpfr_prec_t bits) { mpfr_init2(x_, bits); }

Real::Real(const Real& other) {
  mpfr_init2(x_, mpfr_get_prec(other.x_));
  mpfr_set(x_, other.x_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(x_, MPFR_PREC_MIN);
  mpfr_swap(x_, other.x_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(x_, mpfr_get_prec(other.x_));
    mpfr_set(x_, other.x_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) mpfr_swap(x_, other.x_);
  return *this;
}

Real::~Real() { mpfr_clear(x_); }

Real Real::from_long(long v, mpfr_prec_t bits) {
  Real r(std::max<mpfr_prec_t>(bits, 64));
  mpfr_set_si(r.x_, v, MPFR_RNDN);
  return r;
}

Real Real::from_double(double v) {
  Real r(64);
  mpfr_set_d(r.x_, v, MPFR_RNDN);  // exact: 64 > 53 mantissa bits
  return r;
}

Real Real::from_mpz(const mpz_class& v, mpfr_prec_t bits, mpfr_rnd_t rnd) {
  Real r(bits);
  mpfr_set_z(r.x_, v.get_mpz_t(), rnd);
  return r;
}

Real Real::from_mpq(const mpq_class& v, mpfr_prec_t bits, mpfr_rnd_t rnd) {
  Real r(bits);
  mpfr_set_q(r.x_, v.get_mpq_t(), rnd);
  return r;
}

Real Real::from_decimal(std::string_view s, mpfr_prec_t bits, mpfr_rnd_t rnd) {
  Real r(bits);
  std::string buf(s);
  if (mpfr_set_str(r.x_, buf.c_str(), 10, rnd) != 0)
    throw std::invalid_argument("not a decimal number: " + buf);
  return r;
}

Real Real::zero(mpfr_prec_t bits) {
  Real r(bits);
  mpfr_set_zero(r.x_, 1);
  return r;
}

Real Real::pi(mpfr_prec_t bits, mpfr_rnd_t rnd) {
  Real r(bits);
  mpfr_const_pi(r.x_, rnd);
  return r;
}

mpz_class Real::to_mpz_nearest() const {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), x_, MPFR_RNDN);
  return z;
}

mpq_class Real::to_mpq() const {
  if (is_zero()) return mpq_class(0);
  mpz_class m;
  mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x_);
  mpq_class q(m);
  if (e >= 0) {
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return q;
}

Real Real::ulp() const {
  Real r(MPFR_PREC_MIN + 30);
  if (is_zero()) {
    mpfr_set_zero(r.x_, 1);
    return r;
  }
  mpfr_set_ui_2exp(r.x_, 1, exponent2() - precision(), MPFR_RNDU);
  return r;
}

namespace {
using UnaryFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);
using BinaryFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

Real apply2(BinaryFn fn, const Real& a, const Real& b, mpfr_prec_t bits,
            mpfr_rnd_t rnd, int* inexact) {
  Real r(bits);
  int t = fn(r.raw(), a.raw(), b.raw(), rnd);
  if (inexact) *inexact = t;
  return r;
}

Real apply1(UnaryFn fn, const Real& a, mpfr_prec_t bits, mpfr_rnd_t rnd,
            int* inexact) {
  Real r(bits);
  int t = fn(r.raw(), a.raw(), rnd);
  if (inexact) *inexact = t;
  return r;
}
}  // namespace

Real Real::add(const Real& a, const Real& b, mpfr_prec_t bits, mpfr_rnd_t rnd,
               int* inexact) {
  return apply2(mpfr_add, a, b, bits, rnd, inexact);
}
Real Real::sub(const Real& a, const Real& b, mpfr_prec_t bits, mpfr_rnd_t rnd,
               int* inexact) {
  return apply2(mpfr_sub, a, b, bits, rnd, inexact);
}
Real Real::mul(const Real& a, const Real& b, mpfr_prec_t bits, mpfr_rnd_t rnd,
               int* inexact) {
  return apply2(mpfr_mul, a, b, bits, rnd, inexact);
}
Real Real::div(const Real& a, const Real& b, mpfr_prec_t bits, mpfr_rnd_t rnd,
               int* inexact) {
  return apply2(mpfr_div, a, b, bits, rnd, inexact);
}

Real Real::mul_mpz(const Real& a, const mpz_class& k, mpfr_prec_t bits,
                   mpfr_rnd_t rnd, int* inexact) {
  Real r(bits);
  int t = mpfr_mul_z(r.raw(), a.raw(), k.get_mpz_t(), rnd);
  if (inexact) *inexact = t;
  return r;
}

Real Real::sin(const Real& a, mpfr_prec_t bits, mpfr_rnd_t rnd, int* inexact) {
  return apply1(mpfr_sin, a, bits, rnd, inexact);
}
Real Real::log(const Real& a, mpfr_prec_t bits, mpfr_rnd_t rnd, int* inexact) {
  return apply1(mpfr_log, a, bits, rnd, inexact);
}
Real Real::exp(const Real& a, mpfr_prec_t bits, mpfr_rnd_t rnd, int* inexact) {
  return apply1(mpfr_exp, a, bits, rnd, inexact);
}
Real Real::expm1(const Real& a, mpfr_prec_t bits, mpfr_rnd_t rnd) {
  return apply1(mpfr_expm1, a, bits, rnd, nullptr);
}

Real Real::neg(const Real& a) {
  Real r(a.precision());
  mpfr_neg(r.x_, a.x_, MPFR_RNDN);
  return r;
}

Real Real::abs(const Real& a) {
  Real r(a.precision());
  mpfr_abs(r.x_, a.x_, MPFR_RNDN);
  return r;
}

std::string format_decimal(std::string digits, long exp10, bool negative) {
  // Strip a redundant leading zero run that mpfr never produces, keep as is.
  std::string out;
  long n = static_cast<long>(digits.size());
  if (exp10 >= 1 && exp10 <= std::max<long>(n + 2, 17)) {
    // Plain notation with the point inside or just past the digits.
    if (exp10 >= n) {
      out = digits + std::string(exp10 - n, '0');
    } else {
      out = digits.substr(0, exp10) + "." + digits.substr(exp10);
    }
  } else if (exp10 <= 0 && exp10 > -4) {
    out = "0." + std::string(-exp10, '0') + digits;
  } else {
    // Scientific: d.ddd e (exp10 - 1).
    out = digits.substr(0, 1);
    if (n > 1) out += "." + digits.substr(1);
    long e = exp10 - 1;
    out += "e";
    if (e >= 0) out += "+";
    out += std::to_string(e);
  }
  return negative ? "-" + out : out;
}

std::string Real::decimal(long significant, mpfr_rnd_t rnd) const {
  if (significant < 1) significant = 1;
  if (is_nan()) return "nan";
  if (is_zero()) return "0";
  mpfr_exp_t e = 0;
  char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(significant),
                         x_, rnd);
  std::string digits(s);
  mpfr_free_str(s);
  bool neg = !digits.empty() && digits[0] == '-';
  if (neg) digits.erase(0, 1);
  return format_decimal(std::move(digits), static_cast<long>(e), neg);
}

}  // namespace flinthills
