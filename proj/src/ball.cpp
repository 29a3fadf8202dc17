#include "flinthills/ball.hpp"

#include <stdexcept>

namespace flinthills {

namespace {
constexpr mpfr_prec_t kRB = Ball::kRadBits;

// Rounding error of a correctly rounded operation: one ulp of the result,
// zero when the ternary flag reports exactness.
Real step_error(const Real& result, int inexact) {
  if (inexact == 0 || result.is_zero()) return Real::zero(kRB);
  return result.ulp();
}

Real rad_add(const Real& a, const Real& b) {
  return Real::add(a, b, kRB, MPFR_RNDU);
}

Real rad_add3(const Real& a, const Real& b, const Real& c) {
  return rad_add(rad_add(a, b), c);
}

Real rad_mul(const Real& a, const Real& b) {
  return Real::mul(a, b, kRB, MPFR_RNDU);
}
}  // namespace

Ball::Ball() : mid_(), rad_(Real::zero(kRB)) {}

Ball Ball::exact(Real mid) {
  Ball b;
  b.mid_ = std::move(mid);
  b.rad_ = Real::zero(kRB);
  return b;
}

Ball Ball::exact_long(long v) { return exact(Real::from_long(v, 64)); }

Ball Ball::exact_double(double v) { return exact(Real::from_double(v)); }

Ball Ball::exact_mpz(const mpz_class& v) {
  mpfr_prec_t bits = std::max<mpfr_prec_t>(
      64, static_cast<mpfr_prec_t>(mpz_sizeinbase(v.get_mpz_t(), 2)) + 1);
  return exact(Real::from_mpz(v, bits, MPFR_RNDN));
}

Ball Ball::from_mpq(const mpq_class& v, mpfr_prec_t bits) {
  int t = 0;
  Ball b;
  Real mid(bits);
  t = mpfr_set_q(mid.raw(), v.get_mpq_t(), MPFR_RNDN);
  b.rad_ = step_error(mid, t);
  b.mid_ = std::move(mid);
  return b;
}

Ball Ball::from_mid_rad(Real mid, Real rad) {
  if (rad.sign() < 0) throw std::invalid_argument("negative radius");
  Ball b;
  b.mid_ = std::move(mid);
  b.rad_ = Real::add(rad, Real::zero(kRB), kRB, MPFR_RNDU);
  return b;
}

Ball Ball::pi(mpfr_prec_t bits) {
  Real mid = Real::pi(bits, MPFR_RNDN);
  Ball b;
  b.rad_ = mid.ulp();  // true error <= 0.5 ulp
  b.mid_ = std::move(mid);
  return b;
}

bool Ball::contains_zero() const {
  if (mid_.is_zero()) return true;
  return mpfr_cmpabs(mid_.raw(), rad_.raw()) <= 0;
}

int Ball::certified_sign() const {
  if (contains_zero()) return 0;
  return mid_.sign();
}

Real Ball::lower() const {
  return Real::sub(mid_, rad_, mid_.precision() + kRB, MPFR_RNDD);
}

Real Ball::upper() const {
  return Real::add(mid_, rad_, mid_.precision() + kRB, MPFR_RNDU);
}

long Ball::certified_digits() const {
  if (mid_.is_nan()) return 0;
  if (rad_.is_zero()) {
    // Exact value: every digit the precision can express.
    return static_cast<long>(static_cast<double>(mid_.precision()) * 0.30102);
  }
  if (mid_.is_zero()) return 0;
  // d = floor(1 + log10(|mid| / (2 rad))), rounded toward fewer digits.
  Real q = Real::div(Real::abs(mid_), rad_, 64, MPFR_RNDD);
  mpfr_div_ui(q.raw(), q.raw(), 2, MPFR_RNDD);
  if (mpfr_cmp_ui(q.raw(), 1) < 0) return 0;
  Real lg(64);
  mpfr_log10(lg.raw(), q.raw(), MPFR_RNDD);
  mpfr_floor(lg.raw(), lg.raw());
  return 1 + lg.to_long();
}

Ball Ball::add(const Ball& a, const Ball& b, mpfr_prec_t bits) {
  int t;
  Real mid = Real::add(a.mid_, b.mid_, bits, MPFR_RNDN, &t);
  Ball r;
  r.rad_ = rad_add3(a.rad_, b.rad_, step_error(mid, t));
  r.mid_ = std::move(mid);
  return r;
}

Ball Ball::sub(const Ball& a, const Ball& b, mpfr_prec_t bits) {
  int t;
  Real mid = Real::sub(a.mid_, b.mid_, bits, MPFR_RNDN, &t);
  Ball r;
  r.rad_ = rad_add3(a.rad_, b.rad_, step_error(mid, t));
  r.mid_ = std::move(mid);
  return r;
}

Ball Ball::mul(const Ball& a, const Ball& b, mpfr_prec_t bits) {
  int t;
  Real mid = Real::mul(a.mid_, b.mid_, bits, MPFR_RNDN, &t);
  // |a||rb| + |b||ra| + ra rb + rounding
  Real r1 = rad_mul(Real::abs(a.mid_), b.rad_);
  Real r2 = rad_mul(Real::abs(b.mid_), a.rad_);
  Real r3 = rad_mul(a.rad_, b.rad_);
  Ball r;
  r.rad_ = rad_add(rad_add3(r1, r2, r3), step_error(mid, t));
  r.mid_ = std::move(mid);
  return r;
}

Ball Ball::mul_mpz(const Ball& a, const mpz_class& k, mpfr_prec_t bits) {
  int t;
  Real mid = Real::mul_mpz(a.mid_, k, bits, MPFR_RNDN, &t);
  Real kr = Real::from_mpz(k, kRB, MPFR_RNDU);
  Ball r;
  r.rad_ = rad_add(rad_mul(Real::abs(kr), a.rad_), step_error(mid, t));
  r.mid_ = std::move(mid);
  return r;
}

Ball Ball::div(const Ball& a, const Ball& b, mpfr_prec_t bits) {
  if (b.contains_zero())
    throw std::domain_error("Ball::div: divisor interval contains zero");
  int t;
  Real mid = Real::div(a.mid_, b.mid_, bits, MPFR_RNDN, &t);
  // (ra + |mid| rb) / (|mb| - rb) + rounding; denominator > 0 by the check.
  Real num = rad_add(a.rad_, rad_mul(Real::abs(mid), b.rad_));
  Real den = Real::sub(Real::abs(b.mid_), b.rad_, kRB, MPFR_RNDD);
  Ball r;
  r.rad_ = rad_add(Real::div(num, den, kRB, MPFR_RNDU), step_error(mid, t));
  r.mid_ = std::move(mid);
  return r;
}

Ball Ball::sin(const Ball& a, mpfr_prec_t bits) {
  int t;
  Real mid = Real::sin(a.mid_, bits, MPFR_RNDN, &t);
  Ball r;
  r.rad_ = rad_add(a.rad_, step_error(mid, t));  // |sin'| <= 1
  r.mid_ = std::move(mid);
  return r;
}

Ball Ball::log(const Ball& a, mpfr_prec_t bits) {
  Real low = Real::sub(a.mid_, a.rad_, std::max<mpfr_prec_t>(kRB, a.mid_.precision()), MPFR_RNDD);
  if (low.sign() <= 0)
    throw std::domain_error("Ball::log: argument interval not strictly positive");
  int t;
  Real mid = Real::log(a.mid_, bits, MPFR_RNDN, &t);
  // derivative bound 1/(mid - rad)
  Ball r;
  r.rad_ = rad_add(Real::div(a.rad_, low, kRB, MPFR_RNDU), step_error(mid, t));
  r.mid_ = std::move(mid);
  return r;
}

Ball Ball::exp(const Ball& a, mpfr_prec_t bits) {
  int t;
  Real mid = Real::exp(a.mid_, bits, MPFR_RNDN, &t);
  // exp(m +- r) within exp(m) * (1 +- expm1(r)) on both sides
  Real grow = Real::expm1(a.rad_, kRB, MPFR_RNDU);
  Ball r;
  r.rad_ = rad_add(rad_mul(Real::abs(mid), grow), step_error(mid, t));
  r.mid_ = std::move(mid);
  return r;
}

Ball Ball::neg(const Ball& a) {
  Ball r;
  r.mid_ = Real::neg(a.mid_);
  r.rad_ = a.rad_;
  return r;
}

Ball Ball::abs(const Ball& a) {
  Ball r;
  r.mid_ = Real::abs(a.mid_);
  r.rad_ = a.rad_;
  return r;
}

bool Ball::certainly_less(const Ball& other) const {
  return upper() < other.lower();
}

bool Ball::overlaps(const Ball& other) const {
  return !certainly_less(other) && !other.certainly_less(*this);
}

}  // namespace flinthills
