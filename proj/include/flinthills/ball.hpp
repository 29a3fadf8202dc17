#pragma once

#include <string>

#include "flinthills/real.hpp"

namespace flinthills {

/// Midpoint-radius enclosure of a real number: the true value is guaranteed
/// to lie in [mid - rad, mid + rad]. Radii are carried at a fixed small
/// precision and always rounded upward, so every operation yields a valid
/// enclosure; midpoints are correctly rounded at the working precision the
/// caller chooses.
class Ball {
 public:
  static constexpr mpfr_prec_t kRadBits = 32;

  Ball();  // NaN midpoint, infinite radius semantics unused; assign before use

  static Ball exact(Real mid);  // radius zero
  static Ball exact_long(long v);
  static Ball exact_double(double v);
  static Ball exact_mpz(const mpz_class& v);
  static Ball from_mpq(const mpq_class& v, mpfr_prec_t bits);
  static Ball from_mid_rad(Real mid, Real rad);
  static Ball pi(mpfr_prec_t bits);

  const Real& mid() const { return mid_; }
  const Real& rad() const { return rad_; }
  bool is_exact() const { return rad_.is_zero(); }
  bool contains_zero() const;
  /// Sign of every point of the enclosure: -1, +1, or 0 if undetermined.
  int certified_sign() const;

  Real lower() const;  // rounded outward
  Real upper() const;

  /// Leading significant decimal digits guaranteed by the radius:
  /// the largest d >= 0 with 2*rad <= 10^(1-d) * |mid|.
  long certified_digits() const;

  std::string decimal(long significant) const { return mid_.decimal(significant); }

  static Ball add(const Ball& a, const Ball& b, mpfr_prec_t bits);
  static Ball sub(const Ball& a, const Ball& b, mpfr_prec_t bits);
  static Ball mul(const Ball& a, const Ball& b, mpfr_prec_t bits);
  /// Divisor enclosure must exclude zero (std::domain_error otherwise).
  static Ball div(const Ball& a, const Ball& b, mpfr_prec_t bits);
  static Ball mul_mpz(const Ball& a, const mpz_class& k, mpfr_prec_t bits);
  static Ball sin(const Ball& a, mpfr_prec_t bits);
  /// Argument enclosure must be strictly positive.
  static Ball log(const Ball& a, mpfr_prec_t bits);
  static Ball exp(const Ball& a, mpfr_prec_t bits);
  static Ball neg(const Ball& a);
  static Ball abs(const Ball& a);

  /// True if every point of `*this` is strictly below every point of `other`.
  bool certainly_less(const Ball& other) const;
  bool certainly_greater(const Ball& other) const { return other.certainly_less(*this); }
  /// True if the enclosures intersect.
  bool overlaps(const Ball& other) const;

 private:
  Real mid_;
  Real rad_;  // nonnegative, kRadBits precision, rounded up
};

}  // namespace flinthills
