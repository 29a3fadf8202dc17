#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <string_view>

namespace flinthills {

/// Decimal digits -> binary precision with guard bits.
mpfr_prec_t digits_to_bits(long decimal_digits);

/// An immutable arbitrary-precision real: a thin value-semantics wrapper
/// around mpfr_t. Every value is an exact scaled integer m * 2^e carried at
/// an explicit precision; operations take their result precision and
/// rounding mode explicitly and are deterministic (correctly rounded).
class Real {
 public:
  Real();  // NaN at minimal precision
  explicit Real(mpfr_prec_t bits);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  static Real from_long(long v, mpfr_prec_t bits);
  static Real from_double(double v);  // exact
  static Real from_mpz(const mpz_class& v, mpfr_prec_t bits, mpfr_rnd_t rnd);
  static Real from_mpq(const mpq_class& v, mpfr_prec_t bits, mpfr_rnd_t rnd);
  static Real from_decimal(std::string_view s, mpfr_prec_t bits,
                           mpfr_rnd_t rnd = MPFR_RNDN);
  static Real zero(mpfr_prec_t bits = 2);
  static Real pi(mpfr_prec_t bits, mpfr_rnd_t rnd);

  mpfr_prec_t precision() const { return mpfr_get_prec(x_); }
  int sign() const { return mpfr_sgn(x_); }
  bool is_zero() const { return mpfr_zero_p(x_) != 0; }
  bool is_nan() const { return mpfr_nan_p(x_) != 0; }
  /// Binary exponent e with |x| in [2^(e-1), 2^e). Undefined for zero.
  mpfr_exp_t exponent2() const { return mpfr_get_exp(x_); }

  double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(x_, MPFR_RNDN); }
  mpz_class to_mpz_nearest() const;
  mpq_class to_mpq() const;  // exact

  /// `significant` decimal digits. Plain notation while the decimal exponent
  /// stays readable, scientific otherwise. Deterministic.
  std::string decimal(long significant, mpfr_rnd_t rnd = MPFR_RNDN) const;

  /// One unit in the last place of this value: 2^(exponent2() - precision()).
  /// Zero input yields zero.
  Real ulp() const;

  // Arithmetic; result carried at `bits`, correctly rounded per `rnd`.
  // The returned ternary sign (via *inexact, when requested) is 0 iff exact.
  static Real add(const Real& a, const Real& b, mpfr_prec_t bits,
                  mpfr_rnd_t rnd, int* inexact = nullptr);
  static Real sub(const Real& a, const Real& b, mpfr_prec_t bits,
                  mpfr_rnd_t rnd, int* inexact = nullptr);
  static Real mul(const Real& a, const Real& b, mpfr_prec_t bits,
                  mpfr_rnd_t rnd, int* inexact = nullptr);
  static Real div(const Real& a, const Real& b, mpfr_prec_t bits,
                  mpfr_rnd_t rnd, int* inexact = nullptr);
  static Real mul_mpz(const Real& a, const mpz_class& k, mpfr_prec_t bits,
                      mpfr_rnd_t rnd, int* inexact = nullptr);
  static Real sin(const Real& a, mpfr_prec_t bits, mpfr_rnd_t rnd,
                  int* inexact = nullptr);
  static Real log(const Real& a, mpfr_prec_t bits, mpfr_rnd_t rnd,
                  int* inexact = nullptr);
  static Real exp(const Real& a, mpfr_prec_t bits, mpfr_rnd_t rnd,
                  int* inexact = nullptr);
  static Real expm1(const Real& a, mpfr_prec_t bits, mpfr_rnd_t rnd);
  static Real neg(const Real& a);  // exact
  static Real abs(const Real& a);  // exact

  static int cmp(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_); }
  friend bool operator<(const Real& a, const Real& b) { return cmp(a, b) < 0; }
  friend bool operator>(const Real& a, const Real& b) { return cmp(a, b) > 0; }
  friend bool operator<=(const Real& a, const Real& b) { return cmp(a, b) <= 0; }
  friend bool operator>=(const Real& a, const Real& b) { return cmp(a, b) >= 0; }
  friend bool operator==(const Real& a, const Real& b) { return cmp(a, b) == 0; }

  mpfr_srcptr raw() const { return x_; }
  mpfr_ptr raw() { return x_; }

 private:
  mpfr_t x_;
};

/// Deterministic rendering of a decimal digit string `0.<digits> * 10^exp10`
/// as a human-readable number. `negative` prepends the sign.
std::string format_decimal(std::string digits, long exp10, bool negative);

}  // namespace flinthills
