#pragma once

#include <cstdint>
#include <string>

#include "flinthills/ball.hpp"

namespace testutil {

// Deterministic generator with implementation-independent output
// (std::uniform_real_distribution is not portable across libraries).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : s_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next() {
    s_ ^= s_ << 13;
    s_ ^= s_ >> 7;
    s_ ^= s_ << 17;
    return s_;
  }

  double uniform() {  // [0, 1)
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  std::uint64_t below(std::uint64_t n) { return next() % n; }

 private:
  std::uint64_t s_;
};

// |mid(b) - ref| <= rel_tol * |ref|, evaluated in extended precision.
inline bool close_to(const flinthills::Ball& b, const std::string& ref,
                     double rel_tol) {
  using flinthills::Real;
  Real r = Real::from_decimal(ref, 256);
  Real diff = Real::abs(Real::sub(b.mid(), r, 256, MPFR_RNDU));
  Real bound = Real::mul(Real::abs(r), Real::from_double(rel_tol), 256,
                         MPFR_RNDD);
  return diff <= bound;
}

inline long sig_digits(const std::string& ref) {
  long sig = 0;
  bool leading_zero = true;
  for (char c : ref) {
    if (c == 'e' || c == 'E') break;
    if (c < '0' || c > '9') continue;
    if (c == '0' && leading_zero) continue;
    leading_zero = false;
    ++sig;
  }
  return sig < 2 ? 2 : sig;
}

// The reference value (itself rounded to its printed digits) is consistent
// with the enclosure: |mid - ref| <= rad + one unit in ref's last digit.
inline bool encloses(const flinthills::Ball& b, const std::string& ref) {
  using flinthills::Real;
  Real r = Real::from_decimal(ref, 256);
  long sig = sig_digits(ref);
  Real unit = Real::mul(Real::abs(r),
                        Real::from_decimal("1e-" + std::to_string(sig - 1), 64),
                        64, MPFR_RNDU);
  Real diff = Real::abs(Real::sub(b.mid(), r, 256, MPFR_RNDU));
  Real bound = Real::add(b.rad(), unit, 64, MPFR_RNDU);
  return diff <= bound;
}

}  // namespace testutil
