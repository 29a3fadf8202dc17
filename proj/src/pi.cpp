#include "flinthills/pi.hpp"

#include <stdexcept>

#include "flinthills/errors.hpp"

namespace flinthills {

namespace {

// Truncated (round-toward-zero) digit rendering; pi is positive so this is
// the digit prefix of the true decimal expansion of any lower/upper bound.
std::string truncated_digits(const Real& x, long count) {
  mpfr_exp_t e = 0;
  char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(count), x.raw(),
                         MPFR_RNDZ);
  std::string out(s);
  mpfr_free_str(s);
  if (e != 1) throw std::logic_error("pi digit rendering lost its exponent");
  return out;
}

// Round a digit string up by one unit in the last place.
std::string increment_digits(std::string d) {
  for (auto it = d.rbegin(); it != d.rend(); ++it) {
    if (*it != '9') {
      ++*it;
      return d;
    }
    *it = '0';
  }
  return "1" + d;  // cannot happen for pi's leading "3", kept for generality
}

}  // namespace

void PiCache::ensure(long digits) {
  if (static_cast<long>(store_.size()) >= digits) return;
  long target = std::max({digits, static_cast<long>(store_.size()) * 2, 32L});
  long guard = 10;
  for (;;) {
    mpfr_prec_t bits = digits_to_bits(target + guard);
    Real lo = Real::pi(bits, MPFR_RNDD);
    Real hi = Real::pi(bits, MPFR_RNDU);
    std::string slo = truncated_digits(lo, target);
    std::string shi = truncated_digits(hi, target);
    if (slo == shi) {
      // Certified truncation of pi; must extend what we already served.
      if (slo.compare(0, store_.size(), store_) != 0)
        throw std::logic_error("pi cache prefix changed while growing");
      store_ = std::move(slo);
      return;
    }
    guard *= 2;  // a digit boundary fell inside the enclosure; rare
  }
}

std::string PiCache::decimal(long significant) {
  if (significant < 1)
    throw std::invalid_argument("pi: digits must be >= 1");
  check_precision_cap(significant);
  std::lock_guard<std::mutex> lock(mu_);
  ensure(significant + 1);
  std::string prefix = store_.substr(0, static_cast<size_t>(significant));
  if (store_[static_cast<size_t>(significant)] >= '5')
    prefix = increment_digits(std::move(prefix));
  long exp10 = 1 + (static_cast<long>(prefix.size()) - significant);
  return format_decimal(std::move(prefix), exp10, false);
}

Real PiCache::real(long significant) {
  return Real::from_decimal(decimal(significant), digits_to_bits(significant));
}

Ball PiCache::ball(long significant) {
  Real mid = real(significant);
  // Rounded digit string is within 0.5 * 10^(1 - d) of pi; parsing adds at
  // most one ulp, safely inside 6 * 10^-d.
  Real rad = Real::from_decimal("6e-" + std::to_string(significant),
                                Ball::kRadBits, MPFR_RNDU);
  return Ball::from_mid_rad(std::move(mid), std::move(rad));
}

long PiCache::stored_digits() const {
  std::lock_guard<std::mutex> lock(mu_);
  return static_cast<long>(store_.size());
}

PiCache& pi_cache() {
  static PiCache cache;
  return cache;
}

std::string pi_digits(long significant) { return pi_cache().decimal(significant); }
Real pi_to(long significant) { return pi_cache().real(significant); }
Ball pi_ball(long significant) { return pi_cache().ball(significant); }

}  // namespace flinthills
