#pragma once

#include "flinthills/ball.hpp"

namespace flinthills {

/// n = multiple * pi + residual with |residual| <= pi/2 (multiple is the
/// nearest integer to n/pi, which is what makes that bound hold).
struct ReductionResult {
  mpz_class multiple;
  Ball residual;
  long working_digits;  // decimal working precision that certified the result
};

/// Argument reduction for an integer n >= 1. The residual carries at least
/// `target_digits` certified significant digits: its radius satisfies
/// rad < 10^-target * max(|residual|, 10^-target). Working precision starts
/// at digits(n) + target + guard and doubles until certified.
ReductionResult reduce_mod_pi(const mpz_class& n, long target_digits);

/// sin(n) for an integer n >= 1 with at least `target_digits` certified
/// significant digits, however small sin(n) is. Evaluates through the
/// reduction sin(n) = (-1)^m * sin(n - m*pi), re-running at doubled
/// precision until the leading digits are both stable and certified.
Ball sin_of_integer(const mpz_class& n, long target_digits);

/// True when a and b agree to d significant digits in the numeric sense:
/// |a - b| < 10^(1-d) * |b| (one unit in the d-th significant place).
bool digits_agree(const Real& a, const Real& b, long d);

struct Lemma1Slacks {
  Ball upper_slack;  // |x| - |sin x|      (>= 0 for every real x)
  Ball lower_slack;  // |sin x| - (2/pi)|x| (>= 0 for |x| <= pi/2)
};

/// |x| - |sin x| as a certified enclosure; no domain restriction.
Ball lemma1_upper_slack(const Real& x);

/// Both slacks; throws std::domain_error if |x| > pi/2 (certified).
Lemma1Slacks lemma1_slacks(const Real& x);

}  // namespace flinthills
