#pragma once

#include <functional>
#include <vector>

#include "flinthills/ball.hpp"

namespace flinthills {

/// Certified prefix of a continued-fraction expansion [a0; a1, a2, ...].
/// Every emitted quotient is provably identical for both endpoints of the
/// input enclosure (or exact, for rational inputs).
struct CFExpansion {
  std::vector<mpz_class> quotients;
  bool precision_exhausted = false;  // stopped because the enclosure ran out
  bool terminated = false;           // exact rational, fully expanded

  long certified_count() const { return static_cast<long>(quotients.size()); }
};

/// Expands the enclosure of x until max_terms quotients are certified, the
/// enclosure stops determining the next quotient (precision_exhausted), or a
/// rational input terminates. Not a failure to come up short; re-expand with
/// a tighter enclosure for more terms.
CFExpansion expand(const Ball& x, long max_terms);

/// Exact rational input; finite expansion in canonical form (final quotient
/// >= 2 whenever the expansion has more than one term).
CFExpansion expand(const mpq_class& x, long max_terms);

struct Convergent {
  long index = 0;  // 0-based; convergent 0 of pi is 3/1
  mpz_class p;
  mpz_class q;
};

/// Convergents p_i/q_i by the standard recurrence, one per certified
/// quotient. Coprime by construction.
std::vector<Convergent> convergents(const CFExpansion& expansion);

/// Supplies an enclosure of a constant at any requested decimal precision;
/// lets witness computations escalate on their own.
using RealSource = std::function<Ball(long decimal_digits)>;

/// Enclosure source for pi, backed by the global digit cache.
RealSource pi_source();

/// First `count` convergents of x, escalating the source precision as
/// needed. Fewer are returned only if x is rational with a shorter
/// expansion.
std::vector<Convergent> convergents_of(const RealSource& x, long count);

/// All convergents of x with q <= max_q.
std::vector<Convergent> convergents_up_to_q(const RealSource& x,
                                            const mpz_class& max_q);

/// The approximation exponent of one convergent: |x - p/q| = q^-delta.
struct ExponentWitness {
  Convergent convergent;
  Ball delta;
  Ball residual;  // |x - p/q|
};

/// Witness for a convergent with q >= 2 (std::invalid_argument otherwise).
/// The residual carries `target_digits` certified digits; delta's bound is
/// propagated from the residual's.
ExponentWitness exponent_witness(const RealSource& x, const Convergent& c,
                                 long target_digits = 10);

struct MuScanResult {
  Ball max_delta;
  Convergent argmax;
  std::vector<ExponentWitness> witnesses;  // all with 2 <= q <= max_q
};

/// Maximum witness exponent over convergents with q <= max_q. An empirical
/// statistic about best approximations seen so far; it is not a bound on the
/// irrationality measure of the constant.
MuScanResult mu_witness_scan(const RealSource& x, const mpz_class& max_q,
                             long target_digits = 10);

}  // namespace flinthills
