#pragma once

#include <cstdint>
#include <vector>

#include "flinthills/ball.hpp"
#include "flinthills/cfrac.hpp"
#include "flinthills/reduction.hpp"

namespace flinthills {

/// Exponent pair of 1/(n^u |sin n|^v); both strictly positive.
struct SeriesParams {
  double u;
  double v;
};

void validate(const SeriesParams& params);

/// One evaluated term, with the reduction that produced it.
struct TermEvaluation {
  mpz_class n;
  Ball term;          // 1/(n^u |sin n|^v), certified
  mpz_class multiple;  // nearest integer to n/pi
  Ball residual;      // n - multiple*pi
};

/// Certified term value with at least `target_digits` significant digits.
/// Exponents are applied uniformly through exp(-u ln n - v ln|sin n|).
TermEvaluation term(const mpz_class& n, const SeriesParams& params,
                    long target_digits = 12);

struct PartialSum {
  std::uint64_t upto_n = 0;
  Ball sum;
  SeriesParams params{0, 0};
};

/// Streaming sum of terms 1..N; the aggregated certified error is below
/// 10^-target_digits relative to the sum. Fixed-size chunks keep the result
/// bit-identical for any thread count.
PartialSum partial_sum(std::uint64_t N, const SeriesParams& params,
                       long target_digits = 12, unsigned threads = 1);

enum class SpikeMode { kAuto, kConvergentGuided, kBruteForce };

struct SpikeScan {
  std::vector<TermEvaluation> found;    // certified term > threshold, by n
  std::vector<mpz_class> failed;        // candidates that hit the precision cap
  SpikeMode mode_used = SpikeMode::kBruteForce;
};

/// All n <= N whose certified term exceeds `threshold`. The guided mode
/// flags nearest-integer multiples of pi whose residual is small enough to
/// allow a spike (complete by the bound |sin n| >= (2/pi)|n - m pi|), scans
/// a small-n prefix exhaustively, adds windows around convergent numerators,
/// then certifies every candidate; Auto uses the brute scan for N <= 10^5.
SpikeScan spikes(std::uint64_t N, const SeriesParams& params, double threshold,
                 SpikeMode mode = SpikeMode::kAuto, unsigned threads = 1,
                 long target_digits = 12);

/// Terms at n = p_i and n = p_i + 1 for convergent i of pi, plus the sines
/// whose comparison the two-subsequence argument rests on.
struct SubsequenceDiagnostic {
  Convergent convergent;
  TermEvaluation at_numerator;
  TermEvaluation after_numerator;
  Ball sin_one_plus_p;  // sin(1 + p_i)
  Ball sin_one;         // sin(1)
};

SubsequenceDiagnostic subsequence_diagnostic(long convergent_index,
                                             const SeriesParams& params,
                                             long target_digits = 12);

/// Fit of term(n) <= C * n^-e over n <= N with e = u - (mu-1) v - eps:
/// fitted_c is max term(n) * n^e and argmax_n lists the n attaining it.
struct EnvelopeFit {
  double exponent_e = 0;
  Ball fitted_c;
  std::vector<std::uint64_t> argmax_n;
};

EnvelopeFit envelope_check(std::uint64_t N, const SeriesParams& params,
                           double mu, double epsilon, long target_digits = 12);

}  // namespace flinthills
