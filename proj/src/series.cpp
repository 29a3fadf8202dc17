#include "flinthills/series.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include "flinthills/errors.hpp"
#include "flinthills/pi.hpp"
#include "parallel.hpp"

namespace flinthills {

namespace {

constexpr std::uint64_t kChunk = 4096;

long digits10_of(std::uint64_t n) {
  return static_cast<long>(std::to_string(n).size());
}

// exp(a ln n - v ln|sin n|), certified to target_digits. Plain terms use
// a = -u; the envelope fit uses a = e - u to weigh in the n^e factor.
Ball weighted_term(const mpz_class& n, double a, double v, long target_digits,
                   ReductionResult* red_out) {
  long t = target_digits + 4;
  for (;;) {
    ReductionResult red = reduce_mod_pi(n, t);
    mpfr_prec_t bits = digits_to_bits(red.working_digits + 8);
    Ball s = Ball::abs(Ball::sin(red.residual, bits));
    if (s.certified_sign() > 0) {
      Ball ln_s = Ball::log(s, bits);
      Ball ln_n = Ball::log(Ball::exact_mpz(n), bits);
      Ball expo = Ball::sub(Ball::mul(Ball::exact_double(a), ln_n, bits),
                            Ball::mul(Ball::exact_double(v), ln_s, bits), bits);
      Ball val = Ball::exp(expo, bits);
      if (val.certified_digits() >= target_digits) {
        if (red_out) *red_out = std::move(red);
        return val;
      }
    }
    t *= 2;
  }
}

// Certified comparison of term(n) against a threshold, on the log scale so
// no certified digits of the term itself are required, only a separation.
bool term_exceeds(const mpz_class& n, const SeriesParams& p,
                  const Ball& ln_thr) {
  long t = 8;
  for (;;) {
    ReductionResult red = reduce_mod_pi(n, t);
    mpfr_prec_t bits = digits_to_bits(red.working_digits + 8);
    Ball s = Ball::abs(Ball::sin(red.residual, bits));
    if (s.certified_sign() > 0) {
      Ball ln_s = Ball::log(s, bits);
      Ball ln_n = Ball::log(Ball::exact_mpz(n), bits);
      Ball expo = Ball::neg(
          Ball::add(Ball::mul(Ball::exact_double(p.u), ln_n, bits),
                    Ball::mul(Ball::exact_double(p.v), ln_s, bits), bits));
      if (expo.certainly_greater(ln_thr)) return true;
      if (expo.certainly_less(ln_thr)) return false;
    }
    t *= 2;
  }
}

struct ScanChunk {
  std::vector<TermEvaluation> found;
  std::vector<mpz_class> failed;
};

void scan_range(std::uint64_t lo, std::uint64_t hi, const SeriesParams& params,
                const Ball& ln_thr, long target_digits, ScanChunk& out) {
  for (std::uint64_t n = lo; n <= hi; ++n) {
    mpz_class nz(static_cast<unsigned long>(n));
    try {
      if (term_exceeds(nz, params, ln_thr))
        out.found.push_back(term(nz, params, target_digits));
    } catch (const PrecisionCapError&) {
      out.failed.push_back(nz);
    }
  }
}

void brute_scan(std::uint64_t first, std::uint64_t last,
                const SeriesParams& params, const Ball& ln_thr,
                long target_digits, unsigned threads, SpikeScan& out) {
  if (last < first) return;
  std::uint64_t count = last - first + 1;
  std::uint64_t n_chunks = (count + kChunk - 1) / kChunk;
  detail::chunked_ordered<ScanChunk>(
      n_chunks, threads,
      [&](std::uint64_t c) {
        ScanChunk chunk;
        std::uint64_t lo = first + c * kChunk;
        std::uint64_t hi = std::min(last, lo + kChunk - 1);
        scan_range(lo, hi, params, ln_thr, target_digits, chunk);
        return chunk;
      },
      [&](std::uint64_t, ScanChunk chunk) {
        for (auto& te : chunk.found) out.found.push_back(std::move(te));
        for (auto& n : chunk.failed) out.failed.push_back(std::move(n));
      });
}

// Largest n for which the spike bound (pi/2)(thr n^u)^(-1/v) still exceeds
// 0.4; below it every integer is a candidate and gets scanned exhaustively.
std::uint64_t brute_prefix_end(const SeriesParams& p, double thr,
                               std::uint64_t N) {
  double ln_n0 = (p.v * std::log(M_PI / 0.8) - std::log(thr)) / p.u;
  double n0 = std::exp(ln_n0);
  if (!(n0 < 1e18)) return N;
  auto end = static_cast<std::uint64_t>(std::max(0.0, n0)) + 2;
  return std::min(end, N);
}

std::uint64_t multiples_upper_bound(std::uint64_t N) {
  Ball q = Ball::div(Ball::exact_mpz(mpz_class(static_cast<unsigned long>(N))),
                     Ball::pi(96), 96);
  return static_cast<std::uint64_t>(
      mpz_get_ui(q.upper().to_mpz_nearest().get_mpz_t())) + 1;
}

void guided_scan(std::uint64_t N, const SeriesParams& params, double thr,
                 const Ball& ln_thr, long target_digits, unsigned threads,
                 SpikeScan& out) {
  std::uint64_t n0 = brute_prefix_end(params, thr, N);
  brute_scan(1, n0, params, ln_thr, target_digits, threads, out);
  if (n0 >= N) return;

  std::uint64_t m_lo = 1;
  if (n0 > 8) m_lo = static_cast<std::uint64_t>((n0 - 4) / 3.15);
  std::uint64_t m_hi = multiples_upper_bound(N);
  if (m_hi < m_lo) return;

  mpfr_prec_t bits = digits_to_bits(digits10_of(N) + 16);
  std::uint64_t m_count = m_hi - m_lo + 1;
  std::uint64_t n_chunks = (m_count + kChunk - 1) / kChunk;
  std::set<std::uint64_t> candidates;
  detail::chunked_ordered<std::vector<std::uint64_t>>(
      n_chunks, threads,
      [&](std::uint64_t c) {
        std::vector<std::uint64_t> local;
        std::uint64_t lo = m_lo + c * kChunk;
        std::uint64_t hi = std::min(m_hi, lo + kChunk - 1);
        for (std::uint64_t m = lo; m <= hi; ++m) {
          mpz_class mz(static_cast<unsigned long>(m));
          mpfr_prec_t b = bits;
          mpz_class nm_lo, nm_hi;
          for (;;) {
            Ball mp = Ball::mul_mpz(Ball::pi(b), mz, b);
            nm_lo = mp.lower().to_mpz_nearest();
            nm_hi = mp.upper().to_mpz_nearest();
            if (nm_lo == nm_hi) break;
            b *= 2;
          }
          std::uint64_t nm = mpz_get_ui(nm_lo.get_mpz_t());
          if (nm < 1 || nm > N + 2) continue;
          Ball mp = Ball::mul_mpz(Ball::pi(b), mz, b);
          Ball r = Ball::sub(Ball::exact_mpz(nm_lo), mp, b);
          // Rigorous upper bound on |r|; a spike at n requires
          // |r| < (pi/2) (thr n^u)^(-1/v), tested with a 4x margin.
          double r_up = mpfr_get_d(Ball::abs(r).upper().raw(), MPFR_RNDU);
          double base = static_cast<double>(nm > 3 ? nm - 2 : 1);
          double ln_flag = std::log(M_PI / 2) -
                           (std::log(thr) + params.u * std::log(base)) /
                               params.v +
                           std::log(4.0);
          if (std::log(r_up) < ln_flag) {
            for (std::uint64_t w = nm >= 2 ? nm - 2 : 1; w <= nm + 2; ++w)
              if (w > n0 && w <= N) local.push_back(w);
          }
        }
        return local;
      },
      [&](std::uint64_t, std::vector<std::uint64_t> local) {
        candidates.insert(local.begin(), local.end());
      });

  // Convergent numerators of pi up to N, with the same +-2 window.
  long digits = 48;
  for (;;) {
    check_precision_cap(digits);
    auto convs = convergents(expand(pi_ball(digits), 2 * digits));
    if (!convs.empty() && convs.back().p > N) {
      for (const Convergent& c : convs) {
        if (c.p > N + 2) break;
        std::uint64_t p = mpz_get_ui(c.p.get_mpz_t());
        for (std::uint64_t w = p >= 2 ? p - 2 : 1; w <= p + 2; ++w)
          if (w > n0 && w <= N) candidates.insert(w);
      }
      break;
    }
    digits *= 2;
  }

  ScanChunk certified;
  for (std::uint64_t n : candidates) {
    mpz_class nz(static_cast<unsigned long>(n));
    try {
      if (term_exceeds(nz, params, ln_thr))
        certified.found.push_back(term(nz, params, target_digits));
    } catch (const PrecisionCapError&) {
      certified.failed.push_back(nz);
    }
  }
  for (auto& te : certified.found) out.found.push_back(std::move(te));
  for (auto& n : certified.failed) out.failed.push_back(std::move(n));
}

}  // namespace

void validate(const SeriesParams& params) {
  if (!(params.u > 0) || !(params.v > 0) || !std::isfinite(params.u) ||
      !std::isfinite(params.v))
    throw std::invalid_argument("series parameters require u > 0 and v > 0");
}

TermEvaluation term(const mpz_class& n, const SeriesParams& params,
                    long target_digits) {
  validate(params);
  if (n < 1) throw std::invalid_argument("term: n must be >= 1");
  if (target_digits < 1) target_digits = 1;
  ReductionResult red;
  Ball val = weighted_term(n, -params.u, params.v, target_digits, &red);
  return {n, std::move(val), std::move(red.multiple), std::move(red.residual)};
}

PartialSum partial_sum(std::uint64_t N, const SeriesParams& params,
                       long target_digits, unsigned threads) {
  validate(params);
  if (N < 1) throw std::invalid_argument("partial_sum: N must be >= 1");
  if (target_digits < 1) target_digits = 1;
  long per_term = target_digits + 3;
  mpfr_prec_t acc_bits = digits_to_bits(target_digits + digits10_of(N) + 8);
  std::uint64_t n_chunks = (N + kChunk - 1) / kChunk;
  Ball total = Ball::exact_long(0);
  detail::chunked_ordered<Ball>(
      n_chunks, threads,
      [&](std::uint64_t c) {
        std::uint64_t lo = c * kChunk + 1;
        std::uint64_t hi = std::min<std::uint64_t>(N, lo + kChunk - 1);
        Ball acc = Ball::exact_long(0);
        for (std::uint64_t n = lo; n <= hi; ++n) {
          mpz_class nz(static_cast<unsigned long>(n));
          acc = Ball::add(acc, term(nz, params, per_term).term, acc_bits);
        }
        return acc;
      },
      [&](std::uint64_t, Ball chunk) {
        total = Ball::add(total, chunk, acc_bits);
      });
  return {N, std::move(total), params};
}

SpikeScan spikes(std::uint64_t N, const SeriesParams& params, double threshold,
                 SpikeMode mode, unsigned threads, long target_digits) {
  validate(params);
  if (N < 1) throw std::invalid_argument("spikes: N must be >= 1");
  if (!(threshold > 0))
    throw std::invalid_argument("spikes: threshold must be > 0");
  SpikeMode resolved = mode;
  if (resolved == SpikeMode::kAuto)
    resolved = N <= 100000 ? SpikeMode::kBruteForce
                           : SpikeMode::kConvergentGuided;
  Ball ln_thr = Ball::log(Ball::exact_double(threshold), 256);
  SpikeScan out;
  out.mode_used = resolved;
  if (resolved == SpikeMode::kBruteForce) {
    brute_scan(1, N, params, ln_thr, target_digits, threads, out);
  } else {
    guided_scan(N, params, threshold, ln_thr, target_digits, threads, out);
  }
  return out;
}

SubsequenceDiagnostic subsequence_diagnostic(long convergent_index,
                                             const SeriesParams& params,
                                             long target_digits) {
  validate(params);
  if (convergent_index < 0)
    throw std::invalid_argument("subsequence_diagnostic: index must be >= 0");
  auto convs = convergents_of(pi_source(), convergent_index + 1);
  Convergent c = convs[static_cast<size_t>(convergent_index)];
  SubsequenceDiagnostic out;
  out.at_numerator = term(c.p, params, target_digits);
  out.after_numerator = term(c.p + 1, params, target_digits);
  out.sin_one_plus_p = sin_of_integer(c.p + 1, target_digits);
  out.sin_one = sin_of_integer(mpz_class(1), target_digits);
  out.convergent = std::move(c);
  return out;
}

EnvelopeFit envelope_check(std::uint64_t N, const SeriesParams& params,
                           double mu, double epsilon, long target_digits) {
  validate(params);
  if (N < 1) throw std::invalid_argument("envelope_check: N must be >= 1");
  if (!(mu >= 2)) throw std::invalid_argument("envelope_check: mu must be >= 2");
  if (!(epsilon > 0))
    throw std::invalid_argument("envelope_check: epsilon must be > 0");
  double e = params.u - (mu - 1.0) * params.v - epsilon;
  double a = e - params.u;
  EnvelopeFit out;
  out.exponent_e = e;
  Ball best;
  std::uint64_t best_n = 0;
  bool have = false;
  for (std::uint64_t n = 1; n <= N; ++n) {
    mpz_class nz(static_cast<unsigned long>(n));
    Ball w = weighted_term(nz, a, params.v, target_digits + 2, nullptr);
    if (!have) {
      best = std::move(w);
      best_n = n;
      out.argmax_n = {n};
      have = true;
      continue;
    }
    if (w.certainly_greater(best)) {
      best = std::move(w);
      best_n = n;
      out.argmax_n = {n};
    } else if (!w.certainly_less(best)) {
      // Undecided at this precision; tighten both before calling it a tie.
      Ball w2 = weighted_term(nz, a, params.v, target_digits + 10, nullptr);
      mpz_class bz(static_cast<unsigned long>(best_n));
      Ball b2 = weighted_term(bz, a, params.v, target_digits + 10, nullptr);
      if (w2.certainly_greater(b2)) {
        best = std::move(w2);
        best_n = n;
        out.argmax_n = {n};
      } else if (!w2.certainly_less(b2)) {
        out.argmax_n.push_back(n);
      }
    }
  }
  out.fitted_c = std::move(best);
  return out;
}

}  // namespace flinthills
