#include "flinthills/cfrac.hpp"

#include <stdexcept>
#include <utility>

#include "flinthills/errors.hpp"
#include "flinthills/pi.hpp"

namespace flinthills {

namespace {

mpz_class floor_of(const mpq_class& x) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return f;
}

void canonicalize(CFExpansion& e) {
  // [..., a, 1] == [..., a+1]; applies only to fully expanded rationals.
  if (e.terminated && e.quotients.size() >= 2 && e.quotients.back() == 1) {
    e.quotients.pop_back();
    e.quotients.back() += 1;
  }
}

// Lockstep expansion of the exact endpoints lo <= hi. Emits the common
// quotient prefix; all arithmetic is exact rational, so emitted quotients
// are certified outright.
CFExpansion expand_interval(mpq_class lo, mpq_class hi, long max_terms) {
  CFExpansion out;
  if (lo > hi) throw std::invalid_argument("expand: inverted interval");
  bool point = (lo == hi);
  while (static_cast<long>(out.quotients.size()) < max_terms) {
    mpz_class a_lo = floor_of(lo);
    mpz_class a_hi = floor_of(hi);
    if (a_lo != a_hi) {
      out.precision_exhausted = true;
      break;
    }
    out.quotients.push_back(a_lo);
    mpq_class f_lo = lo - mpq_class(a_lo);
    mpq_class f_hi = hi - mpq_class(a_hi);
    if (point) {
      if (f_lo == 0) {
        out.terminated = true;
        break;
      }
      lo = 1 / f_lo;
      hi = lo;
      continue;
    }
    if (f_lo == 0 || f_hi == 0) {
      // One endpoint hit an integer exactly; the next quotient is unbounded
      // on that side and cannot be certified.
      out.precision_exhausted = true;
      break;
    }
    // Reciprocal swaps the endpoints.
    mpq_class new_lo = 1 / f_hi;
    mpq_class new_hi = 1 / f_lo;
    lo = std::move(new_lo);
    hi = std::move(new_hi);
  }
  canonicalize(out);
  return out;
}

}  // namespace

CFExpansion expand(const Ball& x, long max_terms) {
  if (max_terms < 1) throw std::invalid_argument("expand: max_terms must be >= 1");
  if (x.mid().is_nan()) throw std::invalid_argument("expand: NaN input");
  mpq_class mid = x.mid().to_mpq();
  mpq_class rad = x.rad().to_mpq();
  return expand_interval(mid - rad, mid + rad, max_terms);
}

CFExpansion expand(const mpq_class& x, long max_terms) {
  if (max_terms < 1) throw std::invalid_argument("expand: max_terms must be >= 1");
  mpq_class c(x);
  c.canonicalize();
  return expand_interval(c, c, max_terms);
}

std::vector<Convergent> convergents(const CFExpansion& expansion) {
  std::vector<Convergent> out;
  out.reserve(expansion.quotients.size());
  mpz_class p_prev2 = 0, p_prev1 = 1;  // p_{-2}, p_{-1}
  mpz_class q_prev2 = 1, q_prev1 = 0;
  long i = 0;
  for (const mpz_class& a : expansion.quotients) {
    mpz_class p = a * p_prev1 + p_prev2;
    mpz_class q = a * q_prev1 + q_prev2;
    out.push_back({i++, p, q});
    p_prev2 = std::move(p_prev1);
    p_prev1 = std::move(p);
    q_prev2 = std::move(q_prev1);
    q_prev1 = std::move(q);
  }
  return out;
}

RealSource pi_source() {
  return [](long decimal_digits) { return pi_ball(decimal_digits); };
}

std::vector<Convergent> convergents_of(const RealSource& x, long count) {
  if (count < 1) throw std::invalid_argument("convergents_of: count must be >= 1");
  long digits = std::max(48L, 3 * count);
  for (;;) {
    check_precision_cap(digits);
    CFExpansion e = expand(x(digits), count);
    if (e.terminated || e.certified_count() >= count) {
      auto convs = convergents(e);
      if (convs.size() > static_cast<size_t>(count)) convs.resize(count);
      return convs;
    }
    digits *= 2;
  }
}

std::vector<Convergent> convergents_up_to_q(const RealSource& x,
                                            const mpz_class& max_q) {
  if (max_q < 1) throw std::invalid_argument("convergents_up_to_q: max_q must be >= 1");
  long digits = 64;
  for (;;) {
    check_precision_cap(digits);
    CFExpansion e = expand(x(digits), 2 * digits + 16);
    auto convs = convergents(e);
    if (e.terminated || (!convs.empty() && convs.back().q > max_q)) {
      std::erase_if(convs, [&](const Convergent& c) { return c.q > max_q; });
      return convs;
    }
    digits *= 2;
  }
}

ExponentWitness exponent_witness(const RealSource& x, const Convergent& c,
                                 long target_digits) {
  if (c.q < 2)
    throw std::invalid_argument("exponent_witness: q must be >= 2");
  if (target_digits < 1) target_digits = 1;
  long q_digits = static_cast<long>(mpz_sizeinbase(c.q.get_mpz_t(), 10));
  long dx = std::max(2 * q_digits + target_digits + 12, 32L);
  mpq_class frac(c.p, c.q);
  frac.canonicalize();
  for (;;) {
    check_precision_cap(dx);
    mpfr_prec_t bits = digits_to_bits(dx);
    Ball xb = x(dx);
    Ball residual = Ball::abs(Ball::sub(xb, Ball::from_mpq(frac, bits), bits));
    if (residual.certified_sign() > 0 &&
        residual.certified_digits() >= target_digits) {
      Ball ln_q = Ball::log(Ball::exact_mpz(c.q), bits);
      Ball delta = Ball::div(Ball::neg(Ball::log(residual, bits)), ln_q, bits);
      return {c, std::move(delta), std::move(residual)};
    }
    dx *= 2;
  }
}

MuScanResult mu_witness_scan(const RealSource& x, const mpz_class& max_q,
                             long target_digits) {
  std::vector<ExponentWitness> witnesses;
  for (const Convergent& c : convergents_up_to_q(x, max_q)) {
    if (c.q >= 2) witnesses.push_back(exponent_witness(x, c, target_digits));
  }
  if (witnesses.empty())
    throw std::invalid_argument(
        "mu_witness_scan: no convergent with 2 <= q <= max_q");

  auto by_delta_mid = [](const ExponentWitness& a, const ExponentWitness& b) {
    return Real::cmp(a.delta.mid(), b.delta.mid()) < 0;
  };
  size_t best = 0;
  for (size_t i = 1; i < witnesses.size(); ++i)
    if (by_delta_mid(witnesses[best], witnesses[i])) best = i;

  // If the runner-up's enclosure overlaps the winner's, tighten both once.
  for (size_t i = 0; i < witnesses.size(); ++i) {
    if (i == best) continue;
    if (witnesses[i].delta.overlaps(witnesses[best].delta)) {
      witnesses[i] = exponent_witness(x, witnesses[i].convergent,
                                      2 * target_digits);
      witnesses[best] = exponent_witness(x, witnesses[best].convergent,
                                         2 * target_digits);
      if (by_delta_mid(witnesses[best], witnesses[i])) best = i;
    }
  }
  return {witnesses[best].delta, witnesses[best].convergent,
          std::move(witnesses)};
}

}  // namespace flinthills
