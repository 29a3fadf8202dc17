#include "doctest.h"

#include <numeric>

#include "flinthills/cfrac.hpp"
#include "flinthills/pi.hpp"
#include "oracle_values.hpp"
#include "test_util.hpp"

using namespace flinthills;

TEST_CASE("certified expansion of pi matches the independent oracle") {
  CFExpansion e = expand(pi_ball(50), 10);
  REQUIRE(e.certified_count() == 10);
  CHECK(!e.precision_exhausted);
  for (int i = 0; i < 10; ++i)
    CHECK(e.quotients[static_cast<size_t>(i)] == oracle::kPiQuotients25[i]);

  CFExpansion full = expand(pi_ball(80), 25);
  REQUIRE(full.certified_count() == 25);
  for (int i = 0; i < 25; ++i)
    CHECK(full.quotients[static_cast<size_t>(i)] == oracle::kPiQuotients25[i]);
}

TEST_CASE("rational inputs terminate in canonical form") {
  CFExpansion e = expand(mpq_class(22, 7), 5);
  CHECK(e.terminated);
  CHECK(!e.precision_exhausted);
  REQUIRE(e.certified_count() == 2);
  CHECK(e.quotients[0] == 3);
  CHECK(e.quotients[1] == 7);

  CFExpansion half = expand(mpq_class(3, 2), 10);
  REQUIRE(half.certified_count() == 2);
  CHECK(half.quotients[1] == 2);  // [1; 2], never [1; 1, 1]

  CFExpansion whole = expand(mpq_class(2), 10);
  REQUIRE(whole.certified_count() == 1);
  CHECK(whole.quotients[0] == 2);
  CHECK(whole.terminated);

  CFExpansion r355 = expand(mpq_class(355, 113), 10);
  CHECK(r355.terminated);
  REQUIRE(r355.certified_count() == 3);
  CHECK(r355.quotients[2] == 16);
}

TEST_CASE("low-precision input exhausts early instead of guessing") {
  CFExpansion e = expand(pi_ball(5), 20);
  CHECK(e.precision_exhausted);
  CHECK(e.certified_count() < 20);
  CHECK(e.certified_count() >= 2);  // [3; 7] survives a 5-digit enclosure
}

TEST_CASE("convergents match the oracle list and its structure") {
  auto convs = convergents(expand(pi_ball(80), 21));
  REQUIRE(convs.size() == 21);
  for (size_t i = 0; i < 21; ++i) {
    CHECK(convs[i].p == mpz_class(oracle::kPiConvergentP[i]));
    CHECK(convs[i].q == mpz_class(oracle::kPiConvergentQ[i]));
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), convs[i].p.get_mpz_t(), convs[i].q.get_mpz_t());
    CHECK(g == 1);
    if (i >= 2) CHECK(convs[i].q > convs[i - 1].q);
  }
}

TEST_CASE("recurrence agrees with folding the quotient list") {
  CFExpansion e = expand(pi_ball(40), 15);
  auto convs = convergents(e);
  mpq_class folded(e.quotients.back());
  for (auto it = e.quotients.rbegin() + 1; it != e.quotients.rend(); ++it)
    folded = mpq_class(*it) + 1 / folded;
  folded.canonicalize();
  CHECK(folded.get_num() == convs.back().p);
  CHECK(folded.get_den() == convs.back().q);
}

TEST_CASE("consecutive convergents bracket the residual classically") {
  // 1/(q (q + q')) < |pi - p/q| < 1/(q q')
  auto convs = convergents(expand(pi_ball(120), 12));
  for (size_t i = 1; i + 1 < convs.size(); ++i) {
    ExponentWitness w = exponent_witness(pi_source(), convs[i], 20);
    mpq_class lower_bound(1, convs[i].q * (convs[i].q + convs[i + 1].q));
    mpq_class upper_bound(1, convs[i].q * convs[i + 1].q);
    CHECK(w.residual.lower() > Real::from_mpq(lower_bound, 256, MPFR_RNDU));
    CHECK(w.residual.upper() < Real::from_mpq(upper_bound, 256, MPFR_RNDD));
  }
}

TEST_CASE("exponent witnesses match the oracle") {
  auto convs = convergents(expand(pi_ball(60), 5));
  ExponentWitness w22 = exponent_witness(pi_source(), convs[1], 12);
  CHECK(testutil::close_to(w22.delta, oracle::kDelta22_7, 1e-8));
  ExponentWitness w333 = exponent_witness(pi_source(), convs[2], 12);
  CHECK(testutil::close_to(w333.delta, oracle::kDelta333_106, 1e-8));
  ExponentWitness w355 = exponent_witness(pi_source(), convs[3], 12);
  CHECK(testutil::close_to(w355.delta, oracle::kDelta355_113, 1e-8));
  CHECK(w355.delta.certified_digits() >= 6);

  // delta >= 2 for every convergent of an irrational (best approximations)
  for (size_t i = 1; i < 5; ++i) {
    ExponentWitness w = exponent_witness(pi_source(), convs[i], 10);
    CHECK(w.delta.lower() > Real::from_long(2, 64));
  }
}

TEST_CASE("q = 1 is rejected as a witness") {
  auto convs = convergents(expand(pi_ball(40), 2));
  CHECK(convs[0].q == 1);
  CHECK_THROWS_AS(exponent_witness(pi_source(), convs[0], 10),
                  std::invalid_argument);
}

TEST_CASE("witness scan finds the strongest small-denominator witness") {
  // Among q <= 120 the deltas are 3.4293 (22/7), 2.0144 (333/106), and
  // 3.2020 (355/113), so 22/7 wins.
  MuScanResult scan = mu_witness_scan(pi_source(), 120, 10);
  CHECK(scan.argmax.p == 22);
  CHECK(scan.argmax.q == 7);
  CHECK(scan.witnesses.size() == 3);
  CHECK(testutil::close_to(scan.max_delta, oracle::kDelta22_7, 1e-7));
}

TEST_CASE("witness scan up to q = 10^6") {
  MuScanResult scan = mu_witness_scan(pi_source(), 1000000, 10);
  CHECK(scan.argmax.p == oracle::kMaxDeltaQ1e6ArgP);
  CHECK(scan.argmax.q == oracle::kMaxDeltaQ1e6ArgQ);
  CHECK(testutil::close_to(scan.max_delta, oracle::kMaxDeltaQ1e6, 1e-7));
  CHECK(scan.max_delta.upper() < Real::from_long(4, 64));
}

TEST_CASE("witness scan with no admissible convergent") {
  CHECK_THROWS_AS(mu_witness_scan(pi_source(), 1, 10), std::invalid_argument);
}

TEST_CASE("convergent enumeration helpers") {
  auto by_count = convergents_of(pi_source(), 7);
  REQUIRE(by_count.size() == 7);
  CHECK(by_count[4].p == 103993);

  auto by_q = convergents_up_to_q(pi_source(), 1000);
  REQUIRE(by_q.size() == 4);
  CHECK(by_q.back().q == 113);
}
