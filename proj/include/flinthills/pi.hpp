#pragma once

#include <mutex>
#include <string>

#include "flinthills/ball.hpp"

namespace flinthills {

/// Monotonically growing store of certified decimal digits of pi. Requests
/// slice (and round) prefixes of the stored expansion, so a given request is
/// deterministic and independent of what has been cached so far. Growth is
/// certified by agreement of the truncated renderings of directed lower and
/// upper enclosures of pi. Safe for concurrent use.
class PiCache {
 public:
  PiCache() = default;

  /// Pi rounded to `significant` decimal digits, e.g. "3.141592654" for 10.
  std::string decimal(long significant);

  /// The rounded digits parsed back at a matching binary precision.
  Real real(long significant);

  /// Enclosure: midpoint real(significant), radius 6 * 10^-significant.
  Ball ball(long significant);

  /// Digits currently held (testing / diagnostics).
  long stored_digits() const;

 private:
  void ensure(long digits);

  mutable std::mutex mu_;
  std::string store_;  // truncated digits of pi, no decimal point ("31415...")
};

/// Process-wide cache used by the convenience functions below.
PiCache& pi_cache();

std::string pi_digits(long significant);
Real pi_to(long significant);
Ball pi_ball(long significant);

}  // namespace flinthills
