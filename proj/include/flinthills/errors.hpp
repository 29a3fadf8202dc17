#pragma once

#include <atomic>
#include <stdexcept>
#include <string>

namespace flinthills {

/// Thrown when an operation would need more decimal digits of working
/// precision than the configured cap allows.
class PrecisionCapError : public std::runtime_error {
 public:
  PrecisionCapError(long requested_digits, long cap_digits)
      : std::runtime_error("precision cap exceeded: need " +
                           std::to_string(requested_digits) +
                           " decimal digits, cap is " +
                           std::to_string(cap_digits)),
        requested(requested_digits),
        cap(cap_digits) {}

  long requested;
  long cap;
};

/// Process-wide cap on working precision, in decimal digits. Default 100000.
long precision_cap();
void set_precision_cap(long digits);

/// Throws PrecisionCapError if `digits` exceeds the current cap.
void check_precision_cap(long digits);

}  // namespace flinthills
