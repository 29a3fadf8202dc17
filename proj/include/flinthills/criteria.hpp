#pragma once

#include <string>
#include <vector>

#include "flinthills/series.hpp"

namespace flinthills {

/// Current interval of admissible values for the irrationality measure of
/// pi. Defaults: mu >= 2 (transcendence), mu <= 7.6064 (a deliberate upward
/// rounding of Salikhov's 7.6063..., so the stored bound never understates
/// the published one).
struct MuBounds {
  double lower = 2.0;
  double upper = 7.6064;
  std::string lower_source = "transcendence of pi";
  std::string upper_source = "Salikhov 2008 (7.6063..., stored rounded up)";
};

void validate(const MuBounds& bounds);

enum class VerdictKind {
  kSequenceToZero,
  kSequenceDiverges,
  kSeriesConverges,
  kUnknown,
};

const char* to_string(VerdictKind kind);

/// Classification outcome with its instantiated justification. For Unknown,
/// `unknown_detail` spells out which outcome each side of the threshold
/// would give; `threshold` is the decisive value of mu in either case.
struct Verdict {
  VerdictKind kind = VerdictKind::kUnknown;
  std::string theorem;
  std::string inequality;
  double threshold = 0;
  std::string unknown_detail;
};

/// Theorem 1: the sequence 1/(n^u |sin n|^v) tends to zero when
/// mu(pi) < 1 + u/v and diverges when mu(pi) > 1 + u/v. Strict comparisons;
/// equality with the threshold stays Unknown.
Verdict classify_sequence(const SeriesParams& params,
                          const MuBounds& bounds = {});

/// Theorem 2: the series converges when mu(pi) < 1 + (u-1)/v. Otherwise a
/// certain sequence divergence is reported (the terms cannot sum), else
/// Unknown.
Verdict classify_series(const SeriesParams& params,
                        const MuBounds& bounds = {});

enum class Observation {
  kSequenceConverges,
  kSequenceDiverges,
  kSeriesDiverges,
};

/// What a hypothetical observation would say about mu(pi) (Corollaries 1
/// and 3). Flagged trivial when the implication does not beat the bounds
/// already in force.
struct ImpliedBound {
  enum class Direction { kUpperBound, kLowerBound };
  Direction direction = Direction::kUpperBound;
  double value = 0;
  bool trivial = false;
  std::string statement;
};

ImpliedBound implied_mu_bound(const SeriesParams& params, Observation obs,
                              const MuBounds& current = {});

struct BoundHistoryEntry {
  int year;
  std::string author;
  double bound;
  std::string note;
};

/// Published upper bounds for mu(pi), oldest first, nonincreasing.
const std::vector<BoundHistoryEntry>& bound_history();

}  // namespace flinthills
