#include "flinthills/criteria.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace flinthills {

namespace {

std::string fmt(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

std::string bracket(const MuBounds& b) {
  return "[" + fmt(b.lower) + ", " + fmt(b.upper) + "]";
}

}  // namespace

void validate(const MuBounds& bounds) {
  if (!(bounds.lower >= 2) || !(bounds.lower <= bounds.upper))
    throw std::invalid_argument("mu bounds require 2 <= lower <= upper");
}

const char* to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::kSequenceToZero: return "SequenceToZero";
    case VerdictKind::kSequenceDiverges: return "SequenceDiverges";
    case VerdictKind::kSeriesConverges: return "SeriesConverges";
    case VerdictKind::kUnknown: return "Unknown";
  }
  return "Unknown";
}

Verdict classify_sequence(const SeriesParams& params, const MuBounds& bounds) {
  validate(params);
  validate(bounds);
  double threshold = 1 + params.u / params.v;
  Verdict v;
  v.threshold = threshold;
  if (bounds.upper < threshold) {
    v.kind = VerdictKind::kSequenceToZero;
    v.theorem = "Theorem 1, statement 1";
    v.inequality = "mu(pi) <= " + fmt(bounds.upper) + " < 1 + u/v = " +
                   fmt(threshold);
  } else if (bounds.lower > threshold) {
    v.kind = VerdictKind::kSequenceDiverges;
    v.theorem = "Theorem 1, statement 2";
    v.inequality = "mu(pi) >= " + fmt(bounds.lower) + " > 1 + u/v = " +
                   fmt(threshold);
  } else {
    v.kind = VerdictKind::kUnknown;
    v.theorem = "Theorem 1";
    v.inequality = "1 + u/v = " + fmt(threshold) +
                   " lies inside the admissible bounds " + bracket(bounds);
    v.unknown_detail = "sequence -> 0 if mu(pi) < " + fmt(threshold) +
                       "; sequence diverges if mu(pi) > " + fmt(threshold) +
                       "; the theorem is silent at mu(pi) = " + fmt(threshold);
  }
  return v;
}

Verdict classify_series(const SeriesParams& params, const MuBounds& bounds) {
  validate(params);
  validate(bounds);
  double threshold = 1 + (params.u - 1) / params.v;
  if (bounds.upper < threshold) {
    Verdict v;
    v.kind = VerdictKind::kSeriesConverges;
    v.threshold = threshold;
    v.theorem = "Theorem 2";
    v.inequality = "mu(pi) <= " + fmt(bounds.upper) + " < 1 + (u-1)/v = " +
                   fmt(threshold);
    return v;
  }
  Verdict seq = classify_sequence(params, bounds);
  if (seq.kind == VerdictKind::kSequenceDiverges) {
    seq.inequality += "; terms that do not tend to zero cannot sum";
    return seq;
  }
  Verdict v;
  v.kind = VerdictKind::kUnknown;
  v.threshold = threshold;
  v.theorem = "Theorem 2";
  v.inequality = "1 + (u-1)/v = " + fmt(threshold) +
                 " does not exceed the admissible upper bound " +
                 fmt(bounds.upper);
  v.unknown_detail = "series converges if mu(pi) < " + fmt(threshold) +
                     "; terms diverge (and the series with them) if mu(pi) > " +
                     fmt(1 + params.u / params.v) + "; current bounds " +
                     bracket(bounds) + " decide neither";
  return v;
}

ImpliedBound implied_mu_bound(const SeriesParams& params, Observation obs,
                              const MuBounds& current) {
  validate(params);
  validate(current);
  ImpliedBound out;
  switch (obs) {
    case Observation::kSequenceConverges:
      out.direction = ImpliedBound::Direction::kUpperBound;
      out.value = 1 + params.u / params.v;
      out.trivial = out.value >= current.upper;
      out.statement = "Corollary 1, statement 1: mu(pi) <= " + fmt(out.value);
      break;
    case Observation::kSequenceDiverges:
      out.direction = ImpliedBound::Direction::kLowerBound;
      out.value = 1 + params.u / params.v;
      out.trivial = out.value <= current.lower;
      out.statement = "Corollary 1, statement 2: mu(pi) >= " + fmt(out.value);
      break;
    case Observation::kSeriesDiverges:
      out.direction = ImpliedBound::Direction::kLowerBound;
      out.value = 1 + (params.u - 1) / params.v;
      out.trivial = out.value <= current.lower;
      out.statement = "Corollary 3: mu(pi) >= " + fmt(out.value);
      break;
  }
  if (out.trivial) out.statement += " (trivial: does not beat known bounds)";
  return out;
}

const std::vector<BoundHistoryEntry>& bound_history() {
  static const std::vector<BoundHistoryEntry> table = {
      {1953, "Mahler", 30.0, ""},
      {1974, "Mignotte", 20.0, ""},
      {1982, "Chudnovsky", 19.8899944, ""},
      {1993, "Hata", 8.016045, "series of papers, 1990-1993"},
      {2008, "Salikhov", 7.6063,
       "best known; the library default upper bound rounds this up to 7.6064"},
  };
  return table;
}

}  // namespace flinthills
