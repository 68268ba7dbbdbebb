#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ibelief/bpa.hpp"
#include "ibelief/frame.hpp"

namespace ibelief {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double width() const { return hi - lo; }
  bool degenerate() const { return hi - lo <= kMassEpsilon; }
  bool contains(const Interval& inner, double tol = 1e-9) const {
    return lo <= inner.lo + tol && inner.hi <= hi + tol;
  }
  friend bool operator==(const Interval&, const Interval&) = default;
};

// Focal sets with [lo, hi] mass intervals. Entries keep their input order,
// which is also the coordinate order used by the optimizers.
class IntervalBeliefStructure {
 public:
  struct Entry {
    FocalSet set;
    Interval mass;
  };

  // Structural checks only: non-empty distinct sets inside the frame and
  // 0 <= lo <= hi <= 1 per entry. Whether the bounds admit a BPA at all is
  // the business of validate_ibs().
  IntervalBeliefStructure(Frame frame, std::vector<Entry> entries);

  // Lifts a BPA to degenerate intervals.
  static IntervalBeliefStructure from_bpa(const Bpa& bpa);

  const Frame& frame() const { return frame_; }
  std::span<const Entry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  std::vector<FocalSet> focal_sets() const;
  std::vector<double> lower() const;
  std::vector<double> upper() const;

  bool degenerate() const;
  // Point masses as a BPA; throws unless every interval is degenerate.
  Bpa to_bpa() const;

 private:
  Frame frame_;
  std::vector<Entry> entries_;
};

struct ValidityVerdict {
  bool valid = true;
  std::string reason;

  explicit operator bool() const { return valid; }
};

// Sum of lower bounds <= 1 <= sum of upper bounds, with ordered per-entry
// bounds inside [0, 1].
ValidityVerdict validate_ibs(const IntervalBeliefStructure& ibs);

// Every bound attainable by some BPA: for each k,
//   sum(hi) - width_k >= 1  and  sum(lo) + width_k <= 1.
// Throws on an invalid structure.
bool is_normalized(const IntervalBeliefStructure& ibs);

struct NormalizeOutcome {
  IntervalBeliefStructure result;
  bool rescaled = false;   // proportional rescaling applied
  bool tightened = false;  // bound tightening applied
};

// Proportional rescaling when the bound sums do not bracket 1, then bound
// tightening when some bound is unattainable. Normalized input is returned
// unchanged.
NormalizeOutcome normalize_traced(const IntervalBeliefStructure& ibs);
IntervalBeliefStructure normalize(const IntervalBeliefStructure& ibs);

// Per-focal-set intervals produced by a combination method.
struct IntervalMassResult {
  Frame frame;
  std::map<FocalSet, Interval> entries;
  // Mass that fell on the empty set; only set before normalization.
  std::optional<Interval> empty_mass;
  // The entries form a normalized interval belief structure.
  bool normalized = false;

  Interval at(FocalSet set) const;
  // Recomputes `normalized` from the entries (false whenever empty_mass is set).
  void refresh_normalized();
  IntervalBeliefStructure to_ibs() const;

  friend bool operator==(const IntervalMassResult&, const IntervalMassResult&) = default;
};

}  // namespace ibelief
