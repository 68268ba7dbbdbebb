#pragma once

#include <span>
#include <utility>
#include <vector>

#include "ibelief/frame.hpp"

namespace ibelief {

// Masses below this are treated as arithmetic noise and dropped.
inline constexpr double kMassEpsilon = 1e-12;
// Allowed deviation of a mass total from 1.
inline constexpr double kSumTolerance = 1e-9;

// A deterministic basic probability assignment. Only strictly positive masses
// are stored, sorted by focal set; the empty set never carries mass.
class Bpa {
 public:
  struct Entry {
    FocalSet set;
    double mass;
  };

  // Throws when a set is empty or outside the frame, a set repeats, a mass is
  // outside [0, 1], or the total differs from 1 by more than kSumTolerance.
  Bpa(Frame frame, std::vector<Entry> entries);

  static Bpa vacuous(Frame frame);

  const Frame& frame() const { return frame_; }
  std::span<const Entry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  double mass(FocalSet set) const;

 private:
  Frame frame_;
  std::vector<Entry> entries_;
};

double bel(const Bpa& bpa, FocalSet query);
double pl(const Bpa& bpa, FocalSet query);

bool is_bayesian(const Bpa& bpa);

// BetP(x) = sum over focal sets A containing x of m(A) / |A|.
Bpa pignistic(const Bpa& bpa);

// Normalized singleton plausibilities, indexed by frame element.
std::vector<double> plausibility_transform(const Bpa& bpa);

}  // namespace ibelief
