#pragma once

#include "ibelief/bpa.hpp"
#include "ibelief/entropy.hpp"
#include "ibelief/interval.hpp"
#include "ibelief/polytope.hpp"

namespace ibelief {

// How to pick a minimum-entropy BPA when several polytope vertices attain the
// minimum (within 1e-10).
enum class MinTieRule {
  // Fill mass greedily by smallest marginal entropy, sharing equally between
  // coordinates with equal marginal entropy, and return the centroid of the
  // tied vertices that agree with that fill on its saturated coordinates.
  // Falls back to lexicographically_first when no tied vertex agrees.
  equal_split,
  lexicographically_first,
};

// Mass vectors are aligned with the entry order of the interval structure.
struct ExtremeMasses {
  MassVector masses;
  double entropy = 0.0;
  bool tie = false;  // several optimal vertices were found (min only)
};

// Water-filling solution of the maximization for measures with a log term:
// masses[i] = clamp(weight_scale[i] * level, lo[i], hi[i]).
struct WaterFilling {
  MassVector masses;
  std::vector<double> weight_scale;  // 2^k per coordinate
  double level = 0.0;
};

// Preconditions for the four functions below: the structure is normalized
// and the measure separable; Error is thrown otherwise.
WaterFilling water_fill(const IntervalBeliefStructure& ibs, Measure measure);
ExtremeMasses max_entropy_masses(const IntervalBeliefStructure& ibs, Measure measure);
ExtremeMasses min_entropy_masses(const IntervalBeliefStructure& ibs, Measure measure,
                                 MinTieRule rule = MinTieRule::equal_split);

Bpa max_entropy_bpa(const IntervalBeliefStructure& ibs, Measure measure);
Bpa min_entropy_bpa(const IntervalBeliefStructure& ibs, Measure measure,
                    MinTieRule rule = MinTieRule::equal_split);

struct EntropyBoundsSolution {
  Measure measure;
  MassVector max_masses;
  MassVector min_masses;
  Bpa m_max;
  Bpa m_min;
  double h_max = 0.0;
  double h_min = 0.0;
  bool min_tie = false;
};

EntropyBoundsSolution entropy_bounds(const IntervalBeliefStructure& ibs, Measure measure,
                                     MinTieRule rule = MinTieRule::equal_split);

// Packs a mass vector aligned with ibs entries into a BPA.
Bpa to_bpa(const IntervalBeliefStructure& ibs, const MassVector& masses);

}  // namespace ibelief
