#pragma once

#include <span>
#include <vector>

#include "ibelief/bpa.hpp"
#include "ibelief/entropy.hpp"
#include "ibelief/entropy_optimize.hpp"
#include "ibelief/interval.hpp"

namespace ibelief {

struct DempsterDiagnostics {
  double conflict = 0.0;  // K: product mass landing on the empty set
  bool combinable = true;
};

struct DempsterResult {
  Bpa bpa;
  DempsterDiagnostics diagnostics;
};

// Dempster's rule. Throws ConflictError when K >= 1 - 1e-12 and Error when
// the frames differ.
DempsterResult dempster_combine(const Bpa& a, const Bpa& b);

// Left fold of dempster_combine. The reported conflict is that of the
// one-step combination, 1 - prod(1 - K_i).
DempsterResult dempster_combine_n(std::span<const Bpa> bodies);

struct ProposedOptions {
  // Normalize inputs instead of rejecting non-normalized ones.
  bool normalize_inputs = false;
  MinTieRule tie_rule = MinTieRule::equal_split;
};

struct ProposedReport {
  Measure measure;
  std::vector<IntervalBeliefStructure> inputs;  // after optional normalization
  std::vector<bool> input_normalized;           // true where normalization changed a body
  std::vector<EntropyBoundsSolution> bounds;    // per body
  DempsterResult max_fold;
  DempsterResult min_fold;
  IntervalMassResult combined;  // before any output normalization
  IntervalMassResult result;
  bool output_renormalized = false;
};

// Entropy-optimality combination: each body is replaced by its maximum- and
// minimum-entropy BPAs, the two families are folded with Dempster's rule, and
// each focal set receives [min, max] of the two folded masses. Output that is
// not normalized gets normalized and flagged.
ProposedReport proposed_combine(std::span<const IntervalBeliefStructure> bodies,
                                Measure measure, const ProposedOptions& options = {});

}  // namespace ibelief
