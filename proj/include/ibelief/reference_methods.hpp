#pragma once

#include <span>
#include <vector>

#include "ibelief/interval.hpp"

namespace ibelief {

// ---------------------------------------------------------------------------
// Lee and Zhu: generalized interval sum and product with a free exponent w.

struct LeeZhuParams {
  double w = 1.0;  // must be in (0, inf)
};

// u(a, b) = min(1, (a^w + b^w)^(1/w))
double leezhu_sum(double a, double b, double w);
// i(a, b) = 1 - min(1, ((1-a)^w + (1-b)^w)^(1/w))
double leezhu_product(double a, double b, double w);

// Works on raw (possibly non-normalized) inputs and leaves the result
// non-normalized. Throws for w <= 0.
IntervalMassResult leezhu_combine(const IntervalBeliefStructure& a,
                                  const IntervalBeliefStructure& b, LeeZhuParams params);

// ---------------------------------------------------------------------------
// Denoeux: bounds of the unnormalized conjunctive mass of every target,
// including the empty set, followed by a separate normalization step.

// All inputs must be normalized. The bodies are combined in one step; the
// objective is multilinear, so its extrema sit on tuples of polytope vertices.
IntervalMassResult denoeux_combine(std::span<const IntervalBeliefStructure> bodies);
IntervalMassResult denoeux_combine(const IntervalBeliefStructure& a,
                                   const IntervalBeliefStructure& b);

// Closed-form bounds of m(A) / (1 - m(empty)) over the raw boxes. Throws when
// a denominator is not positive.
IntervalMassResult denoeux_normalize(const IntervalMassResult& raw);

// ---------------------------------------------------------------------------
// Wang et al.: bounds of the normalized Dempster ratio over the product of
// the input polytopes, computed in one step for any number of bodies.
IntervalMassResult wang_combine(std::span<const IntervalBeliefStructure> bodies);

// ---------------------------------------------------------------------------
// Song et al.: pignistic transform to singleton intervals, intuitionistic
// fuzzy encoding, and combination of the encodings.

struct IfsElement {
  FocalSet target;
  double mu = 0.0;     // membership
  double gamma = 0.0;  // non-membership

  double pi() const { return 1.0 - mu - gamma; }  // hesitancy

  // Throws unless mu, gamma >= 0 and mu + gamma <= 1.
  static IfsElement make(FocalSet target, double mu, double gamma);
};

// Dempster's rule on the frame {yes, no} induced by each element. Throws on
// different targets or when 1 - mu1*gamma2 - mu2*gamma1 <= 0.
IfsElement ifs_combine(const IfsElement& a, const IfsElement& b);

// Singleton intervals [sum lo(A)/|A|, sum hi(A)/|A|] over focal sets A
// containing each element, for every element of the frame.
IntervalBeliefStructure interval_pignistic(const IntervalBeliefStructure& ibs);

struct SongReport {
  std::vector<IntervalBeliefStructure> normalized_inputs;
  std::vector<IntervalBeliefStructure> pignistic;  // normalized singleton structures
  std::vector<std::vector<IfsElement>> encodings;  // per body, per frame element
  std::vector<IfsElement> combined;                // per frame element
  IntervalMassResult result;
};

SongReport song_combine(std::span<const IntervalBeliefStructure> bodies);

}  // namespace ibelief
