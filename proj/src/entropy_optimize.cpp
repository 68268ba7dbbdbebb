#include "ibelief/entropy_optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ibelief/error.hpp"

namespace ibelief {
namespace {

constexpr double kTieTolerance = 1e-10;
constexpr double kFillEpsilon = 1e-15;

struct Problem {
  MassVector lo;
  MassVector hi;
  std::vector<SeparableTerm> profile;
  bool linear = false;
};

Problem make_problem(const IntervalBeliefStructure& ibs, Measure measure) {
  if (!is_separable(measure)) {
    throw Error("unsupported objective: " + std::string(measure_name(measure)) +
                " is not separable");
  }
  if (!is_normalized(ibs)) {
    throw Error("entropy optimization needs a normalized interval belief structure");
  }
  const auto sets = ibs.focal_sets();
  Problem p{ibs.lower(), ibs.upper(), separable_profile(measure, sets, ibs.frame())};
  p.linear = std::none_of(p.profile.begin(), p.profile.end(),
                          [](const SeparableTerm& t) { return t.log_term; });
  return p;
}

// Linear objective: visit weight groups in order, spreading what is left of
// the unit mass equally over the unsaturated members of each group.
MassVector greedy_linear(const Problem& p, bool descending) {
  const std::size_t n = p.lo.size();
  MassVector m = p.lo;
  double residual = 1.0 - std::accumulate(m.begin(), m.end(), 0.0);

  std::vector<double> weights;
  for (const auto& t : p.profile) weights.push_back(t.weight);
  std::sort(weights.begin(), weights.end());
  weights.erase(std::unique(weights.begin(), weights.end()), weights.end());
  if (descending) std::reverse(weights.begin(), weights.end());

  for (double w : weights) {
    std::vector<std::size_t> group;
    for (std::size_t i = 0; i < n; ++i) {
      if (p.profile[i].weight == w) group.push_back(i);
    }
    while (residual > kFillEpsilon) {
      std::vector<std::size_t> open;
      for (auto i : group) {
        if (m[i] < p.hi[i] - kFillEpsilon) open.push_back(i);
      }
      if (open.empty()) break;
      const double share = residual / static_cast<double>(open.size());
      for (auto i : open) {
        const double add = std::min(share, p.hi[i] - m[i]);
        m[i] += add;
        residual -= add;
      }
    }
  }
  return m;
}

double clamped_total(const Problem& p, const std::vector<double>& scale, double level) {
  double total = 0.0;
  for (std::size_t i = 0; i < scale.size(); ++i) {
    total += std::clamp(scale[i] * level, p.lo[i], p.hi[i]);
  }
  return total;
}

WaterFilling fill_water(const Problem& p) {
  WaterFilling out;
  for (const auto& t : p.profile) out.weight_scale.push_back(std::exp2(t.weight));
  // sum clamp(w * c) is nondecreasing in c.
  double below = 1e-12;
  double above = 1e6;
  double level = above;
  for (int iter = 0; iter < 200; ++iter) {
    level = 0.5 * (below + above);
    const double total = clamped_total(p, out.weight_scale, level);
    if (std::abs(total - 1.0) < 1e-12) break;
    (total < 1.0 ? below : above) = level;
  }
  out.level = level;
  for (std::size_t i = 0; i < p.lo.size(); ++i) {
    out.masses.push_back(std::clamp(out.weight_scale[i] * level, p.lo[i], p.hi[i]));
  }
  return out;
}

// Greedy fill by smallest marginal entropy; coordinates whose slopes tie are
// raised together.
MassVector marginal_fill(const Problem& p) {
  const std::size_t n = p.lo.size();
  MassVector m = p.lo;
  double residual = 1.0 - std::accumulate(m.begin(), m.end(), 0.0);
  while (residual > kFillEpsilon) {
    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] < p.hi[i] - kFillEpsilon) open.push_back(i);
    }
    if (open.empty()) break;
    double best = INFINITY;
    for (auto i : open) best = std::min(best, p.profile[i].slope(m[i]));
    std::vector<std::size_t> group;
    for (auto i : open) {
      const double s = p.profile[i].slope(m[i]);
      if (s == best || std::abs(s - best) <= 1e-9) group.push_back(i);
    }
    double share = residual / static_cast<double>(group.size());
    for (auto i : group) share = std::min(share, p.hi[i] - m[i]);
    for (auto i : group) {
      m[i] += share;
      residual -= share;
    }
  }
  return m;
}

MassVector merge_ties(const Problem& p, const std::vector<const MassVector*>& tied) {
  const MassVector fill = marginal_fill(p);
  std::vector<std::size_t> pinned;
  for (std::size_t i = 0; i < fill.size(); ++i) {
    if (std::abs(fill[i] - p.lo[i]) <= 1e-12 || std::abs(fill[i] - p.hi[i]) <= 1e-12) {
      pinned.push_back(i);
    }
  }
  MassVector centroid(fill.size(), 0.0);
  std::size_t count = 0;
  for (const MassVector* v : tied) {
    const bool agrees = std::all_of(pinned.begin(), pinned.end(), [&](std::size_t i) {
      return std::abs((*v)[i] - fill[i]) <= 1e-9;
    });
    if (!agrees) continue;
    for (std::size_t i = 0; i < centroid.size(); ++i) centroid[i] += (*v)[i];
    ++count;
  }
  if (count == 0) return *tied.front();
  for (auto& x : centroid) x /= static_cast<double>(count);
  return centroid;
}

}  // namespace

Bpa to_bpa(const IntervalBeliefStructure& ibs, const MassVector& masses) {
  std::vector<Bpa::Entry> entries;
  const auto sets = ibs.focal_sets();
  for (std::size_t i = 0; i < sets.size(); ++i) entries.push_back({sets[i], masses[i]});
  return Bpa(ibs.frame(), std::move(entries));
}

WaterFilling water_fill(const IntervalBeliefStructure& ibs, Measure measure) {
  const Problem p = make_problem(ibs, measure);
  if (p.linear) throw Error("water-filling needs a measure with a log term");
  return fill_water(p);
}

ExtremeMasses max_entropy_masses(const IntervalBeliefStructure& ibs, Measure measure) {
  const Problem p = make_problem(ibs, measure);
  ExtremeMasses out;
  out.masses = p.linear ? greedy_linear(p, /*descending=*/true) : fill_water(p).masses;
  out.entropy = separable_entropy(p.profile, out.masses);
  return out;
}

ExtremeMasses min_entropy_masses(const IntervalBeliefStructure& ibs, Measure measure,
                                 MinTieRule rule) {
  const Problem p = make_problem(ibs, measure);
  ExtremeMasses out;
  if (p.linear) {
    out.masses = greedy_linear(p, /*descending=*/false);
    out.entropy = separable_entropy(p.profile, out.masses);
    return out;
  }

  // Concave objective: the minimum sits on a vertex.
  const auto vertices = enumerate_vertices(BoxSimplexPolytope(p.lo, p.hi));
  std::vector<double> values;
  values.reserve(vertices.size());
  for (const auto& v : vertices) values.push_back(separable_entropy(p.profile, v));
  const double best = *std::min_element(values.begin(), values.end());

  std::vector<const MassVector*> tied;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (values[i] <= best + kTieTolerance) tied.push_back(&vertices[i]);
  }
  out.tie = tied.size() > 1;
  if (!out.tie || rule == MinTieRule::lexicographically_first) {
    out.masses = *tied.front();
  } else {
    out.masses = merge_ties(p, tied);
  }
  out.entropy = separable_entropy(p.profile, out.masses);
  return out;
}

Bpa max_entropy_bpa(const IntervalBeliefStructure& ibs, Measure measure) {
  return to_bpa(ibs, max_entropy_masses(ibs, measure).masses);
}

Bpa min_entropy_bpa(const IntervalBeliefStructure& ibs, Measure measure, MinTieRule rule) {
  return to_bpa(ibs, min_entropy_masses(ibs, measure, rule).masses);
}

EntropyBoundsSolution entropy_bounds(const IntervalBeliefStructure& ibs, Measure measure,
                                     MinTieRule rule) {
  auto hi = max_entropy_masses(ibs, measure);
  auto lo = min_entropy_masses(ibs, measure, rule);
  Bpa m_max = to_bpa(ibs, hi.masses);
  Bpa m_min = to_bpa(ibs, lo.masses);
  return EntropyBoundsSolution{measure,
                               std::move(hi.masses),
                               std::move(lo.masses),
                               std::move(m_max),
                               std::move(m_min),
                               hi.entropy,
                               lo.entropy,
                               lo.tie};
}

}  // namespace ibelief
