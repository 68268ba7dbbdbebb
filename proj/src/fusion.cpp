#include "ibelief/fusion.hpp"

#include <map>
#include <set>

#include <fmt/format.h>

#include "ibelief/error.hpp"

namespace ibelief {
namespace {

constexpr double kTotalConflict = 1e-12;

void require_same_frame(const Frame& a, const Frame& b) {
  if (!(a == b)) throw Error("bodies of evidence are defined on different frames");
}

// Every non-empty intersection reachable by picking one focal set per body.
std::set<FocalSet> structural_support(std::span<const IntervalBeliefStructure> bodies) {
  std::set<FocalSet> current;
  for (const auto& e : bodies.front().entries()) current.insert(e.set);
  for (std::size_t b = 1; b < bodies.size(); ++b) {
    std::set<FocalSet> next;
    for (FocalSet s : current) {
      for (const auto& e : bodies[b].entries()) {
        const FocalSet meet = s & e.set;
        if (!meet.empty()) next.insert(meet);
      }
    }
    current = std::move(next);
  }
  return current;
}

}  // namespace

DempsterResult dempster_combine(const Bpa& a, const Bpa& b) {
  require_same_frame(a.frame(), b.frame());
  std::map<FocalSet, double> acc;
  double conflict = 0.0;
  for (const auto& x : a.entries()) {
    for (const auto& y : b.entries()) {
      const FocalSet meet = x.set & y.set;
      const double product = x.mass * y.mass;
      if (meet.empty()) {
        conflict += product;
      } else {
        acc[meet] += product;
      }
    }
  }
  if (conflict >= 1.0 - kTotalConflict) {
    throw ConflictError(fmt::format("not combinable: total conflict (K = {:.12g})", conflict),
                        conflict);
  }
  const double scale = 1.0 - conflict;
  std::vector<Bpa::Entry> entries;
  for (const auto& [set, mass] : acc) entries.push_back({set, mass / scale});
  return {Bpa(a.frame(), std::move(entries)), {conflict, true}};
}

DempsterResult dempster_combine_n(std::span<const Bpa> bodies) {
  if (bodies.empty()) throw Error("no evidence to combine");
  DempsterResult acc{bodies.front(), {0.0, true}};
  double kept = 1.0;
  for (std::size_t i = 1; i < bodies.size(); ++i) {
    auto step = dempster_combine(acc.bpa, bodies[i]);
    kept *= 1.0 - step.diagnostics.conflict;
    acc.bpa = std::move(step.bpa);
  }
  acc.diagnostics.conflict = 1.0 - kept;
  return acc;
}

ProposedReport proposed_combine(std::span<const IntervalBeliefStructure> bodies,
                                Measure measure, const ProposedOptions& options) {
  if (bodies.size() < 2) throw Error("the proposed combination needs at least two bodies");
  if (!is_separable(measure)) {
    throw Error("unsupported objective: " + std::string(measure_name(measure)) +
                " is not separable");
  }
  for (const auto& body : bodies) require_same_frame(bodies.front().frame(), body.frame());

  std::vector<IntervalBeliefStructure> inputs;
  std::vector<bool> changed;
  for (std::size_t i = 0; i < bodies.size(); ++i) {
    if (!validate_ibs(bodies[i]) || !is_normalized(bodies[i])) {
      if (!options.normalize_inputs) {
        throw Error(fmt::format("body {} is not a normalized interval belief structure", i + 1));
      }
      inputs.push_back(normalize(bodies[i]));
      changed.push_back(true);
    } else {
      inputs.push_back(bodies[i]);
      changed.push_back(false);
    }
  }

  std::vector<EntropyBoundsSolution> bounds;
  std::vector<Bpa> maxima;
  std::vector<Bpa> minima;
  for (const auto& body : inputs) {
    bounds.push_back(entropy_bounds(body, measure, options.tie_rule));
    maxima.push_back(bounds.back().m_max);
    minima.push_back(bounds.back().m_min);
  }
  auto max_fold = dempster_combine_n(maxima);
  auto min_fold = dempster_combine_n(minima);

  const Frame& frame = inputs.front().frame();
  IntervalMassResult combined{frame, {}, std::nullopt, false};
  std::set<FocalSet> support = structural_support(inputs);
  for (const auto& e : max_fold.bpa.entries()) support.insert(e.set);
  for (const auto& e : min_fold.bpa.entries()) support.insert(e.set);
  for (FocalSet set : support) {
    const double a = max_fold.bpa.mass(set);
    const double b = min_fold.bpa.mass(set);
    combined.entries[set] = {std::min(a, b), std::max(a, b)};
  }

  IntervalMassResult result = combined;
  const auto as_ibs = combined.to_ibs();
  const bool renormalize = !validate_ibs(as_ibs) || !is_normalized(as_ibs);
  if (renormalize) {
    const auto fixed = normalize(as_ibs);
    result.entries.clear();
    for (const auto& e : fixed.entries()) result.entries[e.set] = e.mass;
  } else {
    combined.normalized = true;
  }
  result.normalized = true;

  return ProposedReport{measure,
                        std::move(inputs),
                        std::move(changed),
                        std::move(bounds),
                        std::move(max_fold),
                        std::move(min_fold),
                        std::move(combined),
                        std::move(result),
                        renormalize};
}

}  // namespace ibelief
