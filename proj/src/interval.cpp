#include "ibelief/interval.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "ibelief/error.hpp"

namespace ibelief {
namespace {

constexpr double kBoundTolerance = 1e-9;

double sum_lo(std::span<const IntervalBeliefStructure::Entry> entries) {
  double s = 0.0;
  for (const auto& e : entries) s += e.mass.lo;
  return s;
}

double sum_hi(std::span<const IntervalBeliefStructure::Entry> entries) {
  double s = 0.0;
  for (const auto& e : entries) s += e.mass.hi;
  return s;
}

}  // namespace

IntervalBeliefStructure::IntervalBeliefStructure(Frame frame, std::vector<Entry> entries)
    : frame_(std::move(frame)), entries_(std::move(entries)) {
  if (entries_.empty()) throw Error("an interval belief structure needs at least one focal set");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    auto& e = entries_[i];
    if (e.set.empty()) throw Error("the empty set cannot be a focal set");
    if (!frame_.owns(e.set)) throw Error("focal set lies outside the frame");
    for (std::size_t j = 0; j < i; ++j) {
      if (entries_[j].set == e.set) {
        throw Error(fmt::format("focal set {} appears twice", frame_.format(e.set)));
      }
    }
    auto& [lo, hi] = e.mass;
    if (!std::isfinite(lo) || !std::isfinite(hi)) throw Error("mass bounds must be finite");
    if (lo < -kMassEpsilon || hi > 1.0 + kMassEpsilon) {
      throw Error(fmt::format("bounds [{}, {}] of {} leave [0, 1]", lo, hi, frame_.format(e.set)));
    }
    if (lo > hi + kMassEpsilon) {
      throw Error(fmt::format("lo > hi for {}: [{}, {}]", frame_.format(e.set), lo, hi));
    }
    lo = std::clamp(lo, 0.0, 1.0);
    hi = std::clamp(hi, lo, 1.0);
  }
}

IntervalBeliefStructure IntervalBeliefStructure::from_bpa(const Bpa& bpa) {
  std::vector<Entry> entries;
  for (const auto& e : bpa.entries()) entries.push_back({e.set, {e.mass, e.mass}});
  return IntervalBeliefStructure(bpa.frame(), std::move(entries));
}

std::vector<FocalSet> IntervalBeliefStructure::focal_sets() const {
  std::vector<FocalSet> out;
  for (const auto& e : entries_) out.push_back(e.set);
  return out;
}

std::vector<double> IntervalBeliefStructure::lower() const {
  std::vector<double> out;
  for (const auto& e : entries_) out.push_back(e.mass.lo);
  return out;
}

std::vector<double> IntervalBeliefStructure::upper() const {
  std::vector<double> out;
  for (const auto& e : entries_) out.push_back(e.mass.hi);
  return out;
}

bool IntervalBeliefStructure::degenerate() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Entry& e) { return e.mass.degenerate(); });
}

Bpa IntervalBeliefStructure::to_bpa() const {
  if (!degenerate()) throw Error("interval structure is not degenerate");
  std::vector<Bpa::Entry> out;
  for (const auto& e : entries_) out.push_back({e.set, e.mass.lo});
  return Bpa(frame_, std::move(out));
}

ValidityVerdict validate_ibs(const IntervalBeliefStructure& ibs) {
  for (const auto& e : ibs.entries()) {
    if (e.mass.lo < 0.0 || e.mass.hi > 1.0 || e.mass.lo > e.mass.hi) {
      return {false, fmt::format("bounds of {} are not ordered inside [0, 1]",
                                 ibs.frame().format(e.set))};
    }
  }
  const double lo = sum_lo(ibs.entries());
  const double hi = sum_hi(ibs.entries());
  if (lo > 1.0 + kBoundTolerance) {
    return {false, fmt::format("lower bounds sum to {:.6g} > 1", lo)};
  }
  if (hi < 1.0 - kBoundTolerance) {
    return {false, fmt::format("upper bounds sum to {:.6g} < 1", hi)};
  }
  return {};
}

bool is_normalized(const IntervalBeliefStructure& ibs) {
  if (auto verdict = validate_ibs(ibs); !verdict) {
    throw Error("invalid interval belief structure: " + verdict.reason);
  }
  const double lo = sum_lo(ibs.entries());
  const double hi = sum_hi(ibs.entries());
  for (const auto& e : ibs.entries()) {
    const double width = e.mass.width();
    if (hi - width < 1.0 - kBoundTolerance) return false;
    if (lo + width > 1.0 + kBoundTolerance) return false;
  }
  return true;
}

NormalizeOutcome normalize_traced(const IntervalBeliefStructure& ibs) {
  std::vector<IntervalBeliefStructure::Entry> entries(ibs.entries().begin(),
                                                      ibs.entries().end());
  NormalizeOutcome outcome{ibs};

  if (!validate_ibs(ibs)) {
    const double lo = sum_lo(entries);
    const double hi = sum_hi(entries);
    std::vector<IntervalBeliefStructure::Entry> rescaled = entries;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const auto [a, b] = entries[i].mass;
      const double lo_den = a + (hi - b);
      const double hi_den = b + (lo - a);
      if (lo_den <= 0.0 || hi_den <= 0.0) {
        throw Error("cannot rescale an interval structure whose bounds are all zero");
      }
      rescaled[i].mass = {a / lo_den, b / hi_den};
    }
    entries = std::move(rescaled);
    outcome.rescaled = true;
    outcome.result = IntervalBeliefStructure(ibs.frame(), entries);
  }

  if (!is_normalized(outcome.result)) {
    const double lo = sum_lo(entries);
    const double hi = sum_hi(entries);
    std::vector<IntervalBeliefStructure::Entry> tightened = entries;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const auto [a, b] = entries[i].mass;
      const double new_lo = std::max(a, 1.0 - (hi - b));
      const double new_hi = std::min(b, 1.0 - (lo - a));
      tightened[i].mass = {std::clamp(new_lo, 0.0, 1.0),
                           std::clamp(std::max(new_hi, new_lo), 0.0, 1.0)};
    }
    outcome.tightened = true;
    outcome.result = IntervalBeliefStructure(ibs.frame(), std::move(tightened));
  }
  return outcome;
}

IntervalBeliefStructure normalize(const IntervalBeliefStructure& ibs) {
  return normalize_traced(ibs).result;
}

Interval IntervalMassResult::at(FocalSet set) const {
  auto it = entries.find(set);
  return it == entries.end() ? Interval{} : it->second;
}

void IntervalMassResult::refresh_normalized() {
  if (empty_mass || entries.empty()) {
    normalized = false;
    return;
  }
  const auto ibs = to_ibs();
  normalized = validate_ibs(ibs) && is_normalized(ibs);
}

IntervalBeliefStructure IntervalMassResult::to_ibs() const {
  std::vector<IntervalBeliefStructure::Entry> out;
  for (const auto& [set, interval] : entries) out.push_back({set, interval});
  return IntervalBeliefStructure(frame, std::move(out));
}

}  // namespace ibelief
