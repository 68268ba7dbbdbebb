#include "ibelief/bpa.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "ibelief/error.hpp"

namespace ibelief {

Bpa::Bpa(Frame frame, std::vector<Entry> entries) : frame_(std::move(frame)) {
  double total = 0.0;
  for (const auto& entry : entries) {
    if (entry.set.empty()) throw Error("the empty set cannot carry mass");
    if (!frame_.owns(entry.set)) throw Error("focal set lies outside the frame");
    if (!std::isfinite(entry.mass) || entry.mass < -kMassEpsilon ||
        entry.mass > 1.0 + kMassEpsilon) {
      throw Error(fmt::format("mass {} of {} is outside [0, 1]", entry.mass,
                              frame_.format(entry.set)));
    }
    total += entry.mass;
    if (entry.mass > kMassEpsilon) entries_.push_back({entry.set, std::min(entry.mass, 1.0)});
  }
  std::sort(entries_.begin(), entries_.end(),
            [](const Entry& a, const Entry& b) { return a.set < b.set; });
  auto dup = std::adjacent_find(entries_.begin(), entries_.end(),
                                [](const Entry& a, const Entry& b) { return a.set == b.set; });
  if (dup != entries_.end()) {
    throw Error(fmt::format("focal set {} appears twice", frame_.format(dup->set)));
  }
  if (std::abs(total - 1.0) > kSumTolerance) {
    throw Error(fmt::format("masses sum to {:.12g}, expected 1", total));
  }
}

Bpa Bpa::vacuous(Frame frame) {
  const FocalSet all = frame.full();
  return Bpa(std::move(frame), {{all, 1.0}});
}

double Bpa::mass(FocalSet set) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), set,
                             [](const Entry& e, FocalSet s) { return e.set < s; });
  return (it != entries_.end() && it->set == set) ? it->mass : 0.0;
}

double bel(const Bpa& bpa, FocalSet query) {
  double sum = 0.0;
  for (const auto& e : bpa.entries()) {
    if (e.set.is_subset_of(query)) sum += e.mass;
  }
  return sum;
}

double pl(const Bpa& bpa, FocalSet query) {
  double sum = 0.0;
  for (const auto& e : bpa.entries()) {
    if (e.set.intersects(query)) sum += e.mass;
  }
  return sum;
}

bool is_bayesian(const Bpa& bpa) {
  return std::all_of(bpa.entries().begin(), bpa.entries().end(),
                     [](const Bpa::Entry& e) { return e.set.is_singleton(); });
}

Bpa pignistic(const Bpa& bpa) {
  const Frame& frame = bpa.frame();
  std::vector<double> prob(frame.size(), 0.0);
  for (const auto& e : bpa.entries()) {
    const double share = e.mass / e.set.cardinality();
    for (std::size_t i = 0; i < frame.size(); ++i) {
      if (e.set.contains(i)) prob[i] += share;
    }
  }
  std::vector<Bpa::Entry> out;
  for (std::size_t i = 0; i < frame.size(); ++i) {
    out.push_back({FocalSet::singleton(i), prob[i]});
  }
  return Bpa(frame, std::move(out));
}

std::vector<double> plausibility_transform(const Bpa& bpa) {
  const Frame& frame = bpa.frame();
  std::vector<double> out(frame.size());
  double total = 0.0;
  for (std::size_t i = 0; i < frame.size(); ++i) {
    out[i] = pl(bpa, FocalSet::singleton(i));
    total += out[i];
  }
  for (auto& p : out) p /= total;
  return out;
}

}  // namespace ibelief
