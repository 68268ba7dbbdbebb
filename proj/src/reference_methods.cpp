#include "ibelief/reference_methods.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <set>

#include <fmt/format.h>

#include "ibelief/error.hpp"
#include "ibelief/polytope.hpp"

namespace ibelief {
namespace {

void require_same_frame(const IntervalBeliefStructure& a, const IntervalBeliefStructure& b) {
  if (!(a.frame() == b.frame())) throw Error("bodies of evidence are defined on different frames");
}

void require_normalized(const IntervalBeliefStructure& ibs, std::string_view method) {
  if (!validate_ibs(ibs) || !is_normalized(ibs)) {
    throw Error(fmt::format("{} needs normalized interval belief structures", method));
  }
}

// (x^w + y^w)^(1/w) for x, y >= 0, evaluated through the larger operand so
// large exponents neither overflow nor underflow.
double power_norm(double x, double y, double w) {
  const double big = std::max(x, y);
  const double small = std::min(x, y);
  if (big <= 0.0) return 0.0;
  const double ratio_pow = small > 0.0 ? std::exp(w * std::log(small / big)) : 0.0;
  return big * std::exp(std::log1p(ratio_pow) / w);
}

struct Bounds {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void add(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
};

// Unnormalized conjunctive masses of one tuple of mass vectors. Key 0 is the
// empty set.
void conjunctive_masses(std::span<const IntervalBeliefStructure> bodies,
                        std::span<const MassVector* const> points,
                        std::map<FocalSet, double>& out) {
  out.clear();
  out[bodies.front().frame().full()] = 1.0;
  std::map<FocalSet, double> next;
  for (std::size_t b = 0; b < bodies.size(); ++b) {
    next.clear();
    const auto entries = bodies[b].entries();
    const MassVector& m = *points[b];
    for (const auto& [set, mass] : out) {
      if (mass == 0.0) continue;
      for (std::size_t j = 0; j < entries.size(); ++j) {
        if (m[j] == 0.0) continue;
        next[set & entries[j].set] += mass * m[j];
      }
    }
    std::swap(out, next);
  }
}

std::set<FocalSet> all_targets(std::span<const IntervalBeliefStructure> bodies) {
  std::set<FocalSet> current;
  for (const auto& e : bodies.front().entries()) current.insert(e.set);
  for (std::size_t b = 1; b < bodies.size(); ++b) {
    std::set<FocalSet> next;
    for (FocalSet s : current) {
      for (const auto& e : bodies[b].entries()) next.insert(s & e.set);
    }
    current = std::move(next);
  }
  return current;
}

// Calls visit(points) for every tuple in the product of the vertex sets.
template <typename Visit>
void for_each_vertex_tuple(const std::vector<std::vector<MassVector>>& vertex_sets,
                           Visit&& visit) {
  std::vector<std::size_t> odometer(vertex_sets.size(), 0);
  std::vector<const MassVector*> points(vertex_sets.size());
  while (true) {
    for (std::size_t b = 0; b < vertex_sets.size(); ++b) points[b] = &vertex_sets[b][odometer[b]];
    visit(std::span<const MassVector* const>(points));
    std::size_t b = 0;
    while (b < odometer.size() && ++odometer[b] == vertex_sets[b].size()) odometer[b++] = 0;
    if (b == odometer.size()) break;
  }
}

}  // namespace

double leezhu_sum(double a, double b, double w) {
  return std::min(1.0, power_norm(a, b, w));
}

double leezhu_product(double a, double b, double w) {
  return 1.0 - std::min(1.0, power_norm(1.0 - a, 1.0 - b, w));
}

IntervalMassResult leezhu_combine(const IntervalBeliefStructure& a,
                                  const IntervalBeliefStructure& b, LeeZhuParams params) {
  if (!(params.w > 0.0) || !std::isfinite(params.w)) {
    throw Error(fmt::format("Lee-Zhu exponent w must lie in (0, inf), got {}", params.w));
  }
  require_same_frame(a, b);
  const double w = params.w;
  IntervalMassResult out{a.frame(), {}, std::nullopt, false};
  for (const auto& x : a.entries()) {
    for (const auto& y : b.entries()) {
      const FocalSet meet = x.set & y.set;
      if (meet.empty()) continue;
      const Interval product{leezhu_product(x.mass.lo, y.mass.lo, w),
                             leezhu_product(x.mass.hi, y.mass.hi, w)};
      auto [it, fresh] = out.entries.try_emplace(meet, product);
      if (!fresh) {
        it->second = {leezhu_sum(it->second.lo, product.lo, w),
                      leezhu_sum(it->second.hi, product.hi, w)};
      }
    }
  }
  out.refresh_normalized();
  return out;
}

IntervalMassResult denoeux_combine(std::span<const IntervalBeliefStructure> bodies) {
  if (bodies.size() < 2) throw Error("Denoeux's combination needs at least two bodies");
  std::vector<std::vector<MassVector>> vertex_sets;
  for (const auto& body : bodies) {
    require_same_frame(bodies.front(), body);
    require_normalized(body, "Denoeux's combination");
    vertex_sets.push_back(enumerate_vertices(BoxSimplexPolytope(body)));
  }
  std::set<FocalSet> targets = all_targets(bodies);
  targets.insert(FocalSet{});

  std::map<FocalSet, Bounds> bounds;
  std::map<FocalSet, double> masses;
  for_each_vertex_tuple(vertex_sets, [&](std::span<const MassVector* const> points) {
    conjunctive_masses(bodies, points, masses);
    for (FocalSet t : targets) {
      auto it = masses.find(t);
      bounds[t].add(it == masses.end() ? 0.0 : it->second);
    }
  });

  IntervalMassResult out{bodies.front().frame(), {}, Interval{}, false};
  for (const auto& [set, bound] : bounds) {
    if (set.empty()) {
      out.empty_mass = Interval{bound.lo, bound.hi};
    } else {
      out.entries[set] = {bound.lo, bound.hi};
    }
  }
  return out;
}

IntervalMassResult denoeux_combine(const IntervalBeliefStructure& a,
                                   const IntervalBeliefStructure& b) {
  const std::array<IntervalBeliefStructure, 2> bodies{a, b};
  return denoeux_combine(bodies);
}

IntervalMassResult denoeux_normalize(const IntervalMassResult& raw) {
  const Interval empty = raw.empty_mass.value_or(Interval{});
  double lo_total = 0.0;
  double hi_total = 0.0;
  for (const auto& [set, m] : raw.entries) {
    lo_total += m.lo;
    hi_total += m.hi;
  }
  IntervalMassResult out{raw.frame, {}, std::nullopt, false};
  for (const auto& [set, m] : raw.entries) {
    const double others_hi = hi_total - m.hi;
    const double others_lo = lo_total - m.lo;
    const double lo_den = 1.0 - std::max(empty.lo, 1.0 - others_hi - m.lo);
    const double hi_den = 1.0 - std::min(empty.hi, 1.0 - others_lo - m.hi);
    if (lo_den <= 0.0 || hi_den <= 0.0) {
      throw Error(fmt::format("degenerate normalization for {}", raw.frame.format(set)));
    }
    out.entries[set] = {std::min(1.0, m.lo / lo_den), std::min(1.0, m.hi / hi_den)};
  }
  out.refresh_normalized();
  return out;
}

IntervalMassResult wang_combine(std::span<const IntervalBeliefStructure> bodies) {
  if (bodies.size() < 2) throw Error("Wang's combination needs at least two bodies");
  std::vector<std::vector<MassVector>> vertex_sets;
  for (const auto& body : bodies) {
    require_same_frame(bodies.front(), body);
    require_normalized(body, "Wang's combination");
    vertex_sets.push_back(enumerate_vertices(BoxSimplexPolytope(body)));
  }
  std::set<FocalSet> targets = all_targets(bodies);
  targets.erase(FocalSet{});

  std::map<FocalSet, Bounds> bounds;
  std::map<FocalSet, double> masses;
  bool any_feasible = false;
  for_each_vertex_tuple(vertex_sets, [&](std::span<const MassVector* const> points) {
    conjunctive_masses(bodies, points, masses);
    const double conflict = masses.contains(FocalSet{}) ? masses[FocalSet{}] : 0.0;
    const double scale = 1.0 - conflict;
    if (scale <= 1e-12) return;
    any_feasible = true;
    for (FocalSet t : targets) {
      auto it = masses.find(t);
      bounds[t].add(it == masses.end() ? 0.0 : it->second / scale);
    }
  });
  if (!any_feasible) throw ConflictError("not combinable: every vertex tuple is in total conflict", 1.0);

  IntervalMassResult out{bodies.front().frame(), {}, std::nullopt, false};
  for (const auto& [set, bound] : bounds) out.entries[set] = {bound.lo, bound.hi};
  out.refresh_normalized();
  return out;
}

IfsElement IfsElement::make(FocalSet target, double mu, double gamma) {
  constexpr double tol = 1e-12;
  if (!(mu >= -tol) || !(gamma >= -tol) || mu + gamma > 1.0 + tol) {
    throw Error(fmt::format("invalid IFS element: mu={} gamma={}", mu, gamma));
  }
  mu = std::clamp(mu, 0.0, 1.0);
  gamma = std::clamp(gamma, 0.0, 1.0 - mu);
  return {target, mu, gamma};
}

IfsElement ifs_combine(const IfsElement& a, const IfsElement& b) {
  if (a.target != b.target) throw Error("IFS elements refer to different targets");
  const double denom = 1.0 - a.mu * b.gamma - b.mu * a.gamma;
  if (denom <= 1e-12) throw Error("IFS total conflict");
  const double mu = (a.mu * (1.0 - b.gamma) + b.mu * a.pi()) / denom;
  const double gamma = (a.gamma * (1.0 - b.mu) + b.gamma * a.pi()) / denom;
  return IfsElement::make(a.target, mu, gamma);
}

IntervalBeliefStructure interval_pignistic(const IntervalBeliefStructure& ibs) {
  const Frame& frame = ibs.frame();
  std::vector<IntervalBeliefStructure::Entry> out;
  for (std::size_t i = 0; i < frame.size(); ++i) {
    Interval share;
    for (const auto& e : ibs.entries()) {
      if (!e.set.contains(i)) continue;
      share.lo += e.mass.lo / e.set.cardinality();
      share.hi += e.mass.hi / e.set.cardinality();
    }
    out.push_back({FocalSet::singleton(i), {std::min(share.lo, 1.0), std::min(share.hi, 1.0)}});
  }
  return IntervalBeliefStructure(frame, std::move(out));
}

SongReport song_combine(std::span<const IntervalBeliefStructure> bodies) {
  if (bodies.size() < 2) throw Error("Song's combination needs at least two bodies");
  std::vector<IntervalBeliefStructure> normalized_inputs;
  std::vector<IntervalBeliefStructure> pignistic;
  std::vector<std::vector<IfsElement>> encodings;
  for (const auto& body : bodies) {
    require_same_frame(bodies.front(), body);
    normalized_inputs.push_back(normalize(body));
    pignistic.push_back(normalize(interval_pignistic(normalized_inputs.back())));
    std::vector<IfsElement> encoding;
    for (const auto& e : pignistic.back().entries()) {
      encoding.push_back(IfsElement::make(e.set, e.mass.lo, 1.0 - e.mass.hi));
    }
    encodings.push_back(std::move(encoding));
  }

  std::vector<IfsElement> combined = encodings.front();
  for (std::size_t b = 1; b < encodings.size(); ++b) {
    for (std::size_t i = 0; i < combined.size(); ++i) {
      combined[i] = ifs_combine(combined[i], encodings[b][i]);
    }
  }

  std::vector<IntervalBeliefStructure::Entry> back;
  for (const auto& e : combined) back.push_back({e.target, {e.mu, 1.0 - e.gamma}});
  const auto final_ibs = normalize(IntervalBeliefStructure(bodies.front().frame(), std::move(back)));

  IntervalMassResult result{final_ibs.frame(), {}, std::nullopt, false};
  for (const auto& e : final_ibs.entries()) result.entries[e.set] = e.mass;
  result.refresh_normalized();
  return SongReport{std::move(normalized_inputs), std::move(pignistic), std::move(encodings),
                    std::move(combined), std::move(result)};
}

}  // namespace ibelief
