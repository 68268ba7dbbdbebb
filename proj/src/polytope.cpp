#include "ibelief/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

#include <fmt/format.h>

#include "ibelief/error.hpp"

namespace ibelief {
namespace {

constexpr double kDedupTolerance = 1e-12;

double max_gap(const MassVector& a, const MassVector& b) {
  double gap = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) gap = std::max(gap, std::abs(a[i] - b[i]));
  return gap;
}

}  // namespace

BoxSimplexPolytope::BoxSimplexPolytope(std::vector<double> lo, std::vector<double> hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_.size() != hi_.size()) throw Error("bound vectors differ in length");
  if (lo_.empty()) throw Error("polytope needs at least one coordinate");
  for (std::size_t i = 0; i < lo_.size(); ++i) {
    if (lo_[i] > hi_[i]) throw Error(fmt::format("coordinate {} has lo > hi", i));
  }
  const double lo_sum = std::accumulate(lo_.begin(), lo_.end(), 0.0);
  const double hi_sum = std::accumulate(hi_.begin(), hi_.end(), 0.0);
  if (lo_sum > 1.0 + 1e-9 || hi_sum < 1.0 - 1e-9) throw Error("polytope is empty");
}

BoxSimplexPolytope::BoxSimplexPolytope(const IntervalBeliefStructure& ibs)
    : BoxSimplexPolytope(ibs.lower(), ibs.upper()) {}

std::vector<MassVector> enumerate_vertices(const BoxSimplexPolytope& polytope) {
  const std::size_t n = polytope.dimension();
  if (n > kMaxPolytopeDimension) {
    throw Error(fmt::format("refusing to enumerate vertices in dimension {} (limit {})", n,
                            kMaxPolytopeDimension));
  }
  const auto lo = polytope.lower();
  const auto hi = polytope.upper();

  std::vector<MassVector> found;
  MassVector point(n);
  // free_index == n means every coordinate sits on a bound.
  for (std::size_t free_index = 0; free_index <= n; ++free_index) {
    const std::size_t pinned = free_index == n ? n : n - 1;
    const std::uint64_t patterns = std::uint64_t{1} << pinned;
    for (std::uint64_t pattern = 0; pattern < patterns; ++pattern) {
      double total = 0.0;
      std::size_t bit = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (i == free_index) continue;
        point[i] = ((pattern >> bit++) & 1u) ? hi[i] : lo[i];
        total += point[i];
      }
      if (free_index == n) {
        if (std::abs(total - 1.0) <= kDedupTolerance) found.push_back(point);
        continue;
      }
      const double residual = 1.0 - total;
      if (residual < lo[free_index] - kDedupTolerance ||
          residual > hi[free_index] + kDedupTolerance) {
        continue;
      }
      point[free_index] = std::clamp(residual, lo[free_index], hi[free_index]);
      found.push_back(point);
    }
  }

  std::sort(found.begin(), found.end());
  std::vector<MassVector> vertices;
  for (auto& v : found) {
    const bool seen = std::any_of(vertices.begin(), vertices.end(), [&](const MassVector& u) {
      return max_gap(u, v) <= kDedupTolerance;
    });
    if (!seen) vertices.push_back(std::move(v));
  }
  return vertices;
}

bool contains(const BoxSimplexPolytope& polytope, std::span<const double> point, double tol) {
  if (point.size() != polytope.dimension()) return false;
  double total = 0.0;
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (point[i] < polytope.lower()[i] - tol || point[i] > polytope.upper()[i] + tol) return false;
    total += point[i];
  }
  return std::abs(total - 1.0) <= tol;
}

}  // namespace ibelief
