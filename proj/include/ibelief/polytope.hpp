#pragma once

#include <span>
#include <vector>

#include "ibelief/interval.hpp"

namespace ibelief {

inline constexpr std::size_t kMaxPolytopeDimension = 24;

using MassVector = std::vector<double>;

// {m : sum(m) = 1, lo <= m <= hi}
class BoxSimplexPolytope {
 public:
  // Throws when bounds are unordered or the polytope is empty.
  BoxSimplexPolytope(std::vector<double> lo, std::vector<double> hi);
  explicit BoxSimplexPolytope(const IntervalBeliefStructure& ibs);

  std::size_t dimension() const { return lo_.size(); }
  std::span<const double> lower() const { return lo_; }
  std::span<const double> upper() const { return hi_; }

 private:
  std::vector<double> lo_;
  std::vector<double> hi_;
};

// All vertices: points with at most one coordinate strictly inside its box.
// The result is sorted lexicographically and free of duplicates (max-norm
// 1e-12). Throws when the dimension exceeds kMaxPolytopeDimension.
std::vector<MassVector> enumerate_vertices(const BoxSimplexPolytope& polytope);

bool contains(const BoxSimplexPolytope& polytope, std::span<const double> point,
              double tol = 1e-9);

}  // namespace ibelief
