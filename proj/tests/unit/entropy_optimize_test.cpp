#include "ibelief/entropy_optimize.hpp"

#include <gtest/gtest.h>

#include "../support/builders.hpp"
#include "../support/grid_oracle.hpp"
#include "ibelief/error.hpp"

using namespace ibelief;
using namespace ibelief::testing;

namespace {

IntervalBeliefStructure body4_m1() {
  return make_ibs(frame3(), {{{"A1"}, 0.2, 0.5}, {{"A1", "A2"}, 0.3, 0.7}, {{"A1", "A3"}, 0.0, 0.4}, {{}, 0.1, 0.5}});
}
IntervalBeliefStructure body4_m2() {
  return make_ibs(frame3(), {{{"A1"}, 0.2, 0.5}, {{"A1", "A2"}, 0.1, 0.2}, {{"A1", "A3"}, 0.3, 0.7}, {{}, 0.0, 0.4}});
}

void expect_masses(const MassVector& got, const MassVector& want, double tol) {
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], want[i], tol) << "coordinate " << i;
}

}  // namespace

TEST(MaxEntropy, PalOnExample4) {
  expect_masses(max_entropy_masses(body4_m1(), Measure::pal).masses, {0.2, 0.3, 0.2, 0.3}, 1e-9);
  expect_masses(max_entropy_masses(body4_m2(), Measure::pal).masses, {0.2, 0.2, 0.3, 0.3}, 1e-9);
}

TEST(MinEntropy, PalOnExample4) {
  expect_masses(min_entropy_masses(body4_m1(), Measure::pal).masses, {0.5, 0.4, 0.0, 0.1}, 1e-9);
  expect_masses(min_entropy_masses(body4_m2(), Measure::pal).masses, {0.5, 0.1, 0.4, 0.0}, 1e-9);
}

// Water level c with clamp(2^k c) summing to 1: the free coordinates A3
// (weight 1) and the whole frame (weight 3) share 0.5, so c = 0.125.
TEST(MaxEntropy, PalWaterFillingOnComparisonBody) {
  const auto wf = water_fill(comparison_m1(), Measure::pal);
  expect_masses(wf.masses, {0.2, 0.3, 0.125, 0.375}, 1e-9);
  EXPECT_NEAR(wf.level, 0.125, 1e-9);
}

// Linear objective: only the whole frame has positive weight for the
// minimum, so the singletons absorb the residual in equal shares.
TEST(MinEntropy, DuboisPradeSplitsTiedResidualEqually) {
  expect_masses(min_entropy_masses(comparison_m1(), Measure::dubois_prade).masses,
                {0.2 + 0.4 / 3, 0.3 + 0.4 / 3, 0.1 + 0.4 / 3, 0.0}, 1e-12);
  expect_masses(max_entropy_masses(comparison_m1(), Measure::dubois_prade).masses,
                {0.2, 0.3, 0.1, 0.4}, 1e-12);
}

TEST(EntropyBounds, PointStructure) {
  const auto ibs = make_ibs(frame3(), {{{"A1"}, 0.5, 0.5}, {{}, 0.5, 0.5}});
  for (Measure m : kSeparableMeasures) {
    const auto b = entropy_bounds(ibs, m);
    EXPECT_NEAR(b.h_min, b.h_max, 1e-12);
    EXPECT_NEAR(b.h_max, entropy(m, ibs.to_bpa()), 1e-12);
  }
  const auto grid = grid_entropy_bounds(ibs, 200);
  for (std::size_t i = 0; i < kSeparableMeasures.size(); ++i) {
    EXPECT_NEAR(grid[i].min, grid[i].max, 1e-12);
    EXPECT_EQ(grid[i].points, 1);
  }
}

TEST(EntropyBounds, OracleOnExample4) {
  const auto grid = grid_entropy_bounds(body4_m1(), 200);
  const auto b = entropy_bounds(body4_m1(), Measure::pal);
  EXPECT_NEAR(b.h_max, grid[3].max, 2e-2);
  EXPECT_NEAR(b.h_min, grid[3].min, 2e-2);
  EXPECT_EQ(b.m_max.frame(), frame3());
}

TEST(EntropyBounds, OracleBracketsDengSolutions) {
  const auto grid = grid_entropy_bounds(comparison_m2(), 200);
  const auto b = entropy_bounds(comparison_m2(), Measure::deng);
  EXPECT_LE(grid[2].min, b.h_min + 1e-9);
  EXPECT_GE(grid[2].max, b.h_max - 2e-2);
  EXPECT_LE(b.h_min, b.h_max);
  EXPECT_NEAR(b.h_max, entropy(Measure::deng, b.m_max), 1e-12);
  EXPECT_NEAR(b.h_min, entropy(Measure::deng, b.m_min), 1e-12);
}

TEST(MinEntropy, TieRules) {
  // Two singletons with identical boxes: the minimum is attained at two
  // mirrored vertices.
  const auto ibs = make_ibs(frame3(), {{{"A1"}, 0.1, 0.6}, {{"A2"}, 0.1, 0.6}, {{}, 0.3, 0.3}});
  const auto first = min_entropy_masses(ibs, Measure::nguyen, MinTieRule::lexicographically_first);
  EXPECT_TRUE(first.tie);
  expect_masses(first.masses, {0.1, 0.6, 0.3}, 1e-12);
  const auto merged = min_entropy_masses(ibs, Measure::nguyen, MinTieRule::equal_split);
  EXPECT_TRUE(merged.tie);
  expect_masses(merged.masses, {0.35, 0.35, 0.3}, 1e-12);
}

TEST(EntropyOptimize, Preconditions) {
  const auto loose = make_ibs(frame3(), {{{"A1"}, 0.1, 0.9}, {{"A2"}, 0.2, 0.3}});
  EXPECT_THROW(max_entropy_masses(loose, Measure::pal), Error);
  EXPECT_THROW(min_entropy_masses(loose, Measure::pal), Error);
  try {
    max_entropy_bpa(comparison_m1(), Measure::hohle);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("unsupported objective"), std::string::npos);
  }
  EXPECT_THROW(water_fill(comparison_m1(), Measure::dubois_prade), Error);
}

TEST(EntropyOptimize, ToBpaAlignsWithEntries) {
  const Bpa m = to_bpa(comparison_m1(), {0.2, 0.3, 0.1, 0.4});
  EXPECT_DOUBLE_EQ(m.mass(frame3().full()), 0.4);
  EXPECT_DOUBLE_EQ(min_entropy_bpa(body4_m1(), Measure::pal).mass(frame3().focal_set({"A1"})), 0.5);
  EXPECT_DOUBLE_EQ(max_entropy_bpa(body4_m1(), Measure::pal).mass(frame3().focal_set({"A1"})), 0.2);
}
