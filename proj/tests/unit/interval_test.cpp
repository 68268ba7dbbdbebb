#include "ibelief/interval.hpp"

#include <gtest/gtest.h>

#include "../support/builders.hpp"
#include "ibelief/error.hpp"

using namespace ibelief;
using namespace ibelief::testing;

namespace {

void expect_bounds(const IntervalBeliefStructure& ibs, std::initializer_list<Interval> expected,
                   double tol) {
  ASSERT_EQ(ibs.size(), expected.size());
  std::size_t i = 0;
  for (const auto& e : expected) {
    EXPECT_NEAR(ibs.entries()[i].mass.lo, e.lo, tol) << "entry " << i;
    EXPECT_NEAR(ibs.entries()[i].mass.hi, e.hi, tol) << "entry " << i;
    ++i;
  }
}

}  // namespace

TEST(Interval, Basics) {
  const Interval a{0.2, 0.5};
  EXPECT_DOUBLE_EQ(a.width(), 0.3);
  EXPECT_FALSE(a.degenerate());
  EXPECT_TRUE((Interval{0.4, 0.4}).degenerate());
  EXPECT_TRUE(a.contains({0.3, 0.4}));
  EXPECT_FALSE(a.contains({0.1, 0.4}));
}

TEST(IntervalBeliefStructure, StructuralChecks) {
  const Frame f = frame3();
  EXPECT_THROW(make_ibs(f, {{{"A1"}, 0.5, 0.4}}), Error);
  EXPECT_THROW(make_ibs(f, {{{"A1"}, -0.1, 0.4}}), Error);
  EXPECT_THROW(make_ibs(f, {{{"A1"}, 0.1, 1.4}}), Error);
  EXPECT_THROW(make_ibs(f, {{{"A1"}, 0.1, 0.4}, {{"A1"}, 0.2, 0.6}}), Error);
  EXPECT_THROW(IntervalBeliefStructure(f, {}), Error);
  EXPECT_THROW(IntervalBeliefStructure(f, {{FocalSet(), {0.0, 1.0}}}), Error);
}

TEST(IntervalBeliefStructure, KeepsInputOrderAndConvertsPoints) {
  const Frame f = frame3();
  const auto ibs = make_ibs(f, {{{}, 0.3, 0.3}, {{"A2"}, 0.7, 0.7}});
  EXPECT_EQ(ibs.focal_sets()[0], f.full());
  EXPECT_TRUE(ibs.degenerate());
  const Bpa m = ibs.to_bpa();
  EXPECT_DOUBLE_EQ(m.mass(f.focal_set({"A2"})), 0.7);
  const auto back = IntervalBeliefStructure::from_bpa(m);
  EXPECT_TRUE(back.degenerate());
  EXPECT_THROW(make_ibs(f, {{{"A1"}, 0.2, 0.9}, {{"A2"}, 0.1, 0.8}}).to_bpa(), Error);
}

TEST(Validity, SumsMustBracketOne) {
  const Frame f = frame3();
  EXPECT_TRUE(validate_ibs(make_ibs(f, {{{"A1"}, 0.2, 0.6}, {{"A2"}, 0.3, 0.5}})));
  const auto low = validate_ibs(make_ibs(f, {{{"A1"}, 0.2, 0.4}, {{"A2"}, 0.3, 0.5}}));
  EXPECT_FALSE(low);
  EXPECT_FALSE(low.reason.empty());
  EXPECT_FALSE(validate_ibs(make_ibs(f, {{{"A1"}, 0.6, 0.8}, {{"A2"}, 0.5, 0.7}})));
}

TEST(Normalized, DetectsUnattainableBounds) {
  const Frame f = frame3();
  EXPECT_TRUE(is_normalized(comparison_m1()));
  EXPECT_TRUE(is_normalized(comparison_m2()));
  EXPECT_FALSE(is_normalized(make_ibs(f, {{{"A1"}, 0.1, 0.9}, {{"A2"}, 0.2, 0.3}})));
  EXPECT_THROW(is_normalized(make_ibs(f, {{{"A1"}, 0.1, 0.2}, {{"A2"}, 0.2, 0.3}})), Error);
}

TEST(Normalize, TightensUnattainableBounds) {
  const Frame f = frame3();
  const auto out = normalize_traced(make_ibs(f, {{{"A1"}, 0.1, 0.9}, {{"A2"}, 0.2, 0.3}}));
  EXPECT_FALSE(out.rescaled);
  EXPECT_TRUE(out.tightened);
  expect_bounds(out.result, {{0.7, 0.8}, {0.2, 0.3}}, 1e-12);
  EXPECT_TRUE(is_normalized(out.result));
}

TEST(Normalize, RescalesWhenLowerBoundsExceedOne) {
  const Frame f = frame3();
  const auto out = normalize_traced(make_ibs(f, {{{"A1"}, 0.6, 0.8}, {{"A2"}, 0.5, 0.7}}));
  EXPECT_TRUE(out.rescaled);
  expect_bounds(out.result, {{0.6 / 1.3, 0.8 / 1.3}, {0.5 / 1.3, 0.7 / 1.3}}, 1e-12);
  EXPECT_TRUE(is_normalized(out.result));
}

TEST(Normalize, NormalizedInputIsUntouched) {
  const auto out = normalize_traced(comparison_m1());
  EXPECT_FALSE(out.rescaled);
  EXPECT_FALSE(out.tightened);
  ASSERT_EQ(out.result.size(), comparison_m1().size());
  for (std::size_t i = 0; i < out.result.size(); ++i) {
    EXPECT_EQ(out.result.entries()[i].mass, comparison_m1().entries()[i].mass);
  }
}

TEST(Normalize, OverspecifiedStructuresCollapseToPoints) {
  const Frame f({"P", "L", "K"});
  const auto m1 = normalize(make_ibs(f, {{{"P"}, 0.5, 0.8}, {{"L", "K"}, 0.3, 0.4}, {{}, 0.2, 0.5}}));
  const auto m2 =
      normalize(make_ibs(f, {{{"P", "L"}, 0.4, 0.6}, {{"L", "K"}, 0.3, 0.5}, {{}, 0.3, 0.4}}));
  expect_bounds(m1, {{0.5, 0.5}, {0.3, 0.3}, {0.2, 0.2}}, 1e-12);
  expect_bounds(m2, {{0.4, 0.4}, {0.3, 0.3}, {0.3, 0.3}}, 1e-12);
  EXPECT_TRUE(m1.degenerate());
}

TEST(IntervalMassResult, AccessAndNormalizationFlag) {
  const Frame f = frame3();
  IntervalMassResult r{f, {}, std::nullopt, false};
  r.entries[f.focal_set({"A1"})] = {0.4, 0.6};
  r.entries[f.full()] = {0.4, 0.6};
  r.refresh_normalized();
  EXPECT_TRUE(r.normalized);
  EXPECT_EQ(r.at(f.focal_set({"A2"})), (Interval{0.0, 0.0}));
  r.empty_mass = Interval{0.0, 0.1};
  r.refresh_normalized();
  EXPECT_FALSE(r.normalized);
  EXPECT_EQ(r.to_ibs().size(), 2u);
}
