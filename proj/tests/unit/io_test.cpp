#include "ibelief/io.hpp"

#include <gtest/gtest.h>

#include "../support/builders.hpp"
#include "../support/generators.hpp"
#include "ibelief/error.hpp"
#include "ibelief/reproduce.hpp"

using namespace ibelief;
using namespace ibelief::testing;

namespace {

std::string error_of(std::string_view text) {
  try {
    parse_evidence(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

constexpr std::string_view kGood = R"({
  "format": 1,
  "frame": ["A", "B"],
  "bodies": [
    {"name": "m1", "masses": [{"set": ["A"], "lo": 0.2, "hi": 0.6}, {"set": ["A", "B"], "lo": 0.4, "hi": 0.8}]},
    {"name": "m2", "masses": [{"set": ["B"], "mass": 0.3}, {"set": ["A", "B"], "mass": 0.7}]}
  ]
})";

}  // namespace

TEST(ParseEvidence, ReadsIntervalsAndPointMasses) {
  const Evidence ev = parse_evidence(kGood);
  EXPECT_EQ(ev.frame.labels(), (std::vector<std::string>{"A", "B"}));
  ASSERT_EQ(ev.bodies.size(), 2u);
  EXPECT_EQ(ev.bodies[0].name, "m1");
  EXPECT_EQ(ev.bodies[0].ibs.entries()[1].mass, (Interval{0.4, 0.8}));
  EXPECT_TRUE(ev.bodies[1].ibs.degenerate());
  EXPECT_EQ(ev.structures().size(), 2u);
}

TEST(ParseEvidence, BundledExampleFile) {
  const Evidence ev = load_evidence(default_data_dir() / "example4.json");
  ASSERT_EQ(ev.bodies.size(), 2u);
  const auto& m1 = ev.bodies[0].ibs;
  EXPECT_EQ(m1.entries()[1].set, ev.frame.focal_set({"A1", "A2"}));
  EXPECT_EQ(m1.entries()[1].mass, (Interval{0.3, 0.7}));
  EXPECT_EQ(ev.bodies[1].ibs.entries()[3].set, ev.frame.full());
  EXPECT_EQ(ev.bodies[1].ibs.entries()[3].mass, (Interval{0.0, 0.4}));
}

TEST(ParseEvidence, Errors) {
  EXPECT_NE(error_of(R"({"format":1,"frame":["A"],"bodies":[]})").find("no evidence"), std::string::npos);
  EXPECT_NE(error_of(R"({"format":1,"frame":["A","B"],"bodies":[{"name":"m","masses":[{"set":["A","A"],"mass":1}]}]})")
                .find("bodies[0].masses[0].set: duplicate label 'A'"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"format":1,"frame":["A"],"bodies":[{"name":"m","masses":[{"set":["Z"],"mass":1}]}]})")
                .find("unknown label 'Z'"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"format":1,"frame":["A"],"bodies":[{"name":"m","masses":[{"set":["A"],"lo":0.6,"hi":0.5}]}]})")
                .find("lo > hi"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"frame":["A"],"bodies":[]})").find("missing field 'format'"), std::string::npos);
  EXPECT_NE(error_of(R"({"format":2,"frame":["A"],"bodies":[]})").find("format"), std::string::npos);
  EXPECT_NE(error_of("{\n  \"format\": 1,\n  \"frame\": [\"A\",\n}").find("line 4"), std::string::npos);
  EXPECT_NE(error_of(R"({"format":1,"frame":["A","B"],"bodies":[{"name":"m","masses":[{"set":["A"],"mass":1}]},{"name":"m","masses":[{"set":["B"],"mass":1}]}]})")
                .find("duplicate body name"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"format":1,"frame":["A","B"],"bodies":[{"name":"m","masses":[{"set":["A"],"mass":0.5},{"set":["A"],"mass":0.5}]}]})")
                .find("duplicate focal set"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"format":1,"frame":["A"],"bodies":[{"name":"m","masses":[{"set":["A"],"mass":1,"lo":1}]}]})")
                .find("not both"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"format":1,"frame":["A","A"],"bodies":[]})").find("frame"), std::string::npos);
  EXPECT_NE(error_of(R"({"format":1,"frame":["A"],"bodies":[{"name":"m","masses":[{"set":[],"mass":1}]}]})")
                .find("non-empty"),
            std::string::npos);
}

TEST(LoadEvidence, MissingFile) {
  EXPECT_THROW(load_evidence("/nonexistent/evidence.json"), Error);
}

TEST(Json, EvidenceRoundTrip) {
  const Evidence ev = parse_evidence(kGood);
  const Evidence back = parse_evidence(to_json(ev).dump());
  ASSERT_EQ(back.bodies.size(), ev.bodies.size());
  EXPECT_EQ(back.frame, ev.frame);
  for (std::size_t b = 0; b < ev.bodies.size(); ++b) {
    EXPECT_EQ(back.bodies[b].name, ev.bodies[b].name);
    for (std::size_t i = 0; i < ev.bodies[b].ibs.size(); ++i) {
      EXPECT_EQ(back.bodies[b].ibs.entries()[i].set, ev.bodies[b].ibs.entries()[i].set);
      EXPECT_EQ(back.bodies[b].ibs.entries()[i].mass, ev.bodies[b].ibs.entries()[i].mass);
    }
  }
}

TEST(JsonProperty, ResultRoundTripIsExact) {
  Rng rng(23);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const Frame f = frame_of_size(4);
  for (int trial = 0; trial < 200; ++trial) {
    IntervalMassResult r{f, {}, std::nullopt, trial % 2 == 0};
    for (FocalSet set : random_sets(rng, f, 1 + trial % 7)) {
      const double a = u(rng), b = u(rng);
      r.entries[set] = {std::min(a, b), std::max(a, b)};
    }
    if (trial % 3 == 0) r.empty_mass = Interval{u(rng) / 3, 0.5 + u(rng) / 3};
    const auto text = to_json(r).dump();
    EXPECT_EQ(result_from_json(nlohmann::json::parse(text)), r);
  }
}

TEST(Json, SetsAndBpas) {
  const Frame f = frame3();
  EXPECT_EQ(set_to_json(f, f.focal_set({"A3", "A1"})), nlohmann::json({"A1", "A3"}));
  EXPECT_EQ(set_from_json(f, nlohmann::json({"A2"})), f.focal_set({"A2"}));
  const auto j = to_json(make_bpa(f, {{{"A1"}, 0.25}, {{}, 0.75}}));
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[1]["mass"], 0.75);
}

TEST(Csv, Quoting) {
  EXPECT_EQ(csv_field("{A1}"), "{A1}");
  EXPECT_EQ(csv_field("{A1,A2}"), "\"{A1,A2}\"");
  EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
}
