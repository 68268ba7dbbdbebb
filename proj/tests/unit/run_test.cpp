#include "ibelief/run.hpp"

#include <algorithm>
#include <charconv>
#include <locale>

#include <gtest/gtest.h>

#include "ibelief/error.hpp"
#include "ibelief/reproduce.hpp"

using namespace ibelief;

namespace {

Evidence bundled(const char* name) { return load_evidence(default_data_dir() / name); }

std::size_t count_lines(const std::string& text) {
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

bool has(const std::string& text, std::string_view needle) {
  return text.find(needle) != std::string::npos;
}

}  // namespace

TEST(RunConfig, NamesRoundTrip) {
  for (Method m : {Method::proposed, Method::wang, Method::denoeux, Method::leezhu, Method::song,
                   Method::dempster}) {
    EXPECT_EQ(parse_method(method_name(m)), m);
  }
  for (OutputFormat f : {OutputFormat::table, OutputFormat::json, OutputFormat::csv}) {
    EXPECT_EQ(parse_format(format_name(f)), f);
  }
  EXPECT_THROW(parse_method("yager"), Error);
  EXPECT_THROW(parse_format("xml"), Error);
}

TEST(RunConfig, MethodParameterConsistency) {
  RunConfig c;
  EXPECT_NO_THROW(validate_config(c));
  c.w = 3.0;
  EXPECT_THROW(validate_config(c), Error);
  c.method = Method::leezhu;
  EXPECT_NO_THROW(validate_config(c));
  c.measure = Measure::pal;
  EXPECT_THROW(validate_config(c), Error);
  c = RunConfig{};
  c.measure = Measure::hohle;
  EXPECT_THROW(validate_config(c), Error);
  c = RunConfig{};
  c.method = Method::leezhu;
  c.w = 0.0;
  EXPECT_THROW(validate_config(c), Error);
}

TEST(RunCombine, ProposedReportsIntermediateBpas) {
  RunConfig c;
  c.measure = Measure::pal;
  c.format = OutputFormat::table;
  const auto out = run_combine(c, bundled("example4.json"));
  const auto& details = out.json["details"];
  ASSERT_EQ(details["bodies"].size(), 2u);
  EXPECT_NEAR(details["bodies"][0]["m_max"][0]["mass"].get<double>(), 0.2, 1e-9);
  EXPECT_NEAR(details["bodies"][1]["m_min"][2]["mass"].get<double>(), 0.4, 1e-9);
  EXPECT_TRUE(details["max_fold"].contains("conflict"));
  EXPECT_EQ(out.json["measure"], "pal");
  EXPECT_EQ(out.json["inputs"][0]["normalization"], "none");
  EXPECT_TRUE(has(out.text, "{A1}          0.4900    0.9100"));
  EXPECT_TRUE(has(out.text, "m1 m_max"));
  EXPECT_TRUE(has(out.text, "result normalized: yes"));
}

TEST(RunCombine, JsonResultRoundTrips) {
  RunConfig c;
  c.format = OutputFormat::json;
  const auto out = run_combine(c, bundled("example5.json"));
  const auto parsed = nlohmann::json::parse(out.text);
  EXPECT_EQ(parsed, out.json);
  const auto result = result_from_json(parsed["result"]);
  EXPECT_EQ(to_json(result), parsed["result"]);
  EXPECT_EQ(parsed["format"], 1);
}

TEST(RunCombine, CsvColumns) {
  RunConfig c;
  c.method = Method::wang;
  c.format = OutputFormat::csv;
  const auto out = run_combine(c, bundled("example5.json"));
  EXPECT_EQ(out.text.substr(0, out.text.find('\n')), "body/method,focal_set,lo,hi");
  EXPECT_EQ(count_lines(out.text), 5u);
  EXPECT_TRUE(has(out.text, "wang,\"{A1,A2,A3}\",0,"));
}

TEST(RunCombine, LeeZhuUsesRawInputs) {
  RunConfig c;
  c.method = Method::leezhu;
  c.w = 3.0;
  const auto out = run_combine(c, bundled("example31.json"));
  EXPECT_EQ(out.json["inputs"][0]["normalization"], "none");
  EXPECT_EQ(out.json["w"], 3.0);
  const auto r = result_from_json(out.json["result"]);
  EXPECT_NEAR(r.at(r.frame.focal_set({"P"})).lo, 0.34, 5e-3);
  EXPECT_FALSE(r.normalized);
}

TEST(RunCombine, DempsterOnCollapsedBodies) {
  RunConfig c;
  c.method = Method::dempster;
  const auto out = run_combine(c, bundled("example33.json"));
  EXPECT_EQ(out.json["inputs"][0]["normalization"], "tightened");
  const auto r = result_from_json(out.json["result"]);
  EXPECT_NEAR(r.at(r.frame.focal_set({"A"})).lo, 0.5714, 1e-3);
  EXPECT_NEAR(out.json["details"]["conflict"].get<double>(), 0.65, 1e-12);

  RunConfig raw = c;
  raw.normalize_inputs = false;
  EXPECT_THROW(run_combine(raw, bundled("example33.json")), Error);
  EXPECT_THROW(run_combine(c, bundled("example5.json")), Error);
}

TEST(RunCombine, EveryMethodRuns) {
  for (Method m : {Method::proposed, Method::wang, Method::denoeux, Method::leezhu, Method::song}) {
    RunConfig c;
    c.method = m;
    for (OutputFormat f : {OutputFormat::table, OutputFormat::json, OutputFormat::csv}) {
      c.format = f;
      const auto out = run_combine(c, bundled("example5.json"));
      EXPECT_FALSE(out.text.empty());
      EXPECT_EQ(out.json["method"], std::string(method_name(m)));
    }
  }
}

TEST(RunCompare, SideBySide) {
  RunConfig c;
  const auto out = run_compare(c, bundled("example5.json"));
  for (const char* key : {"denoeux", "wang", "song", "proposed:pal"}) {
    EXPECT_TRUE(out.json["results"].contains(key)) << key;
    EXPECT_TRUE(has(out.text, key)) << key;
  }
  EXPECT_TRUE(has(out.text, "[0.2222, 0.5538]"));
  EXPECT_EQ(count_lines(out.text), 5u);
}

TEST(RunValidate, ReportsEachBody) {
  const auto out = run_validate(OutputFormat::json, bundled("example32.json"));
  ASSERT_EQ(out.json["bodies"].size(), 2u);
  EXPECT_TRUE(out.json["bodies"][0]["valid"].get<bool>());
  EXPECT_FALSE(out.json["bodies"][0]["normalized"].get<bool>());
  const auto table = run_validate(OutputFormat::table, bundled("example5.json"));
  EXPECT_TRUE(has(table.text, "m1: valid, normalized"));
}

TEST(RunNormalize, CollapsesToPoints) {
  const auto out = run_normalize(OutputFormat::json, bundled("example31.json"));
  EXPECT_EQ(out.json["bodies"][0]["normalization"], "tightened");
  EXPECT_NEAR(out.json["bodies"][1]["masses"][0]["hi"].get<double>(), 0.4, 1e-12);
  const auto csv = run_normalize(OutputFormat::csv, bundled("example31.json"));
  EXPECT_EQ(count_lines(csv.text), 7u);
}

TEST(RunEntropy, BoundsAndPointValues) {
  const auto out = run_entropy(OutputFormat::json, Measure::pal, true, bundled("example4.json"));
  const auto& e = out.json["bodies"][0]["entropy"][0];
  EXPECT_EQ(e["measure"], "pal");
  EXPECT_LT(e["h_min"].get<double>(), e["h_max"].get<double>());
  const auto points = run_entropy(OutputFormat::json, std::nullopt, true, bundled("example33.json"));
  EXPECT_EQ(points.json["bodies"][0]["entropy"].size(), kAllMeasures.size());
  EXPECT_THROW(run_entropy(OutputFormat::table, Measure::hohle, true, bundled("example4.json")), Error);
}

TEST(Rendering, IndependentOfGlobalLocale) {
  struct CommaDecimal : std::numpunct<char> {
    char do_decimal_point() const override { return ','; }
  };
  const std::locale saved = std::locale::global(std::locale(std::locale::classic(), new CommaDecimal));
  RunConfig c;
  c.format = OutputFormat::table;
  const auto table = run_combine(c, bundled("example4.json"));
  c.format = OutputFormat::csv;
  const auto csv = run_combine(c, bundled("example4.json"));
  std::locale::global(saved);
  EXPECT_TRUE(has(table.text, "0.4900"));
  EXPECT_FALSE(has(table.text, "0,4900"));
  const std::string row = "proposed,{A1},";
  const auto at = csv.text.find(row);
  ASSERT_NE(at, std::string::npos);
  const std::string rest = csv.text.substr(at + row.size());
  double lo = 0.0;
  const auto parsed = std::from_chars(rest.data(), rest.data() + rest.size(), lo);
  EXPECT_EQ(*parsed.ptr, ',');
  EXPECT_NEAR(lo, 0.49, 1e-9);
}
