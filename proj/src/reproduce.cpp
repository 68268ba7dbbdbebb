#include "ibelief/reproduce.hpp"

#include <cmath>
#include <initializer_list>

#include <fmt/format.h>

#include "ibelief/error.hpp"
#include "ibelief/fusion.hpp"
#include "ibelief/io.hpp"
#include "ibelief/reference_methods.hpp"

#ifndef IBELIEF_DATA_DIR
#define IBELIEF_DATA_DIR "data"
#endif

namespace ibelief {
namespace {

using nlohmann::json;

struct ExpectedRow {
  std::initializer_list<std::string_view> labels;  // empty list stands for the whole frame
  double lo;
  double hi;
};

FocalSet resolve(const Frame& frame, std::initializer_list<std::string_view> labels) {
  return labels.size() == 0 ? frame.full() : frame.focal_set(labels);
}

Interval lookup(const IntervalMassResult& result, FocalSet set) {
  auto it = result.entries.find(set);
  return it == result.entries.end() ? Interval{0.0, 0.0} : it->second;
}

class Builder {
 public:
  explicit Builder(ReproduceTarget target) : manifest_{target, {}} {}

  void value(std::string group, std::string cell, double expected, double actual,
             double tolerance, bool required = true) {
    manifest_.checks.push_back({std::move(group), std::move(cell), expected, actual, tolerance,
                                Comparison::within, required});
  }

  void interval(const std::string& group, const Frame& frame, FocalSet set, Interval expected,
                Interval actual, double tolerance, bool required = true) {
    const std::string name = frame.format(set);
    value(group, name + ".lo", expected.lo, actual.lo, tolerance, required);
    value(group, name + ".hi", expected.hi, actual.hi, tolerance, required);
  }

  void rows(const std::string& group, const IntervalMassResult& result,
            std::initializer_list<ExpectedRow> expected, double tolerance, bool required = true) {
    for (const auto& row : expected) {
      const FocalSet set = resolve(result.frame, row.labels);
      interval(group, result.frame, set, {row.lo, row.hi}, lookup(result, set), tolerance,
               required);
    }
  }

  void masses(const std::string& group, const IntervalBeliefStructure& ibs,
              const MassVector& actual, std::initializer_list<double> expected, double tolerance) {
    const auto sets = ibs.focal_sets();
    std::size_t i = 0;
    for (double e : expected) {
      value(group, ibs.frame().format(sets.at(i)), e, actual.at(i), tolerance);
      ++i;
    }
  }

  void check(CellCheck c) { manifest_.checks.push_back(std::move(c)); }

  Manifest take() { return std::move(manifest_); }

 private:
  Manifest manifest_;
};

Evidence load(const std::filesystem::path& dir, const char* file) {
  return load_evidence(dir / file);
}

std::vector<IntervalBeliefStructure> normalized(const Evidence& evidence) {
  std::vector<IntervalBeliefStructure> out;
  for (const auto& body : evidence.bodies) out.push_back(normalize(body.ibs));
  return out;
}

IntervalMassResult leezhu_fold(const std::vector<IntervalBeliefStructure>& bodies, double w) {
  IntervalMassResult acc = leezhu_combine(bodies.at(0), bodies.at(1), {w});
  for (std::size_t i = 2; i < bodies.size(); ++i) acc = leezhu_combine(acc.to_ibs(), bodies[i], {w});
  return acc;
}

Manifest table2(const std::filesystem::path& dir) {
  const Evidence ev = load(dir, "example31.json");
  const Frame& f = ev.frame;
  const std::vector<FocalSet> sets = {f.focal_set({"P"}), f.focal_set({"L"}),
                                      f.focal_set({"P", "L"}), f.focal_set({"L", "K"}), f.full()};
  const std::array<std::array<Interval, 5>, 5> printed = {{
      {{{0, 0.6}, {0, 0}, {0, 0.1}, {0, 0}, {0, 0}}},
      {{{0.26, 0.66}, {0.08, 0.28}, {0, 0.4}, {0.01, 0.40}, {0, 0.22}}},
      {{{0.34, 0.64}, {0.18, 0.35}, {0.10, 0.43}, {0.15, 0.45}, {0.05, 0.30}}},
      {{{0.36, 0.62}, {0.22, 0.37}, {0.14, 0.46}, {0.20, 0.46}, {0.10, 0.34}}},
      {{{0.38, 0.61}, {0.24, 0.38}, {0.17, 0.47}, {0.23, 0.47}, {0.13, 0.36}}},
  }};
  Builder b(ReproduceTarget::table2);
  std::vector<IntervalMassResult> results;
  const auto bodies = ev.structures();
  for (int w = 1; w <= 5; ++w) {
    results.push_back(leezhu_fold(bodies, w));
    for (std::size_t s = 0; s < sets.size(); ++s) {
      b.interval(fmt::format("w={}", w), f, sets[s], printed[w - 1][s],
                 lookup(results.back(), sets[s]), 5e-3);
    }
  }
  // Bounds are claimed to grow with w from w = 2 on.
  for (int w = 2; w < 5; ++w) {
    for (FocalSet set : sets) {
      const Interval prev = lookup(results[w - 1], set);
      const Interval next = lookup(results[w], set);
      const std::string name = f.format(set);
      const std::string group = fmt::format("monotone w={}->{}", w, w + 1);
      b.check({group, name + ".lo", prev.lo, next.lo, 1e-12, Comparison::at_least, true});
      b.check({group, name + ".hi", prev.hi, next.hi, 1e-12, Comparison::at_least, true});
    }
  }
  return b.take();
}

Manifest table3(const std::filesystem::path& dir) {
  const Evidence ev = load(dir, "example5.json");
  const auto bodies = normalized(ev);
  Builder b(ReproduceTarget::table3);
  b.rows("denoeux", denoeux_normalize(denoeux_combine(bodies)),
         {{{"A1"}, 0.13, 0.73}, {{"A2"}, 0.12, 0.67}, {{"A3"}, 0.05, 0.56}, {{}, 0, 0.43}}, 5e-3);
  b.rows("wang", wang_combine(bodies),
         {{{"A1"}, 0.22, 0.55}, {{"A2"}, 0.19, 0.48}, {{"A3"}, 0.08, 0.39}, {{}, 0, 0.21}}, 5e-3);
  b.rows("song", song_combine(bodies).result,
         {{{"A1"}, 0.36, 0.52}, {{"A2"}, 0.24, 0.39}, {{"A3"}, 0.18, 0.32}}, 5e-3, false);
  b.rows("leezhu w=3", leezhu_fold(ev.structures(), 3.0),
         {{{"A1"}, 0.05, 0.35}, {{"A2"}, 0, 0.31}, {{"A3"}, 0, 0.23}, {{}, 0, 0.24}}, 5e-3, false);
  return b.take();
}

Manifest table4(const std::filesystem::path& dir) {
  const Evidence ev = load(dir, "example5.json");
  const auto bodies = ev.structures();
  Builder b(ReproduceTarget::table4);
  const auto column = [&](Measure m, std::initializer_list<ExpectedRow> rows) {
    b.rows(std::string(measure_name(m)), proposed_combine(bodies, m).result, rows, 1e-3);
  };
  column(Measure::dubois_prade, {{{"A1"}, 0.3467, 0.4274},
                                 {{"A2"}, 0.2533, 0.3333},
                                 {{"A3"}, 0.1867, 0.2393},
                                 {{}, 0, 0.2133}});
  column(Measure::nguyen, {{{"A1"}, 0.3234, 0.5301},
                           {{"A2"}, 0.2962, 0.3614},
                           {{"A3"}, 0.1084, 0.2854},
                           {{}, 0, 0.0951}});
  column(Measure::deng, {{{"A1"}, 0.3467, 0.5128},
                         {{"A2"}, 0.2533, 0.3846},
                         {{"A3"}, 0.1026, 0.1867},
                         {{}, 0, 0.2133}});
  column(Measure::pal, {{{"A1"}, 0.3382, 0.5128},
                        {{"A2"}, 0.2690, 0.3846},
                        {{"A3"}, 0.1026, 0.2006},
                        {{}, 0, 0.1922}});
  column(Measure::qin, {{{"A1"}, 0.3382, 0.5128},
                        {{"A2"}, 0.2690, 0.3846},
                        {{"A3"}, 0.1026, 0.2006},
                        {{}, 0, 0.1922}});
  return b.take();
}

Manifest example4(const std::filesystem::path& dir) {
  const Evidence ev = load(dir, "example4.json");
  const auto bodies = ev.structures();
  const auto report = proposed_combine(bodies, Measure::pal);
  Builder b(ReproduceTarget::example4);
  b.masses("m1 max", bodies[0], report.bounds[0].max_masses, {0.2, 0.3, 0.2, 0.3}, 1e-2);
  b.masses("m1 min", bodies[0], report.bounds[0].min_masses, {0.5, 0.4, 0, 0.1}, 1e-2);
  b.masses("m2 max", bodies[1], report.bounds[1].max_masses, {0.2, 0.2, 0.3, 0.3}, 1e-2);
  b.masses("m2 min", bodies[1], report.bounds[1].min_masses, {0.5, 0.1, 0.4, 0}, 1e-2);
  b.rows("combined", report.result,
         {{{"A1"}, 0.49, 0.91}, {{"A1", "A2"}, 0.05, 0.21}, {{"A1", "A3"}, 0.04, 0.21}, {{}, 0, 0.09}},
         1e-2);
  return b.take();
}

Manifest example32(const std::filesystem::path& dir) {
  const Evidence ev = load(dir, "example32.json");
  const auto report = song_combine(ev.structures());
  const Frame& f = ev.frame;
  Builder b(ReproduceTarget::example32);
  const std::array<std::array<double, 3>, 2> points = {{{0.5, 0.3, 0.2}, {0.4, 0.3, 0.3}}};
  const std::array<std::array<double, 3>, 2> pignistic = {{{0.5666, 0.2167, 0.2167},
                                                           {0.5, 0.25, 0.25}}};
  for (std::size_t k = 0; k < 2; ++k) {
    const auto& body = report.normalized_inputs[k];
    for (std::size_t i = 0; i < 3; ++i) {
      const auto& e = body.entries()[i];
      b.interval(ev.bodies[k].name + " normalized", f, e.set, {points[k][i], points[k][i]}, e.mass,
                 1e-3);
    }
    for (std::size_t i = 0; i < 3; ++i) {
      const FocalSet set = FocalSet::singleton(i);
      Interval actual{0.0, 0.0};
      for (const auto& e : report.pignistic[k].entries()) {
        if (e.set == set) actual = e.mass;
      }
      b.interval(ev.bodies[k].name + " pignistic", f, set, {pignistic[k][i], pignistic[k][i]},
                 actual, 1e-3);
    }
  }
  const double combined_a = report.combined.at(0).mu;
  b.value("combined", "mu{A}", 0.5666, combined_a, 1e-3);
  b.value("combined", "mu{A} vs m1 pignistic", report.pignistic[0].entries()[0].mass.lo,
          combined_a, 1e-3);
  return b.take();
}

Manifest example33(const std::filesystem::path& dir) {
  const Evidence ev = load(dir, "example33.json");
  const auto bodies = ev.structures();
  const auto song = song_combine(bodies).result;
  std::vector<Bpa> points;
  for (const auto& body : normalized(ev)) points.push_back(body.to_bpa());
  const Bpa dempster = dempster_combine_n(points).bpa;
  const Frame& f = ev.frame;
  Builder b(ReproduceTarget::example33);
  const std::array<double, 3> song_expected = {0.6143, 0.2380, 0.1485};
  const std::array<double, 3> dempster_expected = {0.5714, 0.2571, 0.1714};
  for (std::size_t i = 0; i < 3; ++i) {
    const FocalSet set = FocalSet::singleton(i);
    const Interval s = lookup(song, set);
    b.interval("song", f, set, {song_expected[i], song_expected[i]}, s, 1e-3);
    double m = 0.0;
    for (const auto& e : dempster.entries()) {
      if (e.set == set) m = e.mass;
    }
    b.value("dempster", f.format(set), dempster_expected[i], m, 1e-3);
    b.check({"song vs dempster", f.format(set), m, s.lo, 1e-3, Comparison::differs, true});
  }
  return b.take();
}

std::string_view status(const CellCheck& c) {
  if (c.passed()) return "pass";
  return c.required ? "FAIL" : "differs (best-effort)";
}

std::string_view comparison_name(Comparison c) {
  switch (c) {
    case Comparison::within:
      return "within";
    case Comparison::at_least:
      return "at_least";
    case Comparison::differs:
      return "differs";
  }
  return "within";
}

}  // namespace

std::string_view target_name(ReproduceTarget target) {
  switch (target) {
    case ReproduceTarget::table2:
      return "table2";
    case ReproduceTarget::table3:
      return "table3";
    case ReproduceTarget::table4:
      return "table4";
    case ReproduceTarget::example4:
      return "example4";
    case ReproduceTarget::example32:
      return "example32";
    case ReproduceTarget::example33:
      return "example33";
  }
  return "unknown";
}

ReproduceTarget parse_target(std::string_view name) {
  for (ReproduceTarget t : kAllTargets) {
    if (target_name(t) == name) return t;
  }
  throw Error("unknown reproduce target '" + std::string(name) + "'");
}

bool CellCheck::passed() const {
  const double gap = std::abs(actual - expected);
  switch (comparison) {
    case Comparison::within:
      return gap <= tolerance;
    case Comparison::at_least:
      return actual >= expected - tolerance;
    case Comparison::differs:
      return gap > tolerance;
  }
  return false;
}

bool Manifest::passed() const { return failures() == 0; }

std::size_t Manifest::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks) {
    if (c.required && !c.passed()) ++n;
  }
  return n;
}

std::filesystem::path default_data_dir() { return IBELIEF_DATA_DIR; }

Manifest reproduce(ReproduceTarget target, const std::filesystem::path& data_dir) {
  switch (target) {
    case ReproduceTarget::table2:
      return table2(data_dir);
    case ReproduceTarget::table3:
      return table3(data_dir);
    case ReproduceTarget::table4:
      return table4(data_dir);
    case ReproduceTarget::example4:
      return example4(data_dir);
    case ReproduceTarget::example32:
      return example32(data_dir);
    case ReproduceTarget::example33:
      return example33(data_dir);
  }
  throw Error("unknown reproduce target");
}

json to_json(const Manifest& manifest) {
  json checks = json::array();
  for (const auto& c : manifest.checks) {
    checks.push_back({{"group", c.group},
                      {"cell", c.cell},
                      {"expected", c.expected},
                      {"actual", c.actual},
                      {"delta", c.delta()},
                      {"tolerance", c.tolerance},
                      {"comparison", comparison_name(c.comparison)},
                      {"required", c.required},
                      {"passed", c.passed()}});
  }
  return {{"format", kFormatVersion},
          {"target", target_name(manifest.target)},
          {"passed", manifest.passed()},
          {"failures", manifest.failures()},
          {"checks", checks}};
}

std::string render_manifest_table(const Manifest& manifest) {
  std::string out = fmt::format("reproduce {}\n", target_name(manifest.target));
  out += fmt::format("  {:<22} {:<26} {:>9} {:>9} {:>10} {:>8}  {}\n", "group", "cell",
                     "expected", "actual", "delta", "tol", "status");
  for (const auto& c : manifest.checks) {
    const std::string_view op = c.comparison == Comparison::at_least ? ">= "
                                : c.comparison == Comparison::differs ? "!= "
                                                                      : "";
    out += fmt::format("  {:<22} {:<26} {:>9} {:>9.4f} {:>+10.5f} {:>8.0e}  {}\n", c.group,
                       c.cell, fmt::format("{}{:.4f}", op, c.expected), c.actual, c.delta(),
                       c.tolerance, status(c));
  }
  out += fmt::format("{}: {} ({} required check(s) failed)\n", target_name(manifest.target),
                     manifest.passed() ? "PASS" : "FAIL", manifest.failures());
  return out;
}

std::string render_manifest_csv(const std::vector<Manifest>& manifests) {
  std::string out = "target,group,cell,expected,actual,delta,tolerance,comparison,required,passed\n";
  for (const auto& m : manifests) {
    for (const auto& c : m.checks) {
      out += fmt::format("{},{},{},{},{},{},{},{},{},{}\n", target_name(m.target),
                         csv_field(c.group), csv_field(c.cell), c.expected, c.actual, c.delta(),
                         c.tolerance, comparison_name(c.comparison), c.required, c.passed());
    }
  }
  return out;
}

}  // namespace ibelief
