#include "ibelief/run.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <utility>

#include <fmt/format.h>

#include "ibelief/error.hpp"
#include "ibelief/fusion.hpp"
#include "ibelief/reference_methods.hpp"

namespace ibelief {
namespace {

using nlohmann::json;

constexpr std::array<std::pair<Method, std::string_view>, 6> kMethods = {{
    {Method::proposed, "proposed"},
    {Method::wang, "wang"},
    {Method::denoeux, "denoeux"},
    {Method::leezhu, "leezhu"},
    {Method::song, "song"},
    {Method::dempster, "dempster"},
}};

std::string fixed4(double v) {
  // Avoid printing "-0.0000" for tiny negative noise.
  if (std::abs(v) < 5e-5) v = 0.0;
  return fmt::format("{:.4f}", v);
}

std::string show(const Interval& m) { return fmt::format("[{}, {}]", fixed4(m.lo), fixed4(m.hi)); }

std::string action_name(const NormalizeOutcome& outcome) {
  if (outcome.rescaled && outcome.tightened) return "rescaled+tightened";
  if (outcome.rescaled) return "rescaled";
  if (outcome.tightened) return "tightened";
  return "none";
}

struct PreparedInputs {
  std::vector<IntervalBeliefStructure> bodies;
  std::vector<std::string> actions;
};

PreparedInputs prepare(const Evidence& evidence, bool normalize_inputs) {
  PreparedInputs out;
  for (const auto& body : evidence.bodies) {
    if (normalize_inputs) {
      auto outcome = normalize_traced(body.ibs);
      out.actions.push_back(action_name(outcome));
      out.bodies.push_back(std::move(outcome.result));
    } else {
      out.actions.push_back("none");
      out.bodies.push_back(body.ibs);
    }
  }
  return out;
}

json masses_json(const IntervalBeliefStructure& ibs, const MassVector& masses) {
  json out = json::array();
  const auto sets = ibs.focal_sets();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    out.push_back({{"set", set_to_json(ibs.frame(), sets[i])}, {"mass", masses[i]}});
  }
  return out;
}

std::string masses_text(const IntervalBeliefStructure& ibs, const MassVector& masses) {
  std::string out;
  const auto sets = ibs.focal_sets();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (!out.empty()) out += "  ";
    out += fmt::format("{}={}", ibs.frame().format(sets[i]), fixed4(masses[i]));
  }
  return out;
}

std::string bpa_text(const Bpa& bpa) {
  std::string out;
  for (const auto& e : bpa.entries()) {
    if (!out.empty()) out += "  ";
    out += fmt::format("{}={}", bpa.frame().format(e.set), fixed4(e.mass));
  }
  return out;
}

std::string ibs_text(const IntervalBeliefStructure& ibs) {
  std::string out;
  for (const auto& e : ibs.entries()) {
    if (!out.empty()) out += "  ";
    out += fmt::format("{}={}", ibs.frame().format(e.set), show(e.mass));
  }
  return out;
}

std::string result_table(const IntervalMassResult& result) {
  std::size_t width = 9;
  for (const auto& [set, m] : result.entries) width = std::max(width, result.frame.format(set).size());
  std::string out = fmt::format("{:<{}}  {:>8}  {:>8}\n", "focal set", width, "lo", "hi");
  for (const auto& [set, m] : result.entries) {
    out += fmt::format("{:<{}}  {:>8}  {:>8}\n", result.frame.format(set), width, fixed4(m.lo),
                       fixed4(m.hi));
  }
  if (result.empty_mass) {
    out += fmt::format("{:<{}}  {:>8}  {:>8}\n", "{}", width, fixed4(result.empty_mass->lo),
                       fixed4(result.empty_mass->hi));
  }
  return out;
}

std::string csv_rows(std::string_view label, const IntervalMassResult& result) {
  std::string out;
  for (const auto& [set, m] : result.entries) {
    out += fmt::format("{},{},{},{}\n", csv_field(label), csv_field(result.frame.format(set)), m.lo,
                       m.hi);
  }
  return out;
}

constexpr std::string_view kCsvHeader = "body/method,focal_set,lo,hi\n";

struct EngineOutput {
  explicit EngineOutput(IntervalMassResult r) : result(std::move(r)) {}

  IntervalMassResult result;
  json details = json::object();
  std::string details_text;
};

EngineOutput run_engine(const RunConfig& config, const Evidence& evidence,
                        const PreparedInputs& inputs) {
  const auto& bodies = inputs.bodies;
  switch (config.method) {
    case Method::proposed: {
      const Measure measure = config.measure.value_or(Measure::pal);
      ProposedOptions options;
      options.normalize_inputs = false;
      options.tie_rule = config.tie_rule;
      auto report = proposed_combine(bodies, measure, options);
      EngineOutput out{report.result};
      json per_body = json::array();
      std::string text = "entropy-extreme BPAs per body:\n";
      for (std::size_t i = 0; i < bodies.size(); ++i) {
        const auto& b = report.bounds[i];
        per_body.push_back({{"name", evidence.bodies[i].name},
                            {"m_max", masses_json(bodies[i], b.max_masses)},
                            {"m_min", masses_json(bodies[i], b.min_masses)},
                            {"h_max", b.h_max},
                            {"h_min", b.h_min},
                            {"min_tie", b.min_tie}});
        text += fmt::format("  {} m_max: {}  (H = {})\n", evidence.bodies[i].name,
                            masses_text(bodies[i], b.max_masses), fixed4(b.h_max));
        text += fmt::format("  {} m_min: {}  (H = {}{})\n", evidence.bodies[i].name,
                            masses_text(bodies[i], b.min_masses), fixed4(b.h_min),
                            b.min_tie ? ", tied vertices merged" : "");
      }
      out.details = {{"bodies", per_body},
                     {"max_fold", {{"bpa", to_json(report.max_fold.bpa)},
                                   {"conflict", report.max_fold.diagnostics.conflict}}},
                     {"min_fold", {{"bpa", to_json(report.min_fold.bpa)},
                                   {"conflict", report.min_fold.diagnostics.conflict}}},
                     {"combined", to_json(report.combined)},
                     {"output_renormalized", report.output_renormalized}};
      text += fmt::format("max fold: {}  (K = {})\n", bpa_text(report.max_fold.bpa),
                          fixed4(report.max_fold.diagnostics.conflict));
      text += fmt::format("min fold: {}  (K = {})\n", bpa_text(report.min_fold.bpa),
                          fixed4(report.min_fold.diagnostics.conflict));
      text += fmt::format("output renormalized: {}\n", report.output_renormalized ? "yes" : "no");
      out.details_text = std::move(text);
      return out;
    }
    case Method::wang:
      return EngineOutput(wang_combine(bodies));
    case Method::denoeux: {
      const auto raw = denoeux_combine(bodies);
      EngineOutput out{denoeux_normalize(raw)};
      out.details = {{"unnormalized", to_json(raw)}};
      out.details_text = "unnormalized bounds:\n" + result_table(raw);
      return out;
    }
    case Method::leezhu: {
      const double w = config.w.value_or(3.0);
      IntervalMassResult acc = leezhu_combine(bodies[0], bodies[1], {w});
      for (std::size_t i = 2; i < bodies.size(); ++i) {
        acc = leezhu_combine(acc.to_ibs(), bodies[i], {w});
      }
      return EngineOutput(std::move(acc));
    }
    case Method::song: {
      auto report = song_combine(bodies);
      EngineOutput out{report.result};
      json pign = json::array();
      std::string text = "pignistic intervals per body:\n";
      for (std::size_t i = 0; i < bodies.size(); ++i) {
        pign.push_back({{"name", evidence.bodies[i].name}, {"masses", to_json(report.pignistic[i])}});
        text += fmt::format("  {}: {}\n", evidence.bodies[i].name, ibs_text(report.pignistic[i]));
      }
      json ifs = json::array();
      text += "combined IFS:\n";
      for (const auto& e : report.combined) {
        ifs.push_back({{"target", set_to_json(evidence.frame, e.target)},
                       {"mu", e.mu},
                       {"gamma", e.gamma},
                       {"pi", e.pi()}});
        text += fmt::format("  <{}, {}, {}>\n", evidence.frame.format(e.target), fixed4(e.mu),
                            fixed4(e.gamma));
      }
      out.details = {{"pignistic", pign}, {"combined_ifs", ifs}};
      out.details_text = std::move(text);
      return out;
    }
    case Method::dempster: {
      std::vector<Bpa> points;
      for (const auto& body : bodies) {
        if (!body.degenerate()) throw Error("dempster needs point-mass bodies (lo = hi)");
        points.push_back(body.to_bpa());
      }
      auto combined = dempster_combine_n(points);
      IntervalMassResult result{evidence.frame, {}, std::nullopt, false};
      for (const auto& e : combined.bpa.entries()) result.entries[e.set] = {e.mass, e.mass};
      result.refresh_normalized();
      EngineOutput out{std::move(result)};
      out.details = {{"conflict", combined.diagnostics.conflict}};
      out.details_text = fmt::format("conflict K = {}\n", fixed4(combined.diagnostics.conflict));
      return out;
    }
  }
  throw Error("unknown method");
}

}  // namespace

std::string_view method_name(Method method) {
  for (const auto& [m, name] : kMethods) {
    if (m == method) return name;
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  for (const auto& [m, n] : kMethods) {
    if (n == name) return m;
  }
  throw Error("unknown method '" + std::string(name) + "'");
}

std::string_view format_name(OutputFormat format) {
  switch (format) {
    case OutputFormat::table:
      return "table";
    case OutputFormat::json:
      return "json";
    case OutputFormat::csv:
      return "csv";
  }
  return "table";
}

OutputFormat parse_format(std::string_view name) {
  if (name == "table") return OutputFormat::table;
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  throw Error("unknown output format '" + std::string(name) + "'");
}

void validate_config(const RunConfig& config) {
  if (config.w && config.method != Method::leezhu) {
    throw Error("--w only applies to --method leezhu");
  }
  if (config.measure && config.method != Method::proposed) {
    throw Error("--measure only applies to --method proposed");
  }
  if (config.measure && !is_separable(*config.measure)) {
    throw Error("unsupported objective: " + std::string(measure_name(*config.measure)) +
                " is not separable");
  }
  if (config.w && !(*config.w > 0.0)) throw Error("--w must be positive");
  if (!(config.tolerance > 0.0)) throw Error("--tolerance must be positive");
}

Rendered run_combine(const RunConfig& config, const Evidence& evidence) {
  validate_config(config);
  if (evidence.bodies.size() < 2 && config.method != Method::dempster) {
    throw Error("combination needs at least two bodies of evidence");
  }
  // Lee and Zhu's operators are defined on raw intervals.
  const bool normalize_inputs = config.normalize_inputs && config.method != Method::leezhu;
  const PreparedInputs inputs = prepare(evidence, normalize_inputs);
  const EngineOutput engine = run_engine(config, evidence, inputs);

  Rendered out;
  json input_docs = json::array();
  for (std::size_t i = 0; i < evidence.bodies.size(); ++i) {
    input_docs.push_back({{"name", evidence.bodies[i].name},
                          {"masses", to_json(evidence.bodies[i].ibs)},
                          {"normalization", inputs.actions[i]}});
  }
  out.json = {{"format", kFormatVersion},
              {"command", "combine"},
              {"method", method_name(config.method)},
              {"tolerance", config.tolerance},
              {"frame", evidence.frame.labels()},
              {"inputs", input_docs},
              {"result", to_json(engine.result)},
              {"details", engine.details}};
  if (config.method == Method::proposed) {
    out.json["measure"] = measure_name(config.measure.value_or(Measure::pal));
  }
  if (config.method == Method::leezhu) out.json["w"] = config.w.value_or(3.0);

  switch (config.format) {
    case OutputFormat::json:
      out.text = out.json.dump(2) + "\n";
      break;
    case OutputFormat::csv:
      out.text = std::string(kCsvHeader) + csv_rows(method_name(config.method), engine.result);
      break;
    case OutputFormat::table: {
      std::string text = fmt::format("method: {}", method_name(config.method));
      if (config.method == Method::proposed) {
        text += fmt::format(" (measure: {})", measure_name(config.measure.value_or(Measure::pal)));
      }
      if (config.method == Method::leezhu) text += fmt::format(" (w = {})", config.w.value_or(3.0));
      text += fmt::format("\ntolerance: {}\ninputs:\n", config.tolerance);
      for (std::size_t i = 0; i < evidence.bodies.size(); ++i) {
        text += fmt::format("  {}: {}  [normalization: {}]\n", evidence.bodies[i].name,
                            ibs_text(evidence.bodies[i].ibs), inputs.actions[i]);
      }
      text += engine.details_text;
      text += "result:\n" + result_table(engine.result);
      text += fmt::format("result normalized: {}\n", engine.result.normalized ? "yes" : "no");
      out.text = std::move(text);
      break;
    }
  }
  return out;
}

Rendered run_compare(const RunConfig& config, const Evidence& evidence) {
  if (evidence.bodies.size() < 2) throw Error("comparison needs at least two bodies of evidence");
  const Measure measure = config.measure.value_or(Measure::pal);
  if (!is_separable(measure)) {
    throw Error("unsupported objective: " + std::string(measure_name(measure)) + " is not separable");
  }
  const PreparedInputs inputs = prepare(evidence, config.normalize_inputs);

  std::vector<std::pair<std::string, IntervalMassResult>> columns;
  columns.emplace_back("denoeux", denoeux_normalize(denoeux_combine(inputs.bodies)));
  columns.emplace_back("wang", wang_combine(inputs.bodies));
  columns.emplace_back("song", song_combine(inputs.bodies).result);
  ProposedOptions options;
  options.tie_rule = config.tie_rule;
  columns.emplace_back(fmt::format("proposed:{}", measure_name(measure)),
                       proposed_combine(inputs.bodies, measure, options).result);

  Rendered out;
  json results = json::object();
  for (const auto& [name, result] : columns) results[name] = to_json(result);
  out.json = {{"format", kFormatVersion},
              {"command", "compare"},
              {"measure", measure_name(measure)},
              {"tolerance", config.tolerance},
              {"frame", evidence.frame.labels()},
              {"results", results}};

  switch (config.format) {
    case OutputFormat::json:
      out.text = out.json.dump(2) + "\n";
      break;
    case OutputFormat::csv: {
      std::string text(kCsvHeader);
      for (const auto& [name, result] : columns) text += csv_rows(name, result);
      out.text = std::move(text);
      break;
    }
    case OutputFormat::table: {
      std::set<FocalSet> rows;
      for (const auto& [name, result] : columns) {
        for (const auto& [set, m] : result.entries) rows.insert(set);
      }
      std::size_t width = 9;
      for (FocalSet set : rows) width = std::max(width, evidence.frame.format(set).size());
      std::string text = fmt::format("{:<{}}", "focal set", width);
      for (const auto& [name, result] : columns) text += fmt::format("  {:<18}", name);
      text += "\n";
      for (FocalSet set : rows) {
        text += fmt::format("{:<{}}", evidence.frame.format(set), width);
        for (const auto& [name, result] : columns) {
          auto it = result.entries.find(set);
          text += fmt::format("  {:<18}", it == result.entries.end() ? "-" : show(it->second));
        }
        text += "\n";
      }
      out.text = std::move(text);
      break;
    }
  }
  return out;
}

Rendered run_validate(OutputFormat format, const Evidence& evidence) {
  Rendered out;
  json bodies = json::array();
  std::string table;
  std::string csv = "body,valid,normalized,reason\n";
  for (const auto& body : evidence.bodies) {
    const auto verdict = validate_ibs(body.ibs);
    const bool normalized = verdict.valid && is_normalized(body.ibs);
    bodies.push_back({{"name", body.name},
                      {"valid", verdict.valid},
                      {"normalized", normalized},
                      {"reason", verdict.reason}});
    table += fmt::format("{}: {}{}, {}\n", body.name, verdict.valid ? "valid" : "invalid",
                         verdict.valid ? "" : " (" + verdict.reason + ")",
                         normalized ? "normalized" : "not normalized");
    csv += fmt::format("{},{},{},{}\n", csv_field(body.name), verdict.valid, normalized,
                       csv_field(verdict.reason));
  }
  out.json = {{"format", kFormatVersion}, {"command", "validate"}, {"bodies", bodies}};
  out.text = format == OutputFormat::json ? out.json.dump(2) + "\n"
             : format == OutputFormat::csv ? csv
                                           : table;
  return out;
}

Rendered run_normalize(OutputFormat format, const Evidence& evidence) {
  Rendered out;
  json bodies = json::array();
  std::string table;
  std::string csv(kCsvHeader);
  for (const auto& body : evidence.bodies) {
    const auto outcome = normalize_traced(body.ibs);
    bodies.push_back({{"name", body.name},
                      {"masses", to_json(outcome.result)},
                      {"normalization", action_name(outcome)}});
    table += fmt::format("{} [normalization: {}]\n", body.name, action_name(outcome));
    for (const auto& e : outcome.result.entries()) {
      table += fmt::format("  {:<12} {}\n", evidence.frame.format(e.set), show(e.mass));
      csv += fmt::format("{},{},{},{}\n", csv_field(body.name),
                         csv_field(evidence.frame.format(e.set)), e.mass.lo, e.mass.hi);
    }
  }
  out.json = {{"format", kFormatVersion},
              {"command", "normalize"},
              {"frame", evidence.frame.labels()},
              {"bodies", bodies}};
  out.text = format == OutputFormat::json ? out.json.dump(2) + "\n"
             : format == OutputFormat::csv ? csv
                                           : table;
  return out;
}

Rendered run_entropy(OutputFormat format, std::optional<Measure> measure, bool normalize_inputs,
                     const Evidence& evidence) {
  const PreparedInputs inputs = prepare(evidence, normalize_inputs);
  Rendered out;
  json bodies = json::array();
  std::string table;
  std::string csv = "body,measure,h_min,h_max\n";
  for (std::size_t i = 0; i < inputs.bodies.size(); ++i) {
    const auto& ibs = inputs.bodies[i];
    const std::string& name = evidence.bodies[i].name;
    json values = json::array();
    table += fmt::format("{}{}\n", name, ibs.degenerate() ? " (point masses)" : "");
    std::vector<Measure> measures;
    if (measure) {
      measures.push_back(*measure);
    } else if (ibs.degenerate()) {
      measures.assign(kAllMeasures.begin(), kAllMeasures.end());
    } else {
      measures.assign(kSeparableMeasures.begin(), kSeparableMeasures.end());
    }
    for (Measure m : measures) {
      double h_min = 0.0;
      double h_max = 0.0;
      if (ibs.degenerate()) {
        h_min = h_max = entropy(m, ibs.to_bpa());
        table += fmt::format("  {:<16} {}\n", measure_name(m), fixed4(h_min));
      } else {
        const auto bounds = entropy_bounds(ibs, m);
        h_min = bounds.h_min;
        h_max = bounds.h_max;
        table += fmt::format("  {:<16} [{}, {}]\n", measure_name(m), fixed4(h_min), fixed4(h_max));
      }
      values.push_back({{"measure", measure_name(m)}, {"h_min", h_min}, {"h_max", h_max}});
      csv += fmt::format("{},{},{},{}\n", csv_field(name), measure_name(m), h_min, h_max);
    }
    bodies.push_back({{"name", name}, {"normalization", inputs.actions[i]}, {"entropy", values}});
  }
  out.json = {{"format", kFormatVersion}, {"command", "entropy"}, {"bodies", bodies}};
  out.text = format == OutputFormat::json ? out.json.dump(2) + "\n"
             : format == OutputFormat::csv ? csv
                                           : table;
  return out;
}

}  // namespace ibelief
