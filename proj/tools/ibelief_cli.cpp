#include <cstdio>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "ibelief/error.hpp"
#include "ibelief/io.hpp"
#include "ibelief/reproduce.hpp"
#include "ibelief/run.hpp"

namespace {

struct Options {
  std::string file;
  std::string method = "proposed";
  std::optional<std::string> measure;
  std::optional<double> w;
  bool no_normalize = false;
  std::string format = "table";
  double tolerance = 1e-9;
  std::string min_tie = "equal-split";
  std::string data_dir = ibelief::default_data_dir().string();
  std::vector<std::string> targets;
};

ibelief::MinTieRule parse_tie_rule(const std::string& name) {
  if (name == "equal-split") return ibelief::MinTieRule::equal_split;
  if (name == "lexicographic") return ibelief::MinTieRule::lexicographically_first;
  throw ibelief::Error("unknown --min-tie rule '" + name + "'");
}

ibelief::RunConfig make_config(const Options& o) {
  ibelief::RunConfig config;
  config.method = ibelief::parse_method(o.method);
  if (o.measure) config.measure = ibelief::parse_measure(*o.measure);
  config.w = o.w;
  config.normalize_inputs = !o.no_normalize;
  config.format = ibelief::parse_format(o.format);
  config.tolerance = o.tolerance;
  config.tie_rule = parse_tie_rule(o.min_tie);
  return config;
}

int run_reproduce(const Options& o) {
  std::vector<ibelief::ReproduceTarget> targets;
  if (o.targets.empty() || (o.targets.size() == 1 && o.targets[0] == "all")) {
    targets.assign(ibelief::kAllTargets.begin(), ibelief::kAllTargets.end());
  } else {
    for (const auto& t : o.targets) targets.push_back(ibelief::parse_target(t));
  }
  const auto format = ibelief::parse_format(o.format);
  std::vector<ibelief::Manifest> manifests;
  bool ok = true;
  for (auto t : targets) {
    manifests.push_back(ibelief::reproduce(t, o.data_dir));
    ok = ok && manifests.back().passed();
  }
  if (format == ibelief::OutputFormat::csv) {
    fmt::print("{}", ibelief::render_manifest_csv(manifests));
  } else if (format == ibelief::OutputFormat::json) {
    nlohmann::json doc = nlohmann::json::array();
    for (const auto& m : manifests) doc.push_back(ibelief::to_json(m));
    fmt::print("{}\n", doc.dump(2));
  } else {
    for (const auto& m : manifests) fmt::print("{}\n", ibelief::render_manifest_table(m));
  }
  return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combination and normalization of interval-valued belief structures"};
  app.require_subcommand(1);
  Options o;

  const auto add_file = [&](CLI::App* cmd) {
    cmd->add_option("file", o.file, "Evidence file (JSON)")->required()->check(CLI::ExistingFile);
  };
  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"table", "json", "csv"}));
  };
  const auto add_engine_flags = [&](CLI::App* cmd) {
    cmd->add_option("--measure", o.measure, "Uncertainty measure id (proposed method)");
    cmd->add_flag("--no-normalize", o.no_normalize, "Reject non-normalized inputs instead of normalizing");
    cmd->add_option("--tolerance", o.tolerance, "Tolerance echoed in reports");
    cmd->add_option("--min-tie", o.min_tie, "Minimum-entropy tie rule")
        ->check(CLI::IsMember({"equal-split", "lexicographic"}));
  };

  auto* validate = app.add_subcommand("validate", "Check validity and normalization of each body");
  add_file(validate);
  add_format(validate);

  auto* normalize = app.add_subcommand("normalize", "Normalize each body");
  add_file(normalize);
  add_format(normalize);

  auto* entropy = app.add_subcommand("entropy", "Entropy values or bounds of each body");
  add_file(entropy);
  add_format(entropy);
  entropy->add_option("--measure", o.measure, "Uncertainty measure id");
  entropy->add_flag("--no-normalize", o.no_normalize, "Use the bodies as given");

  auto* combine = app.add_subcommand("combine", "Combine all bodies with one method");
  add_file(combine);
  add_format(combine);
  add_engine_flags(combine);
  combine->add_option("--method", o.method, "Combination method")
      ->check(CLI::IsMember({"proposed", "wang", "denoeux", "leezhu", "song", "dempster"}));
  combine->add_option("--w", o.w, "Lee-Zhu norm parameter");

  auto* compare = app.add_subcommand("compare", "Denoeux, Wang, Song and proposed side by side");
  add_file(compare);
  add_format(compare);
  add_engine_flags(compare);

  auto* reproduce = app.add_subcommand("reproduce", "Check the engines against reference values");
  reproduce->add_option("targets", o.targets, "table2 table3 table4 example4 example32 example33 | all");
  reproduce->add_option("--data-dir", o.data_dir, "Directory with the bundled example files");
  add_format(reproduce);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*reproduce) return run_reproduce(o);

    const ibelief::Evidence evidence = ibelief::load_evidence(o.file);
    const auto format = ibelief::parse_format(o.format);
    ibelief::Rendered out;
    if (*validate) {
      out = ibelief::run_validate(format, evidence);
    } else if (*normalize) {
      out = ibelief::run_normalize(format, evidence);
    } else if (*entropy) {
      std::optional<ibelief::Measure> measure;
      if (o.measure) measure = ibelief::parse_measure(*o.measure);
      out = ibelief::run_entropy(format, measure, !o.no_normalize, evidence);
    } else if (*combine) {
      out = ibelief::run_combine(make_config(o), evidence);
    } else {
      auto config = make_config(o);
      out = ibelief::run_compare(config, evidence);
    }
    fmt::print("{}", out.text);
    return 0;
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return 1;
  }
}
