#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace ibelief {

enum class ReproduceTarget { table2, table3, table4, example4, example32, example33 };

inline constexpr std::array<ReproduceTarget, 6> kAllTargets = {
    ReproduceTarget::table2,  ReproduceTarget::table3,    ReproduceTarget::table4,
    ReproduceTarget::example4, ReproduceTarget::example32, ReproduceTarget::example33,
};

std::string_view target_name(ReproduceTarget target);
ReproduceTarget parse_target(std::string_view name);

enum class Comparison {
  within,    // |actual - expected| <= tolerance
  at_least,  // actual >= expected - tolerance
  differs,   // |actual - expected| > tolerance
};

struct CellCheck {
  std::string group;  // column or quantity, e.g. "pal" or "m1 max"
  std::string cell;   // e.g. "{A1}.lo"
  double expected = 0.0;
  double actual = 0.0;
  double tolerance = 0.0;
  Comparison comparison = Comparison::within;
  bool required = true;  // best-effort cells are reported but never fail the manifest

  double delta() const { return actual - expected; }
  bool passed() const;
};

struct Manifest {
  ReproduceTarget target;
  std::vector<CellCheck> checks;

  bool passed() const;  // every required check passes
  std::size_t failures() const;
};

// Directory holding the bundled example files.
std::filesystem::path default_data_dir();

// Runs the engines on the bundled input for `target` and compares with the
// embedded reference values. Engine errors propagate.
Manifest reproduce(ReproduceTarget target, const std::filesystem::path& data_dir = default_data_dir());

nlohmann::json to_json(const Manifest& manifest);
std::string render_manifest_table(const Manifest& manifest);
std::string render_manifest_csv(const std::vector<Manifest>& manifests);

}  // namespace ibelief
