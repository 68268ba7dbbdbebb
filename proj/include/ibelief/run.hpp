#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ibelief/entropy.hpp"
#include "ibelief/entropy_optimize.hpp"
#include "ibelief/io.hpp"

namespace ibelief {

enum class Method { proposed, wang, denoeux, leezhu, song, dempster };
enum class OutputFormat { table, json, csv };

std::string_view method_name(Method method);
Method parse_method(std::string_view name);
std::string_view format_name(OutputFormat format);
OutputFormat parse_format(std::string_view name);

struct RunConfig {
  Method method = Method::proposed;
  std::optional<Measure> measure;  // proposed only; defaults to pal
  std::optional<double> w;         // leezhu only; defaults to 3
  bool normalize_inputs = true;
  OutputFormat format = OutputFormat::table;
  double tolerance = 1e-9;  // echoed in reports
  MinTieRule tie_rule = MinTieRule::equal_split;
};

// Throws when a parameter is given to a method that does not use it.
void validate_config(const RunConfig& config);

// A finished command: the JSON document is the full-precision record, `text`
// is its rendering in the requested format.
struct Rendered {
  nlohmann::json json;
  std::string text;
};

Rendered run_combine(const RunConfig& config, const Evidence& evidence);
Rendered run_compare(const RunConfig& config, const Evidence& evidence);
Rendered run_validate(OutputFormat format, const Evidence& evidence);
Rendered run_normalize(OutputFormat format, const Evidence& evidence);
Rendered run_entropy(OutputFormat format, std::optional<Measure> measure,
                     bool normalize_inputs, const Evidence& evidence);

}  // namespace ibelief
