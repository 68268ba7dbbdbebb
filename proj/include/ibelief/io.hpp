#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ibelief/bpa.hpp"
#include "ibelief/interval.hpp"

namespace ibelief {

inline constexpr int kFormatVersion = 1;

struct NamedBody {
  std::string name;
  IntervalBeliefStructure ibs;
};

struct Evidence {
  Frame frame;
  std::vector<NamedBody> bodies;

  std::vector<IntervalBeliefStructure> structures() const;
};

// Evidence file schema (format 1):
//   {"format": 1, "frame": ["A", "B", ...],
//    "bodies": [{"name": "m1",
//                "masses": [{"set": ["A"], "lo": 0.2, "hi": 0.5},
//                           {"set": ["A", "B"], "mass": 0.3}]}]}
// Errors carry the JSON path of the offending field, or the line and column
// for syntax errors.
Evidence parse_evidence(std::string_view text);
Evidence load_evidence(const std::filesystem::path& path);

nlohmann::json set_to_json(const Frame& frame, FocalSet set);
FocalSet set_from_json(const Frame& frame, const nlohmann::json& labels);

nlohmann::json to_json(const Bpa& bpa);
nlohmann::json to_json(const IntervalBeliefStructure& ibs);
nlohmann::json to_json(const IntervalMassResult& result);
IntervalMassResult result_from_json(const nlohmann::json& doc);
nlohmann::json to_json(const Evidence& evidence);

// RFC 4180 quoting when needed.
std::string csv_field(std::string_view text);

}  // namespace ibelief
