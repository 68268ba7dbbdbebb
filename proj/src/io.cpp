#include "ibelief/io.hpp"

#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "ibelief/error.hpp"

namespace ibelief {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw Error(fmt::format("{}: {}", path, message));
}

const json& member(const json& obj, const std::string& path, const char* key) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, fmt::format("missing field '{}'", key));
  return *it;
}

double number(const json& value, const std::string& path) {
  if (!value.is_number()) fail(path, "expected a number");
  return value.get<double>();
}

std::vector<std::string> labels(const json& value, const std::string& path) {
  if (!value.is_array()) fail(path, "expected an array of labels");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    if (!value[i].is_string()) fail(fmt::format("{}[{}]", path, i), "expected a string");
    out.push_back(value[i].get<std::string>());
  }
  return out;
}

Frame parse_frame(const json& doc) {
  try {
    return Frame(labels(member(doc, "$", "frame"), "frame"));
  } catch (const Error& e) {
    fail("frame", e.what());
  }
}

}  // namespace

std::vector<IntervalBeliefStructure> Evidence::structures() const {
  std::vector<IntervalBeliefStructure> out;
  for (const auto& body : bodies) out.push_back(body.ibs);
  return out;
}

Evidence parse_evidence(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(fmt::format("malformed JSON: {}", e.what()));
  }
  if (!doc.is_object()) fail("$", "expected an object");
  const json& version = member(doc, "$", "format");
  if (!version.is_number_integer() || version.get<int>() != kFormatVersion) {
    fail("format", fmt::format("unsupported format version (expected {})", kFormatVersion));
  }
  Frame frame = parse_frame(doc);

  const json& bodies = member(doc, "$", "bodies");
  if (!bodies.is_array()) fail("bodies", "expected an array");
  if (bodies.empty()) fail("bodies", "no evidence");

  Evidence evidence{frame, {}};
  for (std::size_t b = 0; b < bodies.size(); ++b) {
    const std::string body_path = fmt::format("bodies[{}]", b);
    const json& body = bodies[b];
    const json& name_field = member(body, body_path, "name");
    if (!name_field.is_string()) fail(body_path + ".name", "expected a string");
    std::string name = name_field.get<std::string>();
    for (const auto& seen : evidence.bodies) {
      if (seen.name == name) fail(body_path + ".name", fmt::format("duplicate body name '{}'", name));
    }

    const json& masses = member(body, body_path, "masses");
    if (!masses.is_array() || masses.empty()) {
      fail(body_path + ".masses", "expected a non-empty array");
    }
    std::vector<IntervalBeliefStructure::Entry> entries;
    for (std::size_t k = 0; k < masses.size(); ++k) {
      const std::string path = fmt::format("{}.masses[{}]", body_path, k);
      const json& item = masses[k];
      FocalSet set;
      try {
        set = frame.focal_set(labels(member(item, path, "set"), path + ".set"));
      } catch (const Error& e) {
        const std::string what = e.what();
        if (what.rfind(path, 0) == 0) throw;
        fail(path + ".set", what);
      }
      if (set.empty()) fail(path + ".set", "focal sets must be non-empty");
      for (const auto& seen : entries) {
        if (seen.set == set) fail(path + ".set", fmt::format("duplicate focal set {}", frame.format(set)));
      }
      Interval mass;
      if (item.contains("mass")) {
        if (item.contains("lo") || item.contains("hi")) {
          fail(path, "give either 'mass' or 'lo'/'hi', not both");
        }
        mass.lo = mass.hi = number(item["mass"], path + ".mass");
      } else {
        mass.lo = number(member(item, path, "lo"), path + ".lo");
        mass.hi = number(member(item, path, "hi"), path + ".hi");
      }
      if (mass.lo > mass.hi) fail(path, fmt::format("lo > hi ({} > {})", mass.lo, mass.hi));
      if (mass.lo < 0.0 || mass.hi > 1.0) fail(path, "bounds must lie in [0, 1]");
      entries.push_back({set, mass});
    }
    evidence.bodies.push_back({std::move(name), IntervalBeliefStructure(frame, std::move(entries))});
  }
  return evidence;
}

Evidence load_evidence(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(fmt::format("cannot open '{}'", path.string()));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_evidence(buffer.str());
  } catch (const Error& e) {
    throw Error(fmt::format("{}: {}", path.string(), e.what()));
  }
}

json set_to_json(const Frame& frame, FocalSet set) { return frame.set_labels(set); }

FocalSet set_from_json(const Frame& frame, const json& value) {
  return frame.focal_set(labels(value, "set"));
}

json to_json(const Bpa& bpa) {
  json entries = json::array();
  for (const auto& e : bpa.entries()) {
    entries.push_back({{"set", set_to_json(bpa.frame(), e.set)}, {"mass", e.mass}});
  }
  return entries;
}

json to_json(const IntervalBeliefStructure& ibs) {
  json entries = json::array();
  for (const auto& e : ibs.entries()) {
    entries.push_back(
        {{"set", set_to_json(ibs.frame(), e.set)}, {"lo", e.mass.lo}, {"hi", e.mass.hi}});
  }
  return entries;
}

json to_json(const IntervalMassResult& result) {
  json entries = json::array();
  for (const auto& [set, m] : result.entries) {
    entries.push_back({{"set", set_to_json(result.frame, set)}, {"lo", m.lo}, {"hi", m.hi}});
  }
  json doc = {{"format", kFormatVersion},
              {"frame", result.frame.labels()},
              {"normalized", result.normalized},
              {"entries", std::move(entries)}};
  if (result.empty_mass) {
    doc["empty"] = {{"lo", result.empty_mass->lo}, {"hi", result.empty_mass->hi}};
  }
  return doc;
}

IntervalMassResult result_from_json(const json& doc) {
  const json& version = member(doc, "$", "format");
  if (!version.is_number_integer() || version.get<int>() != kFormatVersion) {
    fail("format", "unsupported format version");
  }
  IntervalMassResult out{parse_frame(doc), {}, std::nullopt, false};
  const json& normalized = member(doc, "$", "normalized");
  if (!normalized.is_boolean()) fail("normalized", "expected a boolean");
  out.normalized = normalized.get<bool>();
  const json& entries = member(doc, "$", "entries");
  if (!entries.is_array()) fail("entries", "expected an array");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string path = fmt::format("entries[{}]", i);
    const FocalSet set = out.frame.focal_set(labels(member(entries[i], path, "set"), path + ".set"));
    out.entries[set] = {number(member(entries[i], path, "lo"), path + ".lo"),
                        number(member(entries[i], path, "hi"), path + ".hi")};
  }
  if (doc.contains("empty")) {
    out.empty_mass = Interval{number(member(doc["empty"], "empty", "lo"), "empty.lo"),
                              number(member(doc["empty"], "empty", "hi"), "empty.hi")};
  }
  return out;
}

json to_json(const Evidence& evidence) {
  json bodies = json::array();
  for (const auto& body : evidence.bodies) {
    bodies.push_back({{"name", body.name}, {"masses", to_json(body.ibs)}});
  }
  return {{"format", kFormatVersion}, {"frame", evidence.frame.labels()}, {"bodies", bodies}};
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace ibelief
