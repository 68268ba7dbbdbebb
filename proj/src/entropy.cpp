#include "ibelief/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "ibelief/error.hpp"

namespace ibelief {
namespace {

struct NamedMeasure {
  Measure measure;
  std::string_view name;
};

constexpr std::array<NamedMeasure, 10> kNames = {{
    {Measure::dubois_prade, "dubois-prade"},
    {Measure::nguyen, "nguyen"},
    {Measure::klir_ramer, "klir-ramer"},
    {Measure::klir_parviz, "klir-parviz"},
    {Measure::deng, "deng"},
    {Measure::jirousek_shenoy, "jirousek-shenoy"},
    {Measure::yager, "yager"},
    {Measure::hohle, "hohle"},
    {Measure::pal, "pal"},
    {Measure::qin, "qin"},
}};

// 0 * log2(1/0) := 0
double surprise(double mass) { return mass > 0.0 ? -mass * std::log2(mass) : 0.0; }

double log2_card(FocalSet set) { return std::log2(static_cast<double>(set.cardinality())); }

}  // namespace

std::string_view measure_name(Measure measure) {
  for (const auto& n : kNames) {
    if (n.measure == measure) return n.name;
  }
  return "unknown";
}

Measure parse_measure(std::string_view name) {
  for (const auto& n : kNames) {
    if (n.name == name) return n.measure;
  }
  throw Error("unknown measure '" + std::string(name) + "'");
}

bool is_separable(Measure measure) {
  return std::find(kSeparableMeasures.begin(), kSeparableMeasures.end(), measure) !=
         kSeparableMeasures.end();
}

double entropy(Measure measure, const Bpa& bpa) {
  const auto entries = bpa.entries();
  const double frame_size = static_cast<double>(bpa.frame().size());
  double h = 0.0;
  switch (measure) {
    case Measure::dubois_prade:
      for (const auto& e : entries) h += e.mass * log2_card(e.set);
      return h;
    case Measure::nguyen:
      for (const auto& e : entries) h += surprise(e.mass);
      return h;
    case Measure::klir_ramer:
    case Measure::klir_parviz:
      for (const auto& a : entries) {
        double inner = 0.0;
        for (const auto& b : entries) {
          const double overlap = (a.set & b.set).cardinality();
          const double denom =
              measure == Measure::klir_ramer ? b.set.cardinality() : a.set.cardinality();
          inner += b.mass * overlap / denom;
        }
        h -= a.mass * std::log2(inner);
      }
      return h;
    case Measure::deng:
      for (const auto& e : entries) {
        h += e.mass * std::log2(std::exp2(e.set.cardinality()) - 1.0) + surprise(e.mass);
      }
      return h;
    case Measure::jirousek_shenoy: {
      for (double p : plausibility_transform(bpa)) h += surprise(p);
      for (const auto& e : entries) h += e.mass * log2_card(e.set);
      return h;
    }
    case Measure::yager:
      for (const auto& e : entries) h -= e.mass * std::log2(pl(bpa, e.set));
      return h;
    case Measure::hohle:
      for (const auto& e : entries) h -= e.mass * std::log2(bel(bpa, e.set));
      return h;
    case Measure::pal:
      for (const auto& e : entries) h += e.mass * log2_card(e.set) + surprise(e.mass);
      return h;
    case Measure::qin:
      for (const auto& e : entries) {
        h += e.set.cardinality() / frame_size * e.mass * log2_card(e.set) + surprise(e.mass);
      }
      return h;
  }
  throw Error("unknown measure");
}

double SeparableTerm::operator()(double mass) const {
  return mass * weight + (log_term ? surprise(mass) : 0.0);
}

double SeparableTerm::slope(double mass) const {
  if (!log_term) return weight;
  if (mass <= 0.0) return std::numeric_limits<double>::infinity();
  return weight - std::log2(mass) - 1.0 / std::numbers::ln2;
}

std::vector<SeparableTerm> separable_profile(Measure measure,
                                             std::span<const FocalSet> focal_sets,
                                             const Frame& frame) {
  if (!is_separable(measure)) {
    throw Error("unsupported objective: " + std::string(measure_name(measure)) +
                " is not separable");
  }
  std::vector<SeparableTerm> out;
  out.reserve(focal_sets.size());
  const double frame_size = static_cast<double>(frame.size());
  for (FocalSet set : focal_sets) {
    const double card = set.cardinality();
    switch (measure) {
      case Measure::dubois_prade:
        out.push_back({std::log2(card), false});
        break;
      case Measure::nguyen:
        out.push_back({0.0, true});
        break;
      case Measure::deng:
        out.push_back({std::log2(std::exp2(card) - 1.0), true});
        break;
      case Measure::pal:
        out.push_back({std::log2(card), true});
        break;
      case Measure::qin:
        out.push_back({card / frame_size * std::log2(card), true});
        break;
      default:
        break;
    }
  }
  return out;
}

double separable_entropy(std::span<const SeparableTerm> profile, std::span<const double> masses) {
  double h = 0.0;
  for (std::size_t i = 0; i < profile.size(); ++i) h += profile[i](masses[i]);
  return h;
}

}  // namespace ibelief
