#pragma once

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "ibelief/bpa.hpp"

namespace ibelief {

// Belief entropy measures. Logarithms are base 2 throughout.
enum class Measure {
  dubois_prade,
  nguyen,
  klir_ramer,
  klir_parviz,
  deng,
  jirousek_shenoy,
  yager,
  hohle,
  pal,
  qin,
};

inline constexpr std::array kAllMeasures = {
    Measure::dubois_prade, Measure::nguyen, Measure::klir_ramer, Measure::klir_parviz,
    Measure::deng,         Measure::jirousek_shenoy, Measure::yager, Measure::hohle,
    Measure::pal,          Measure::qin,
};

// The measures that can be written as sum_A m(A) * (k_A - beta * log2 m(A)).
inline constexpr std::array kSeparableMeasures = {
    Measure::dubois_prade, Measure::nguyen, Measure::deng, Measure::pal, Measure::qin,
};

std::string_view measure_name(Measure measure);
// Throws Error("unknown measure ...").
Measure parse_measure(std::string_view name);
bool is_separable(Measure measure);

double entropy(Measure measure, const Bpa& bpa);

// Per-focal-set term of a separable measure: m * (weight - log2(m)) when
// log_term is set, m * weight otherwise.
struct SeparableTerm {
  double weight = 0.0;
  bool log_term = false;

  double operator()(double mass) const;
  // Derivative of the term with respect to mass; +inf at 0 for log terms.
  double slope(double mass) const;
};

// Throws Error("unsupported objective ...") for non-separable measures.
std::vector<SeparableTerm> separable_profile(Measure measure,
                                             std::span<const FocalSet> focal_sets,
                                             const Frame& frame);

double separable_entropy(std::span<const SeparableTerm> profile, std::span<const double> masses);

}  // namespace ibelief
