#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qes/rational.hpp"

namespace qes::verify {

struct CheckResult {
  std::string name;
  int criterion = 0;
  bool passed = false;
  std::string summary;
  nlohmann::json witnesses = nlohmann::json::array();
};

struct Options {
  /// Restrict to one check by name (see check_names()).
  std::optional<std::string> only;
  /// Replaces the gauge exponent 1/2 - b in the closure sweep.
  std::optional<Rational> injected_exponent;
  std::uint64_t seed = 2002;
};

// Tolerances of the acceptance criteria.
inline constexpr double kClosedFormTol = 1e-9;
inline constexpr double kOscillatorTol = 1e-8;
inline constexpr double kDecouplingTol = 1e-8;
inline constexpr double kCrossingTol = 1e-6;
inline constexpr double kSplitGap = 1e-3;
inline constexpr double kTraceTol = 1e-9;
inline constexpr double kDeterminantTol = 1e-8;
inline constexpr double kSimilarityTol = 1e-8;

/// In criterion order: reference-matrices, degenerate, oscillator, counting,
/// closure, negative-gauge, raising, decoupling, figure, eigensolver.
const std::vector<std::string>& check_names();

/// Throws InvalidParams for an unknown name in options.only.
std::vector<CheckResult> run(const Options& options = {});

nlohmann::json report_json(const std::vector<CheckResult>& results);

}  // namespace qes::verify
