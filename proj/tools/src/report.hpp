#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "minsurf/curvature.hpp"
#include "minsurf/ends.hpp"
#include "minsurf/weierstrass.hpp"

namespace minsurf::cli {

std::string tool_version();

// 64-bit FNV-1a of the raw input bytes, as 16 hex digits.
std::string fnv1a64(std::string_view bytes);

struct EndRecord {
  EndAnalysis analysis;
  std::optional<int> rotation_numeric;
  std::string rotation_error;
};

struct AnalysisReport {
  std::string label;
  std::string input_hash;
  int n = 0;
  Validation validation;
  std::vector<SpherePoint> punctures;
  CurvatureReport curvature;
  std::vector<EndRecord> ends;

  bool all_ends_catenoid_or_planar = false;
  bool all_ends_embedded = false;
  bool main_theorem_consistent = false;
};

// Rotation radii used for the numeric index in reports.
inline constexpr double kReportRadii[] = {1e2, 1e3, 1e4};

// Runs the full pipeline. The datum must already pass validate().
AnalysisReport analyze(const WeierstrassData& w, std::string_view input_bytes);

// Pretty-printed JSON document, keys in a fixed order.
std::string to_json(const AnalysisReport& r);
std::string summary(const AnalysisReport& r);

// One diagnostic line per check, for verify and for refused analyses.
std::string describe(const WeierstrassData& w, const Validation& v);

}  // namespace minsurf::cli
