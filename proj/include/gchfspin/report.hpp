#pragma once

#include <optional>
#include <ostream>
#include <string>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "gchfspin/collinearity.hpp"
#include "gchfspin/determinant.hpp"
#include "gchfspin/spin_analysis.hpp"

namespace gchfspin {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr double kReportIdentityTol = 1e-10;

struct AxisVariance {
  Eigen::Vector3d axis;
  double col = 0.0;
};

struct AnalysisReport {
  std::string source_path;
  std::string source_sha256;
  std::string tool_version = kToolVersion;

  ElectronCounts counts;
  double sz = 0.0;
  double sz2 = 0.0;
  double sminus_splus = 0.0;
  double splus_sminus = 0.0;
  Complex splus;
  double s2 = 0.0;
  S2Decomposition decomposition;
  SpinVector spin;
  CollinearityResult collinearity;
  std::optional<AxisVariance> requested_axis;
  std::optional<S2Decomposition> aligned_decomposition;
};

struct AnalysisOptions {
  std::optional<Eigen::Vector3d> axis;
  bool align_optimal = false;
};

/// Evaluates every quantity and re-asserts the decomposition-sum and
/// trace identities (InvariantViolation above 1e-10).
AnalysisReport analyze(const SpinorDeterminant& det,
                       const AnalysisOptions& options = {});

nlohmann::json to_json(const CollinearityResult& result);
nlohmann::json to_json(const AnalysisReport& report);

/// Six-decimal text tables.
void write_text(std::ostream& out, const CollinearityResult& result);
void write_text(std::ostream& out, const AnalysisReport& report);

}  // namespace gchfspin
