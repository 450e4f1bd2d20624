#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace gchfspin {

/// Published spin analysis of a GCHF H2O+ determinant (z axis perpendicular to
/// the molecular plane), printed to six decimals. The wave function itself is
/// not available; these numbers only support internal-consistency checks.
struct H2OCationReference {
  double n_alpha = 4.999546;
  double n_beta = 4.000454;
  double rohf_term = 0.749091;
  double z_noncollinearity = 0.000461;
  double xy_perpendicularity = 0.000427;
  double spin_contamination = 0.007033;
  double s2_total = 0.757013;
  double col = 0.000028;

  Eigen::Matrix3d a_matrix() const;
  Eigen::Vector3d optimal_axis() const;
};

inline constexpr double kFixtureColTol = 5e-6;
inline constexpr double kFixtureAxisTol = 1e-3;
inline constexpr double kFixtureSumTol = 2e-6;
inline constexpr double kFixtureDiagonalTol = 1e-12;

struct FixtureCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Minimal-collinearity value and axis of the reference A matrix, its z-axis
/// variance, and the four-term sum against the reported <S^2>.
std::vector<FixtureCheck> run_reference_fixtures();

}  // namespace gchfspin
