#include "gchfspin/reference_fixtures.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "gchfspin/collinearity.hpp"

namespace gchfspin {

Eigen::Matrix3d H2OCationReference::a_matrix() const {
  Eigen::Matrix3d a;
  a << +0.253128, +0.000145, -0.009774,
       +0.000145, +0.253451, +0.003745,
       -0.009774, +0.003745, +0.000461;
  return a;
}

Eigen::Vector3d H2OCationReference::optimal_axis() const {
  return {+0.0385908, -0.014789, +0.999146};
}

std::vector<FixtureCheck> run_reference_fixtures() {
  const H2OCationReference ref;
  const CollinearityResult result = min_collinearity(ref.a_matrix());
  std::vector<FixtureCheck> checks;

  const double col_err = std::abs(result.col - ref.col);
  checks.push_back({"min-collinearity value", col_err <= kFixtureColTol,
                    fmt::format("col = {:.6f} (reference {:.6f}, |diff| {:.1e} "
                                "<= {:.0e})",
                                result.col, ref.col, col_err, kFixtureColTol)});

  const Eigen::Vector3d expected = ref.optimal_axis();
  const double axis_err = std::min((result.optimal_axis - expected).cwiseAbs().maxCoeff(),
                                   (result.optimal_axis + expected).cwiseAbs().maxCoeff());
  const Eigen::Vector3d& u = result.optimal_axis;
  checks.push_back(
      {"optimal axis", axis_err <= kFixtureAxisTol,
       fmt::format("u0 = ({:+.7f}, {:+.6f}, {:+.6f}) (max component diff up to "
                   "sign {:.1e} <= {:.0e})",
                   u.x(), u.y(), u.z(), axis_err, kFixtureAxisTol)});

  const double zz = col_along(ref.a_matrix(), Eigen::Vector3d::UnitZ());
  const double zz_err = std::abs(zz - ref.z_noncollinearity);
  checks.push_back({"z-axis variance equals z-noncollinearity",
                    zz_err <= kFixtureDiagonalTol,
                    fmt::format("col(z) = {:.6f} (reference {:.6f})", zz,
                                ref.z_noncollinearity)});

  const double sum = ref.rohf_term + ref.z_noncollinearity +
                     ref.spin_contamination + ref.xy_perpendicularity;
  const double sum_err = std::abs(sum - ref.s2_total);
  checks.push_back({"four-term sum equals <S^2>", sum_err <= kFixtureSumTol,
                    fmt::format("sum = {:.6f} vs <S^2> = {:.6f} (|diff| {:.1e} "
                                "<= {:.0e})",
                                sum, ref.s2_total, sum_err, kFixtureSumTol)});
  return checks;
}

}  // namespace gchfspin
