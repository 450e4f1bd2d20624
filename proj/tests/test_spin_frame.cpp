#include <doctest.h>

#include <numbers>
#include <random>

#include "gchfspin/collinearity.hpp"
#include "gchfspin/error.hpp"
#include "gchfspin/oracle.hpp"
#include "gchfspin/spin_analysis.hpp"
#include "gchfspin/spin_frame.hpp"
#include "test_support.hpp"

using namespace gchfspin;
using namespace gchfspin::testing;

namespace {

// Rodrigues' formula, independent of Eigen::AngleAxis.
Eigen::Matrix3d rodrigues(const Eigen::Vector3d& n, double angle) {
  Eigen::Matrix3d k;
  k << 0, -n.z(), n.y(), n.z(), 0, -n.x(), -n.y(), n.x(), 0;
  return Eigen::Matrix3d::Identity() + std::sin(angle) * k +
         (1.0 - std::cos(angle)) * k * k;
}

}  // namespace

TEST_CASE("SU(2) matrix is unitary with unit determinant") {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 50; ++k) {
    const SpinRotation rot = random_rotation(rng);
    const Eigen::Matrix2cd u = rot.su2();
    CHECK((u.adjoint() * u - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() <
          1e-12);
    CHECK(std::abs(u.determinant() - 1.0) < 1e-12);
    CHECK((rot.so3() - rodrigues(rot.axis, rot.angle)).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("zero angle leaves the determinant unchanged") {
  const SpinorDeterminant det = gen_random_gchf(3, 2, 5);
  const SpinorDeterminant out = su2_rotate(det, {Eigen::Vector3d::UnitY(), 0.0});
  CHECK((out.alpha() - det.alpha()).cwiseAbs().maxCoeff() == 0.0);
  CHECK((out.beta() - det.beta()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("quarter turn about y takes alpha to x-polarized") {
  const SpinorDeterminant out =
      su2_rotate(pure_alpha(), {Eigen::Vector3d::UnitY(), std::numbers::pi / 2});
  CHECK(std::abs(out.alpha()(0, 0) - 1.0 / std::numbers::sqrt2) < 1e-15);
  CHECK(std::abs(out.beta()(0, 0) - 1.0 / std::numbers::sqrt2) < 1e-15);
}

TEST_CASE("rotation covariance of spin observables") {
  std::mt19937_64 rng(42);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const SpinorDeterminant det = gen_random_gchf(3, 1 + seed % 4, seed);
    const SpinRotation rot = random_rotation(rng);
    const Eigen::Matrix3d r = rodrigues(rot.axis, rot.angle);
    const SpinorDeterminant turned = su2_rotate(det, rot);
    CHECK(turned.orthonormality_residual() < 1e-12);

    const OverlapBlocks b0 = build_overlap_blocks(det);
    const OverlapBlocks b1 = build_overlap_blocks(turned);
    CHECK(std::abs(expect_s2(b0) - expect_s2(b1)) < 1e-10);
    CHECK((r * spin_vector(b0).as_vector() - spin_vector(b1).as_vector()).norm() <
          1e-10);
    const CollinearityResult c0 = collinearity(b0);
    const CollinearityResult c1 = collinearity(b1);
    CHECK((r * c0.a_matrix * r.transpose() - c1.a_matrix).cwiseAbs().maxCoeff() <
          1e-10);
    CHECK(std::abs(c0.col - c1.col) < 1e-10);
    if (c0.eigenvalues(1) - c0.eigenvalues(0) > 1e-3) {
      const Eigen::Vector3d mapped = r * c0.optimal_axis;
      CHECK(std::min((mapped - c1.optimal_axis).norm(),
                     (mapped + c1.optimal_axis).norm()) < 1e-8);
    }
  }
}

TEST_CASE("rotation_to_z maps u onto z") {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 50; ++k) {
    const Eigen::Vector3d u = random_unit_vector(rng);
    const SpinRotation rot = rotation_to_z(u);
    CHECK((rot.so3() * u - Eigen::Vector3d::UnitZ()).norm() < 1e-12);
  }
  const SpinRotation same = rotation_to_z(Eigen::Vector3d::UnitZ());
  CHECK(same.angle == 0.0);
  const SpinRotation flip = rotation_to_z(-Eigen::Vector3d::UnitZ());
  CHECK(flip.axis == Eigen::Vector3d::UnitX());
  CHECK(flip.angle == doctest::Approx(std::numbers::pi));
  CHECK_THROWS_AS(rotation_to_z(Eigen::Vector3d(0.0, 0.0, 2.0)), SpinError);
}

TEST_CASE("aligning the x-polarized spinor to x gives a pure doublet") {
  const SpinorDeterminant out = align_to_axis(x_polarized(), Eigen::Vector3d::UnitX());
  const S2Decomposition d = decompose_s2(build_overlap_blocks(out));
  CHECK(d.rohf_term == doctest::Approx(0.75));
  CHECK(std::abs(d.z_noncollinearity) < 1e-12);
  CHECK(std::abs(d.spin_contamination) < 1e-12);
  CHECK(std::abs(d.xy_perpendicularity) < 1e-12);
}

TEST_CASE("aligned z-noncollinearity equals col along the axis") {
  std::mt19937_64 rng(5);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const SpinorDeterminant det = gen_random_gchf(4, 1 + seed % 4, seed);
    const OverlapBlocks b = build_overlap_blocks(det);
    const Eigen::Vector3d u = random_unit_vector(rng);
    const double aligned =
        decompose_s2(build_overlap_blocks(align_to_axis(det, u))).z_noncollinearity;
    CHECK(std::abs(aligned - col_along(b, u)) < 1e-10);

    const CollinearityResult c = collinearity(b);
    const double optimal =
        decompose_s2(build_overlap_blocks(align_to_axis(det, c.optimal_axis)))
            .z_noncollinearity;
    CHECK(std::abs(optimal - c.col) < 1e-10);
  }
}

TEST_CASE("generators land in their formula regimes") {
  const ComplexMatrix orb = gaussian_matrix(4, 3, 12);
  CHECK(std::abs(expect_s2(build_overlap_blocks(gen_rhf(orb.leftCols(1))))) < 1e-12);
  CHECK(std::abs(expect_s2(build_overlap_blocks(gen_rhf(orb)))) < 1e-12);
  const SpinorDeterminant triplet = gen_rohf(ComplexMatrix(4, 0), orb.leftCols(2));
  CHECK(expect_s2(build_overlap_blocks(triplet)) == doctest::Approx(2.0));
  const SpinorDeterminant dods = gen_dods(orb.leftCols(2), orb.rightCols(1));
  const S2Decomposition d = decompose_s2(build_overlap_blocks(dods));
  CHECK(std::abs(d.z_noncollinearity) < 1e-12);
  CHECK(std::abs(d.xy_perpendicularity) < 1e-12);
}

TEST_CASE("generators reject linearly dependent orbitals") {
  ComplexMatrix orb = gaussian_matrix(3, 2, 1);
  orb.col(1) = orb.col(0);
  CHECK_THROWS_AS(gen_rhf(orb), SpinError);
  CHECK_THROWS_AS(gen_rohf(orb.leftCols(1), orb.rightCols(1)), SpinError);
}

TEST_CASE("random GCHF determinant is valid and matches the oracle") {
  const SpinorDeterminant det = gen_random_gchf(3, 3, 7);
  CHECK(det.orthonormality_residual() < 1e-12);
  const OverlapBlocks b = build_overlap_blocks(det);
  CHECK((b.aa + b.bb - ComplexMatrix::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(std::abs(decompose_s2(b).total - oracle_expectation(det, Observable::S2)) <
        1e-10);
}

TEST_CASE("Haar sampling is seeded and unitary") {
  const ComplexMatrix u = haar_unitary(6, 3);
  CHECK((u.adjoint() * u - ComplexMatrix::Identity(6, 6)).cwiseAbs().maxCoeff() < 1e-13);
  CHECK(haar_unitary(6, 3) == u);
  CHECK(haar_unitary(6, 4) != u);
  CHECK_THROWS_AS(gen_random_gchf(2, 5, 0), SpinError);
}
