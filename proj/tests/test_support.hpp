#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include <Eigen/Dense>

#include "gchfspin/determinant.hpp"
#include "gchfspin/spin_frame.hpp"

namespace gchfspin::testing {

inline SpinorDeterminant one_electron(Complex alpha, Complex beta) {
  ComplexMatrix a(1, 1), b(1, 1);
  a(0, 0) = alpha;
  b(0, 0) = beta;
  return SpinorDeterminant(a, b);
}

inline SpinorDeterminant pure_alpha() { return one_electron(1.0, 0.0); }
inline SpinorDeterminant pure_beta() { return one_electron(0.0, 1.0); }
inline SpinorDeterminant x_polarized() {
  return one_electron(1.0 / std::numbers::sqrt2, 1.0 / std::numbers::sqrt2);
}

/// One spatial orbital, one alpha and one beta electron.
inline SpinorDeterminant closed_shell_pair() {
  ComplexMatrix a(1, 2), b(1, 2);
  a << 1.0, 0.0;
  b << 0.0, 1.0;
  return SpinorDeterminant(a, b);
}

/// Two alpha electrons in orthogonal orbitals.
inline SpinorDeterminant alpha_triplet() {
  return SpinorDeterminant(ComplexMatrix::Identity(2, 2), ComplexMatrix::Zero(2, 2));
}

inline Eigen::Vector3d random_unit_vector(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Eigen::Vector3d v;
  do {
    v = {normal(rng), normal(rng), normal(rng)};
  } while (v.norm() < 1e-6);
  return v.normalized();
}

inline SpinRotation random_rotation(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  return {random_unit_vector(rng), angle(rng)};
}

/// Random spinor determinant orthonormal under a random non-identity metric:
/// C = S^{-1/2} U with U the leading columns of a Haar unitary.
inline SpinorDeterminant random_with_metric(Eigen::Index m, Eigen::Index ne,
                                            std::uint64_t seed) {
  const ComplexMatrix x = gaussian_matrix(m, m, seed + 1000);
  const ComplexMatrix s = ComplexMatrix::Identity(m, m) + 0.3 * x.adjoint() * x;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(s);
  const ComplexMatrix inv_sqrt =
      eig.eigenvectors() *
      eig.eigenvalues().cwiseSqrt().cwiseInverse().cast<Complex>().asDiagonal() *
      eig.eigenvectors().adjoint();
  const SpinorDeterminant base = gen_random_gchf(m, ne, seed);
  const ComplexMatrix herm = 0.5 * (s + s.adjoint());
  return SpinorDeterminant(inv_sqrt * base.alpha(), inv_sqrt * base.beta(), herm);
}

}  // namespace gchfspin::testing
