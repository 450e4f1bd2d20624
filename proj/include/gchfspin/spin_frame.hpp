#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "gchfspin/determinant.hpp"

namespace gchfspin {

/// Global spin rotation by `angle` radians about the unit `axis`.
struct SpinRotation {
  Eigen::Vector3d axis = Eigen::Vector3d::UnitZ();
  double angle = 0.0;

  /// U = cos(angle/2) I - i sin(angle/2) (axis . sigma), acting on (alpha, beta).
  Eigen::Matrix2cd su2() const;
  /// The SO(3) image: spin expectation vectors transform as R <S>.
  Eigen::Matrix3d so3() const;
};

/// Applies U to the (alpha, beta) pair of every spinor; spatial parts and the
/// AO metric are untouched.
SpinorDeterminant su2_rotate(const SpinorDeterminant& det,
                             const SpinRotation& rot);

/// The rotation carrying unit vector `u` onto +z. Identity when u is within
/// 1e-12 of +z; a half turn about x when u is within 1e-12 of -z.
SpinRotation rotation_to_z(const Eigen::Vector3d& u);

/// Re-expresses the determinant with `u` as the spin quantization axis.
SpinorDeterminant align_to_axis(const SpinorDeterminant& det,
                                const Eigen::Vector3d& u);

// Canonical determinant classes. Orbital inputs are spatial M x k coefficient
// blocks under the identity metric; they are orthonormalized (jointly where
// they must be mutually orthogonal) and must be linearly independent.

/// Closed shell: every orbital doubly occupied; Ne = 2k.
SpinorDeterminant gen_rhf(const ComplexMatrix& orbitals);

/// Spin-equivalence restricted open shell: closed orbitals doubly occupied,
/// open orbitals singly occupied with alpha spin.
SpinorDeterminant gen_rohf(const ComplexMatrix& closed, const ComplexMatrix& open);

/// Different orbitals for different spins: p pure-alpha, q pure-beta spinors.
SpinorDeterminant gen_dods(const ComplexMatrix& alpha_orbitals,
                           const ComplexMatrix& beta_orbitals);

/// First Ne columns of a seeded Haar-random 2M x 2M unitary; rows [0, M) are
/// the alpha block and rows [M, 2M) the beta block.
SpinorDeterminant gen_random_gchf(Eigen::Index m, Eigen::Index n_electrons,
                                  std::uint64_t seed);

/// Seeded Haar unitary: QR of a complex Gaussian matrix with R's diagonal
/// phases moved into Q. PRNG is std::mt19937_64.
ComplexMatrix haar_unitary(Eigen::Index n, std::uint64_t seed);

/// Seeded matrix of independent standard complex Gaussian entries.
ComplexMatrix gaussian_matrix(Eigen::Index rows, Eigen::Index cols,
                              std::uint64_t seed);

}  // namespace gchfspin
