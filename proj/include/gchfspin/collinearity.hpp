#pragma once

#include <Eigen/Dense>

#include "gchfspin/determinant.hpp"

namespace gchfspin {

struct SpinVector {
  double sx = 0.0;
  double sy = 0.0;
  double sz = 0.0;

  Eigen::Vector3d as_vector() const { return {sx, sy, sz}; }
};

/// (<Sx>, <Sy>, <Sz>) = (Re <S+>, Im <S+>, <Sz>).
SpinVector spin_vector(const OverlapBlocks& blocks);

/// Ne x Ne matrices <phi_i|S_mu|phi_j> for mu = x, y, z, i.e. the overlaps of
/// the occupied spinors with S_mu applied to them.
struct SpinComponentMatrices {
  ComplexMatrix x;
  ComplexMatrix y;
  ComplexMatrix z;

  const ComplexMatrix& operator[](int mu) const;
};

SpinComponentMatrices spin_component_matrices(const OverlapBlocks& blocks);

/// Spin covariance matrix A(mu, nu) = Re<S_mu S_nu> - <S_mu><S_nu>, computed as
/// delta(mu, nu) Ne/4 - Re tr(M_mu M_nu) from the one-electron matrices above
/// and symmetrized.
Eigen::Matrix3d a_matrix(const OverlapBlocks& blocks);

/// Variance of u.S; u must be a unit vector within 1e-10 (NotUnitVector).
double col_along(const Eigen::Matrix3d& a, const Eigen::Vector3d& u);
double col_along(const OverlapBlocks& blocks, const Eigen::Vector3d& u);

struct CollinearityResult {
  Eigen::Matrix3d a_matrix;
  Eigen::Vector3d eigenvalues;   // ascending
  Eigen::Matrix3d eigenvectors;  // column k belongs to eigenvalues(k)
  double col = 0.0;
  Eigen::Vector3d optimal_axis;
  /// Set when the lowest eigenvalue is (near-)degenerate, gap < 1e-10.
  bool degenerate = false;
};

/// Eigenpairs of a real symmetric 3x3 matrix by cyclic Jacobi rotations.
/// Eigenvalues ascending; each eigenvector sign-normalized so that its
/// largest-magnitude component is positive.
struct SymmetricEigen3 {
  Eigen::Vector3d values;
  Eigen::Matrix3d vectors;
};

SymmetricEigen3 jacobi_eigen3(const Eigen::Matrix3d& a);

/// Minimizes col(u) over the unit sphere. Throws NotSymmetric if `a` is not
/// symmetric within 1e-10. On a degenerate lowest eigenvalue the axis is the
/// candidate eigenvector with the largest key (|z|, |x|, |y|).
CollinearityResult min_collinearity(const Eigen::Matrix3d& a);

inline CollinearityResult collinearity(const OverlapBlocks& blocks) {
  return min_collinearity(a_matrix(blocks));
}

/// Sign-normalize: largest-magnitude component positive (first one on ties).
Eigen::Vector3d sign_normalized(const Eigen::Vector3d& v);

void require_unit_vector(const Eigen::Vector3d& u);

}  // namespace gchfspin
