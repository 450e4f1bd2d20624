#include "gchfspin/spin_frame.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include <fmt/format.h>

#include "gchfspin/collinearity.hpp"
#include "gchfspin/error.hpp"

namespace gchfspin {
namespace {

constexpr double kAxisCoincidenceTol = 1e-12;
constexpr double kSpanMinEigenvalue = 1e-12;

// Loewdin orthonormalization of spatial columns under the identity metric.
ComplexMatrix orthonormal_columns(const ComplexMatrix& c, const char* what) {
  if (c.cols() == 0) return c;
  const ComplexMatrix g = c.adjoint() * c;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(0.5 * (g + g.adjoint()));
  const Eigen::VectorXd& w = eig.eigenvalues();
  if (w.minCoeff() <= kSpanMinEigenvalue) {
    throw SpinError(ErrorKind::LinearlyDependent,
                    fmt::format("{} orbitals are linearly dependent "
                                "(Gram eigenvalue {:.3e})",
                                what, w.minCoeff()));
  }
  const ComplexMatrix& v = eig.eigenvectors();
  return c * (v * w.cwiseSqrt().cwiseInverse().cast<Complex>().asDiagonal() *
              v.adjoint());
}

}  // namespace

Eigen::Matrix2cd SpinRotation::su2() const {
  require_unit_vector(axis);
  const Complex i{0.0, 1.0};
  const double c = std::cos(0.5 * angle);
  const double s = std::sin(0.5 * angle);
  Eigen::Matrix2cd n_sigma;
  n_sigma << axis.z(), Complex(axis.x(), -axis.y()), Complex(axis.x(), axis.y()),
      -axis.z();
  return c * Eigen::Matrix2cd::Identity() - i * s * n_sigma;
}

Eigen::Matrix3d SpinRotation::so3() const {
  require_unit_vector(axis);
  return Eigen::AngleAxisd(angle, axis).toRotationMatrix();
}

SpinorDeterminant su2_rotate(const SpinorDeterminant& det,
                             const SpinRotation& rot) {
  const Eigen::Matrix2cd u = rot.su2();
  return SpinorDeterminant(u(0, 0) * det.alpha() + u(0, 1) * det.beta(),
                           u(1, 0) * det.alpha() + u(1, 1) * det.beta(),
                           det.ao_overlap());
}

SpinRotation rotation_to_z(const Eigen::Vector3d& u) {
  require_unit_vector(u);
  const Eigen::Vector3d z = Eigen::Vector3d::UnitZ();
  const double cos_angle = u.dot(z);
  if (cos_angle > 1.0 - kAxisCoincidenceTol) return {z, 0.0};
  if (cos_angle < -1.0 + kAxisCoincidenceTol) {
    return {Eigen::Vector3d::UnitX(), std::numbers::pi};
  }
  const Eigen::Vector3d cross = u.cross(z);
  const double sin_angle = cross.norm();
  return {cross / sin_angle, std::atan2(sin_angle, cos_angle)};
}

SpinorDeterminant align_to_axis(const SpinorDeterminant& det,
                                const Eigen::Vector3d& u) {
  return su2_rotate(det, rotation_to_z(u));
}

SpinorDeterminant gen_rhf(const ComplexMatrix& orbitals) {
  const ComplexMatrix c = orthonormal_columns(orbitals, "closed-shell");
  const auto m = c.rows();
  const auto k = c.cols();
  ComplexMatrix alpha = ComplexMatrix::Zero(m, 2 * k);
  ComplexMatrix beta = ComplexMatrix::Zero(m, 2 * k);
  alpha.leftCols(k) = c;
  beta.rightCols(k) = c;
  return SpinorDeterminant(std::move(alpha), std::move(beta));
}

SpinorDeterminant gen_rohf(const ComplexMatrix& closed, const ComplexMatrix& open) {
  if (closed.rows() != open.rows()) {
    throw SpinError(ErrorKind::DimensionMismatch,
                    "closed and open orbitals must share the basis dimension");
  }
  const auto m = closed.rows();
  const auto k = closed.cols();
  const auto p = open.cols();
  ComplexMatrix joined(m, k + p);
  joined << closed, open;
  const ComplexMatrix c = orthonormal_columns(joined, "open-shell");
  ComplexMatrix alpha = ComplexMatrix::Zero(m, 2 * k + p);
  ComplexMatrix beta = ComplexMatrix::Zero(m, 2 * k + p);
  alpha.leftCols(k) = c.leftCols(k);
  beta.middleCols(k, k) = c.leftCols(k);
  alpha.rightCols(p) = c.rightCols(p);
  return SpinorDeterminant(std::move(alpha), std::move(beta));
}

SpinorDeterminant gen_dods(const ComplexMatrix& alpha_orbitals,
                           const ComplexMatrix& beta_orbitals) {
  if (alpha_orbitals.rows() != beta_orbitals.rows()) {
    throw SpinError(ErrorKind::DimensionMismatch,
                    "alpha and beta orbitals must share the basis dimension");
  }
  const auto m = alpha_orbitals.rows();
  const auto p = alpha_orbitals.cols();
  const auto q = beta_orbitals.cols();
  ComplexMatrix alpha = ComplexMatrix::Zero(m, p + q);
  ComplexMatrix beta = ComplexMatrix::Zero(m, p + q);
  alpha.leftCols(p) = orthonormal_columns(alpha_orbitals, "alpha");
  beta.rightCols(q) = orthonormal_columns(beta_orbitals, "beta");
  return SpinorDeterminant(std::move(alpha), std::move(beta));
}

ComplexMatrix gaussian_matrix(Eigen::Index rows, Eigen::Index cols,
                              std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im) / std::numbers::sqrt2;
    }
  }
  return g;
}

ComplexMatrix haar_unitary(Eigen::Index n, std::uint64_t seed) {
  const ComplexMatrix g = gaussian_matrix(n, n, seed);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n);
  const ComplexMatrix& r = qr.matrixQR();
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex d = r(k, k);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(k) *= d / mag;
  }
  return q;
}

SpinorDeterminant gen_random_gchf(Eigen::Index m, Eigen::Index n_electrons,
                                  std::uint64_t seed) {
  if (m < 1 || n_electrons < 1 || n_electrons > 2 * m) {
    throw SpinError(ErrorKind::DimensionMismatch,
                    fmt::format("need 1 <= n_electrons <= 2*basis_dim, got "
                                "M={} Ne={}",
                                m, n_electrons));
  }
  const ComplexMatrix u = haar_unitary(2 * m, seed);
  const auto cols = u.leftCols(n_electrons);
  return SpinorDeterminant(cols.topRows(m), cols.bottomRows(m));
}

}  // namespace gchfspin
