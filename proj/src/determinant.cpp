#include "gchfspin/determinant.hpp"

#include <cmath>
#include <string>

#include <fmt/format.h>

#include "gchfspin/error.hpp"

namespace gchfspin {
namespace {

constexpr double kGramMinEigenvalue = 1e-12;
constexpr double kImaginaryResidueTol = 1e-10;

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
  return 0.5 * (m + m.adjoint());
}

}  // namespace

SpinorDeterminant::SpinorDeterminant(ComplexMatrix alpha, ComplexMatrix beta,
                                     std::optional<ComplexMatrix> ao_overlap)
    : alpha_(std::move(alpha)),
      beta_(std::move(beta)),
      ao_overlap_(std::move(ao_overlap)) {
  const auto m = alpha_.rows();
  const auto ne = alpha_.cols();
  if (m < 1 || ne < 1) {
    throw SpinError(ErrorKind::DimensionMismatch,
                    "basis_dim and n_electrons must be positive");
  }
  if (beta_.rows() != m || beta_.cols() != ne) {
    throw SpinError(ErrorKind::DimensionMismatch,
                    fmt::format("coeff_beta is {}x{}, expected {}x{}",
                                beta_.rows(), beta_.cols(), m, ne));
  }
  if (ne > 2 * m) {
    throw SpinError(ErrorKind::DimensionMismatch,
                    fmt::format("n_electrons {} exceeds 2*basis_dim = {}", ne,
                                2 * m));
  }
  if (ao_overlap_) {
    const ComplexMatrix& s = *ao_overlap_;
    if (s.rows() != m || s.cols() != m) {
      throw SpinError(ErrorKind::DimensionMismatch,
                      fmt::format("ao_overlap is {}x{}, expected {}x{}",
                                  s.rows(), s.cols(), m, m));
    }
    const double asym = (s - s.adjoint()).cwiseAbs().maxCoeff();
    if (asym > kMetricHermiticityTol) {
      throw SpinError(ErrorKind::InvalidMetric,
                      fmt::format("ao_overlap is not Hermitian (residual {:.3e})",
                                  asym));
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(hermitian_part(s),
                                                     Eigen::EigenvaluesOnly);
    if (eig.eigenvalues().minCoeff() <= kMetricMinEigenvalue) {
      throw SpinError(ErrorKind::InvalidMetric,
                      fmt::format("ao_overlap is not positive definite "
                                  "(smallest eigenvalue {:.3e})",
                                  eig.eigenvalues().minCoeff()));
    }
  }
}

ComplexMatrix SpinorDeterminant::spatial_overlap(const ComplexMatrix& bra,
                                                 const ComplexMatrix& ket) const {
  if (ao_overlap_) return bra.adjoint() * (*ao_overlap_) * ket;
  return bra.adjoint() * ket;
}

ComplexMatrix SpinorDeterminant::gram() const {
  return spatial_overlap(alpha_, alpha_) + spatial_overlap(beta_, beta_);
}

double SpinorDeterminant::orthonormality_residual() const {
  const ComplexMatrix g = gram();
  return (g - ComplexMatrix::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff();
}

OverlapBlocks build_overlap_blocks(const SpinorDeterminant& det,
                                   double orthonormality_tol) {
  const double residual = det.orthonormality_residual();
  if (!(residual <= orthonormality_tol)) {
    throw SpinError(ErrorKind::NotOrthonormal,
                    fmt::format("spinor Gram residual {:.3e} exceeds {:.1e}",
                                residual, orthonormality_tol));
  }
  OverlapBlocks blocks;
  blocks.aa = hermitian_part(det.spatial_overlap(det.alpha(), det.alpha()));
  blocks.bb = hermitian_part(det.spatial_overlap(det.beta(), det.beta()));
  blocks.ab = det.spatial_overlap(det.alpha(), det.beta());
  blocks.ba = blocks.ab.adjoint();
  return blocks;
}

SpinorDeterminant orthonormalize(const SpinorDeterminant& det) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(hermitian_part(det.gram()));
  const Eigen::VectorXd& w = eig.eigenvalues();
  if (w.minCoeff() <= kGramMinEigenvalue) {
    throw SpinError(ErrorKind::LinearlyDependent,
                    fmt::format("spinor Gram matrix has eigenvalue {:.3e}",
                                w.minCoeff()));
  }
  const ComplexMatrix& v = eig.eigenvectors();
  const ComplexMatrix inv_sqrt =
      v * w.cwiseSqrt().cwiseInverse().cast<Complex>().asDiagonal() *
      v.adjoint();
  return SpinorDeterminant(det.alpha() * inv_sqrt, det.beta() * inv_sqrt,
                           det.ao_overlap());
}

ElectronCounts electron_counts(const OverlapBlocks& blocks) {
  return {checked_real(blocks.aa.trace(), "trace(o_aa)"),
          checked_real(blocks.bb.trace(), "trace(o_bb)")};
}

double checked_real(Complex value, const char* what) {
  if (!(std::abs(value.imag()) < kImaginaryResidueTol)) {
    throw SpinError(ErrorKind::NonHermitianResult,
                    fmt::format("{} has imaginary part {:.3e}", what,
                                value.imag()));
  }
  return value.real();
}

}  // namespace gchfspin
