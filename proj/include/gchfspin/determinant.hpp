#pragma once

#include <complex>
#include <optional>
#include <utility>

#include <Eigen/Dense>

namespace gchfspin {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

/// Input orthonormality check; ingested coefficients carry print rounding.
inline constexpr double kInputOrthonormalityTol = 1e-8;
inline constexpr double kMetricHermiticityTol = 1e-12;
inline constexpr double kMetricMinEigenvalue = 1e-10;

/// A single determinant of Ne two-component spinors over an M-dimensional
/// spatial basis. Column i of alpha()/beta() holds the spatial expansion of the
/// alpha/beta component of spinor i. The optional AO metric defaults to the
/// identity.
///
/// Construction validates shapes and the metric only. Orthonormality of the
/// spinors is checked where it matters (build_overlap_blocks), so that
/// orthonormalize() can accept a non-orthonormal determinant.
class SpinorDeterminant {
 public:
  SpinorDeterminant(ComplexMatrix alpha, ComplexMatrix beta,
                    std::optional<ComplexMatrix> ao_overlap = std::nullopt);

  Eigen::Index basis_dim() const { return alpha_.rows(); }
  Eigen::Index n_electrons() const { return alpha_.cols(); }
  const ComplexMatrix& alpha() const { return alpha_; }
  const ComplexMatrix& beta() const { return beta_; }
  const std::optional<ComplexMatrix>& ao_overlap() const { return ao_overlap_; }
  bool has_identity_metric() const { return !ao_overlap_.has_value(); }

  /// Ne x Ne spinor Gram matrix C_a^H S C_a + C_b^H S C_b.
  ComplexMatrix gram() const;
  /// Max-abs entry of gram() - I.
  double orthonormality_residual() const;

  /// Spatial inner products <x|y> under the AO metric, for M-row blocks.
  ComplexMatrix spatial_overlap(const ComplexMatrix& bra,
                                const ComplexMatrix& ket) const;

 private:
  ComplexMatrix alpha_;
  ComplexMatrix beta_;
  std::optional<ComplexMatrix> ao_overlap_;
};

/// The four Ne x Ne blocks o_st(i, j) = <phi_{i s}|phi_{j t}>. Every spin
/// quantity in this library is a function of these blocks alone.
struct OverlapBlocks {
  ComplexMatrix aa;
  ComplexMatrix ab;
  ComplexMatrix ba;
  ComplexMatrix bb;

  Eigen::Index n_electrons() const { return aa.rows(); }
};

/// Throws NotOrthonormal when the spinor Gram residual exceeds
/// `orthonormality_tol` (callers can orthonormalize first).
OverlapBlocks build_overlap_blocks(
    const SpinorDeterminant& det,
    double orthonormality_tol = kInputOrthonormalityTol);

/// Symmetric (Loewdin) orthonormalization of the spinors under the combined
/// metric; preserves the column span of the stacked 2M x Ne coefficients.
/// Throws LinearlyDependent if the Gram matrix has an eigenvalue <= 1e-12.
SpinorDeterminant orthonormalize(const SpinorDeterminant& det);

struct ElectronCounts {
  double n_alpha = 0.0;
  double n_beta = 0.0;
};

/// Metric-weighted alpha and beta occupation traces.
ElectronCounts electron_counts(const OverlapBlocks& blocks);

/// Returns the real part after checking |imag| < 1e-10; throws
/// NonHermitianResult otherwise.
double checked_real(Complex value, const char* what);

}  // namespace gchfspin
