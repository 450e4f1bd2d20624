#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "gchfspin/determinant.hpp"

namespace gchfspin {

// Brute-force reference: the determinant expanded over elementary Slater
// determinants of the 2M spin-orbitals, with spin operators applied in second
// quantization. Spin-orbital p < M is p-alpha, M + p is p-beta; an occupation
// pattern is a bitmask over these 2M bits, and |P> = a+_{p1} ... a+_{pN}|0>
// with p1 < ... < pN.

inline constexpr std::size_t kOracleMaxStates = 10000;
inline constexpr Eigen::Index kOracleMaxBasis = 6;

class FockVector {
 public:
  /// Zero vector over all C(2M, Ne) patterns. Throws TooLarge past the guard.
  FockVector(int m_spatial, int n_electrons);

  int m_spatial() const { return m_spatial_; }
  int n_electrons() const { return n_electrons_; }
  std::size_t size() const { return patterns_.size(); }

  /// Patterns in ascending bitmask order.
  const std::vector<std::uint64_t>& patterns() const { return patterns_; }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  Eigen::VectorXcd& amplitudes() { return amplitudes_; }

  Complex amplitude(std::uint64_t pattern) const;
  /// Index of `pattern`, or size() if it is not a valid pattern.
  std::size_t index_of(std::uint64_t pattern) const;

  double norm() const { return amplitudes_.norm(); }
  /// <this|other>, conjugate-linear in this.
  Complex inner(const FockVector& other) const;

 private:
  int m_spatial_;
  int n_electrons_;
  std::vector<std::uint64_t> patterns_;
  Eigen::VectorXcd amplitudes_;
};

/// Bitmask of spin-orbital `p` alpha / beta in a basis of m spatial functions.
constexpr std::uint64_t alpha_bit(int p) { return std::uint64_t{1} << p; }
constexpr std::uint64_t beta_bit(int m, int p) {
  return std::uint64_t{1} << (m + p);
}

/// C(2M, Ne) with the guard applied: TooLarge if M > 6 or the count > 1e4.
std::size_t checked_state_count(Eigen::Index m, Eigen::Index n_electrons);

/// Amplitude of pattern P = det of the Ne x Ne minor of the stacked 2M x Ne
/// coefficient matrix on rows P (ascending). Requires the identity metric
/// (MetricNotIdentity otherwise).
FockVector expand(const SpinorDeterminant& det);

/// Maps coefficients to an orthonormal underlying basis, C -> S^{1/2} C.
/// Identity-metric determinants are returned unchanged.
SpinorDeterminant to_orthonormal_basis(const SpinorDeterminant& det);

enum class SpinOp { Sz, SPlus, SMinus, Sx, Sy };

/// Exact action of a total-spin one-body operator.
FockVector apply_spin(const FockVector& vec, SpinOp op);

/// <v| ops[0] ops[1] ... ops[n-1] |v>.
Complex expectation(const FockVector& v, std::span<const SpinOp> ops);
inline Complex expectation(const FockVector& v,
                           std::initializer_list<SpinOp> ops) {
  return expectation(v, std::span<const SpinOp>(ops.begin(), ops.size()));
}

enum class Observable { Sz, Sz2, SMinusSPlus, SPlusSMinus, S2, SPlus, SMinus };

/// Expands `det` (after metric pre-transform) and evaluates the observable.
Complex oracle_expectation(const SpinorDeterminant& det, Observable which);
Complex oracle_expectation(const SpinorDeterminant& det,
                           std::span<const SpinOp> product);

/// Everything the formula modules compute, from one expansion.
struct OracleMoments {
  Complex sz;
  Complex sz2;
  Complex sminus_splus;
  Complex splus_sminus;
  Complex s2;
  Complex splus;
  std::array<Complex, 3> s;                    // <Sx>, <Sy>, <Sz>
  std::array<std::array<Complex, 3>, 3> ss;    // <S_mu S_nu>
};

OracleMoments oracle_moments(const SpinorDeterminant& det);

}  // namespace gchfspin
