#include "gchfspin/oracle.hpp"

#include <algorithm>
#include <bit>

#include <fmt/format.h>

#include "gchfspin/error.hpp"

namespace gchfspin {
namespace {

int parity_below(std::uint64_t pattern, int bit) {
  const std::uint64_t below = (std::uint64_t{1} << bit) - 1;
  return std::popcount(pattern & below) & 1;
}

// coeff * a+_to a_from, accumulated into `out` for every pattern of `in`.
void add_hop(const FockVector& in, int from, int to, Complex coeff,
             FockVector& out) {
  const std::uint64_t from_bit = std::uint64_t{1} << from;
  const std::uint64_t to_bit = std::uint64_t{1} << to;
  const auto& patterns = in.patterns();
  for (std::size_t k = 0; k < patterns.size(); ++k) {
    const Complex amp = in.amplitudes()(static_cast<Eigen::Index>(k));
    if (amp == Complex{}) continue;
    std::uint64_t p = patterns[k];
    if (!(p & from_bit)) continue;
    int sign = parity_below(p, from);
    p ^= from_bit;
    if (p & to_bit) continue;
    sign ^= parity_below(p, to);
    p |= to_bit;
    const auto idx = static_cast<Eigen::Index>(out.index_of(p));
    out.amplitudes()(idx) += (sign ? -coeff : coeff) * amp;
  }
}

FockVector apply_sz(const FockVector& in) {
  FockVector out(in.m_spatial(), in.n_electrons());
  const int m = in.m_spatial();
  const std::uint64_t alpha_mask = (std::uint64_t{1} << m) - 1;
  const auto& patterns = in.patterns();
  for (std::size_t k = 0; k < patterns.size(); ++k) {
    const int n_alpha = std::popcount(patterns[k] & alpha_mask);
    const int n_beta = std::popcount(patterns[k] & ~alpha_mask);
    const auto idx = static_cast<Eigen::Index>(k);
    out.amplitudes()(idx) = 0.5 * (n_alpha - n_beta) * in.amplitudes()(idx);
  }
  return out;
}

}  // namespace

std::size_t checked_state_count(Eigen::Index m, Eigen::Index n_electrons) {
  if (m > kOracleMaxBasis) {
    throw SpinError(ErrorKind::TooLarge,
                    fmt::format("oracle supports basis_dim <= {}, got {}",
                                kOracleMaxBasis, m));
  }
  const Eigen::Index n = 2 * m;
  if (n_electrons < 0 || n_electrons > n) {
    throw SpinError(ErrorKind::DimensionMismatch,
                    fmt::format("n_electrons {} outside [0, {}]", n_electrons, n));
  }
  std::size_t count = 1;
  for (Eigen::Index k = 1; k <= n_electrons; ++k) {
    count = count * static_cast<std::size_t>(n - n_electrons + k) /
            static_cast<std::size_t>(k);
  }
  if (count > kOracleMaxStates) {
    throw SpinError(ErrorKind::TooLarge,
                    fmt::format("C({}, {}) = {} determinants exceeds {}", n,
                                n_electrons, count, kOracleMaxStates));
  }
  return count;
}

FockVector::FockVector(int m_spatial, int n_electrons)
    : m_spatial_(m_spatial), n_electrons_(n_electrons) {
  const std::size_t count = checked_state_count(m_spatial, n_electrons);
  patterns_.reserve(count);
  const int n_bits = 2 * m_spatial;
  if (n_electrons == 0) {
    patterns_.push_back(0);
  } else {
    // Gosper's hack: successive masks with the same popcount, ascending.
    std::uint64_t p = (std::uint64_t{1} << n_electrons) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n_bits;
    while (p < limit) {
      patterns_.push_back(p);
      const std::uint64_t c = p & (~p + 1);
      const std::uint64_t r = p + c;
      p = (((r ^ p) >> 2) / c) | r;
    }
  }
  amplitudes_ = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(count));
}

std::size_t FockVector::index_of(std::uint64_t pattern) const {
  const auto it = std::lower_bound(patterns_.begin(), patterns_.end(), pattern);
  if (it == patterns_.end() || *it != pattern) return patterns_.size();
  return static_cast<std::size_t>(it - patterns_.begin());
}

Complex FockVector::amplitude(std::uint64_t pattern) const {
  const std::size_t k = index_of(pattern);
  return k == patterns_.size() ? Complex{}
                               : amplitudes_(static_cast<Eigen::Index>(k));
}

Complex FockVector::inner(const FockVector& other) const {
  if (other.m_spatial_ != m_spatial_ || other.n_electrons_ != n_electrons_) {
    throw SpinError(ErrorKind::DimensionMismatch,
                    "inner product between different Fock sectors");
  }
  return amplitudes_.dot(other.amplitudes_);
}

SpinorDeterminant to_orthonormal_basis(const SpinorDeterminant& det) {
  if (det.has_identity_metric()) return det;
  const ComplexMatrix& s = *det.ao_overlap();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(0.5 * (s + s.adjoint()));
  const ComplexMatrix& v = eig.eigenvectors();
  const ComplexMatrix sqrt_s =
      v * eig.eigenvalues().cwiseSqrt().cast<Complex>().asDiagonal() *
      v.adjoint();
  return SpinorDeterminant(sqrt_s * det.alpha(), sqrt_s * det.beta());
}

FockVector expand(const SpinorDeterminant& det) {
  if (!det.has_identity_metric()) {
    throw SpinError(ErrorKind::MetricNotIdentity,
                    "expand needs an orthonormal spatial basis; use "
                    "to_orthonormal_basis first");
  }
  const int m = static_cast<int>(det.basis_dim());
  const int ne = static_cast<int>(det.n_electrons());
  FockVector vec(m, ne);
  ComplexMatrix stacked(2 * m, ne);
  stacked << det.alpha(), det.beta();

  ComplexMatrix minor(ne, ne);
  const auto& patterns = vec.patterns();
  for (std::size_t k = 0; k < patterns.size(); ++k) {
    int row = 0;
    for (int bit = 0; bit < 2 * m; ++bit) {
      if (patterns[k] >> bit & 1) minor.row(row++) = stacked.row(bit);
    }
    vec.amplitudes()(static_cast<Eigen::Index>(k)) = minor.determinant();
  }
  return vec;
}

FockVector apply_spin(const FockVector& vec, SpinOp op) {
  const int m = vec.m_spatial();
  const Complex half{0.5, 0.0};
  const Complex half_i{0.0, 0.5};
  FockVector out(m, vec.n_electrons());
  switch (op) {
    case SpinOp::Sz:
      return apply_sz(vec);
    case SpinOp::SPlus:
      for (int p = 0; p < m; ++p) add_hop(vec, m + p, p, 1.0, out);
      return out;
    case SpinOp::SMinus:
      for (int p = 0; p < m; ++p) add_hop(vec, p, m + p, 1.0, out);
      return out;
    case SpinOp::Sx:
      // (S+ + S-) / 2
      for (int p = 0; p < m; ++p) {
        add_hop(vec, m + p, p, half, out);
        add_hop(vec, p, m + p, half, out);
      }
      return out;
    case SpinOp::Sy:
      // (S+ - S-) / 2i
      for (int p = 0; p < m; ++p) {
        add_hop(vec, m + p, p, -half_i, out);
        add_hop(vec, p, m + p, half_i, out);
      }
      return out;
  }
  return out;
}

Complex expectation(const FockVector& v, std::span<const SpinOp> ops) {
  FockVector w = v;
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) w = apply_spin(w, *it);
  return v.inner(w);
}

Complex oracle_expectation(const SpinorDeterminant& det,
                           std::span<const SpinOp> product) {
  return expectation(expand(to_orthonormal_basis(det)), product);
}

Complex oracle_expectation(const SpinorDeterminant& det, Observable which) {
  const FockVector v = expand(to_orthonormal_basis(det));
  using enum SpinOp;
  switch (which) {
    case Observable::Sz: return expectation(v, {Sz});
    case Observable::Sz2: return expectation(v, {Sz, Sz});
    case Observable::SMinusSPlus: return expectation(v, {SMinus, SPlus});
    case Observable::SPlusSMinus: return expectation(v, {SPlus, SMinus});
    case Observable::S2:
      return expectation(v, {Sx, Sx}) + expectation(v, {Sy, Sy}) +
             expectation(v, {Sz, Sz});
    case Observable::SPlus: return expectation(v, {SPlus});
    case Observable::SMinus: return expectation(v, {SMinus});
  }
  return {};
}

OracleMoments oracle_moments(const SpinorDeterminant& det) {
  const FockVector v = expand(to_orthonormal_basis(det));
  const std::array<FockVector, 3> sv{apply_spin(v, SpinOp::Sx),
                                     apply_spin(v, SpinOp::Sy),
                                     apply_spin(v, SpinOp::Sz)};
  const FockVector plus = apply_spin(v, SpinOp::SPlus);
  const FockVector minus = apply_spin(v, SpinOp::SMinus);

  OracleMoments out;
  for (int mu = 0; mu < 3; ++mu) {
    out.s[mu] = v.inner(sv[mu]);
    // <S_mu S_nu> = <S_mu v | S_nu v> since S_mu is Hermitian.
    for (int nu = 0; nu < 3; ++nu) out.ss[mu][nu] = sv[mu].inner(sv[nu]);
  }
  out.sz = out.s[2];
  out.sz2 = out.ss[2][2];
  out.splus = v.inner(plus);
  out.sminus_splus = plus.inner(plus);
  out.splus_sminus = minus.inner(minus);
  out.s2 = out.ss[0][0] + out.ss[1][1] + out.ss[2][2];
  return out;
}

}  // namespace gchfspin
