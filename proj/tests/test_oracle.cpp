#include <doctest.h>

#include <algorithm>
#include <bit>
#include <numbers>
#include <random>

#include "gchfspin/error.hpp"
#include "gchfspin/oracle.hpp"
#include "gchfspin/spin_frame.hpp"
#include "test_support.hpp"

using namespace gchfspin;
using namespace gchfspin::testing;

namespace {

FockVector random_fock_vector(int m, int ne, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  FockVector v(m, ne);
  for (Eigen::Index k = 0; k < v.amplitudes().size(); ++k) {
    v.amplitudes()(k) = Complex(normal(rng), normal(rng));
  }
  return v;
}

FockVector combine(const FockVector& x, Complex cx, const FockVector& y, Complex cy) {
  FockVector out(x.m_spatial(), x.n_electrons());
  out.amplitudes() = cx * x.amplitudes() + cy * y.amplitudes();
  return out;
}

double max_abs(const FockVector& v) {
  return v.size() == 0 ? 0.0 : v.amplitudes().cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("expansion of one-electron spinors") {
  const FockVector a = expand(pure_alpha());
  CHECK(a.size() == 2);
  CHECK(a.amplitude(alpha_bit(0)) == Complex(1.0));
  CHECK(a.amplitude(beta_bit(1, 0)) == Complex(0.0));
  const FockVector x = expand(x_polarized());
  CHECK(std::abs(x.amplitude(alpha_bit(0)) - 1.0 / std::numbers::sqrt2) < 1e-15);
  CHECK(std::abs(x.amplitude(beta_bit(1, 0)) - 1.0 / std::numbers::sqrt2) < 1e-15);
}

TEST_CASE("pattern count and ordering") {
  const FockVector v(3, 2);
  CHECK(v.size() == 15);
  CHECK(std::is_sorted(v.patterns().begin(), v.patterns().end()));
  for (auto p : v.patterns()) CHECK(std::popcount(p) == 2);
}

TEST_CASE("Cauchy-Binet: expansions of orthonormal determinants are normalized") {
  const SpinorDeterminant det = gen_random_gchf(3, 2, 1);
  CHECK(std::abs(expand(det).norm() - 1.0) < 1e-12);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Eigen::Index m = 1 + static_cast<Eigen::Index>(seed % 4);
    const Eigen::Index ne = 1 + static_cast<Eigen::Index>(seed % (2 * m));
    CHECK(std::abs(expand(gen_random_gchf(m, ne, seed)).norm() - 1.0) < 1e-10);
  }
  // Non-orthonormal columns: sum of |minors|^2 = det(C^H C).
  const ComplexMatrix c = gaussian_matrix(6, 3, 4);
  const FockVector v = expand(SpinorDeterminant(c.topRows(3), c.bottomRows(3)));
  CHECK(std::abs(v.amplitudes().squaredNorm() - (c.adjoint() * c).determinant()) <
        1e-10);
}

TEST_CASE("elementary spin actions") {
  FockVector a(1, 1);
  a.amplitudes()(static_cast<Eigen::Index>(a.index_of(alpha_bit(0)))) = 1.0;
  const FockVector sz = apply_spin(a, SpinOp::Sz);
  CHECK(sz.amplitude(alpha_bit(0)) == Complex(0.5));

  FockVector b(1, 1);
  b.amplitudes()(static_cast<Eigen::Index>(b.index_of(beta_bit(1, 0)))) = 1.0;
  const FockVector up = apply_spin(b, SpinOp::SPlus);
  CHECK(up.amplitude(alpha_bit(0)) == Complex(1.0));
  CHECK(up.amplitude(beta_bit(1, 0)) == Complex(0.0));

  const FockVector singlet = expand(closed_shell_pair());
  CHECK(max_abs(apply_spin(singlet, SpinOp::SPlus)) == 0.0);
  CHECK(max_abs(apply_spin(singlet, SpinOp::SMinus)) == 0.0);
}

TEST_CASE("fermionic sign of a hop across an occupied orbital") {
  // Bit order for M = 2: 1a(0) 2a(1) 1b(2) 2b(3). Start from |1a 2b>.
  FockVector v(2, 2);
  const std::uint64_t p = alpha_bit(0) | beta_bit(2, 1);
  v.amplitudes()(static_cast<Eigen::Index>(v.index_of(p))) = 1.0;
  const FockVector up = apply_spin(v, SpinOp::SPlus);
  // a+_{2a} a_{2b} a+_{1a} a+_{2b}|0>: annihilating 2b passes 1a (-1), creating
  // 2a passes 1a (-1); net +1.
  CHECK(up.amplitude(alpha_bit(0) | alpha_bit(1)) == Complex(1.0));

  FockVector w(2, 2);
  const std::uint64_t q = alpha_bit(1) | beta_bit(2, 0);
  w.amplitudes()(static_cast<Eigen::Index>(w.index_of(q))) = 1.0;
  // a+_{1a} a_{1b}: annihilating 1b passes 2a (-1), creating 1a passes none.
  CHECK(apply_spin(w, SpinOp::SPlus).amplitude(alpha_bit(0) | alpha_bit(1)) ==
        Complex(-1.0));
}

TEST_CASE("spin algebra commutators hold in the Fock space") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const int m = 2 + trial % 3;
    const int ne = 1 + trial % 4;
    const FockVector v = random_fock_vector(m, ne, rng);
    using enum SpinOp;
    const FockVector pm = apply_spin(apply_spin(v, SMinus), SPlus);
    const FockVector mp = apply_spin(apply_spin(v, SPlus), SMinus);
    const FockVector sz = apply_spin(v, Sz);
    CHECK(max_abs(combine(combine(pm, 1.0, mp, -1.0), 1.0, sz, -2.0)) < 1e-12);

    const FockVector zp = apply_spin(apply_spin(v, SPlus), Sz);
    const FockVector pz = apply_spin(apply_spin(v, Sz), SPlus);
    CHECK(max_abs(combine(combine(zp, 1.0, pz, -1.0), 1.0, apply_spin(v, SPlus),
                          -1.0)) < 1e-12);
    const FockVector zm = apply_spin(apply_spin(v, SMinus), Sz);
    const FockVector mz = apply_spin(apply_spin(v, Sz), SMinus);
    CHECK(max_abs(combine(combine(zm, 1.0, mz, -1.0), 1.0, apply_spin(v, SMinus),
                          1.0)) < 1e-12);
  }
}

TEST_CASE("Cartesian spin operators are Hermitian") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const FockVector v = random_fock_vector(3, 1 + trial % 4, rng);
    const FockVector w = random_fock_vector(3, 1 + trial % 4, rng);
    for (SpinOp op : {SpinOp::Sx, SpinOp::Sy, SpinOp::Sz}) {
      const Complex lhs = v.inner(apply_spin(w, op));
      const Complex rhs = std::conj(w.inner(apply_spin(v, op)));
      CHECK(std::abs(lhs - rhs) < 1e-12);
    }
  }
}

TEST_CASE("oracle expectations of small states") {
  CHECK(std::abs(oracle_expectation(pure_alpha(), Observable::S2) - 0.75) < 1e-15);
  CHECK(std::abs(oracle_expectation(alpha_triplet(), Observable::S2) - 2.0) < 1e-14);
  CHECK(std::abs(oracle_expectation(closed_shell_pair(), Observable::S2)) < 1e-15);
  const SpinorDeterminant det = gen_random_gchf(4, 4, 3);
  const Complex s2 = oracle_expectation(det, Observable::S2);
  const Complex ladder = oracle_expectation(det, Observable::Sz2) +
                         0.5 * (oracle_expectation(det, Observable::SPlusSMinus) +
                                oracle_expectation(det, Observable::SMinusSPlus));
  CHECK(std::abs(s2 - ladder) < 1e-12);
  CHECK(std::abs(oracle_expectation(det, Observable::SMinus) -
                 std::conj(oracle_expectation(det, Observable::SPlus))) < 1e-12);
}

TEST_CASE("oracle guard limits") {
  CHECK_NOTHROW(FockVector(6, 6));
  CHECK_THROWS_AS(FockVector(7, 1), SpinError);
  CHECK(checked_state_count(6, 6) == 924);
  try {
    checked_state_count(7, 2);
    FAIL("expected TooLarge");
  } catch (const SpinError& e) {
    CHECK(e.kind() == ErrorKind::TooLarge);
  }
  const SpinorDeterminant metric = random_with_metric(3, 2, 1);
  try {
    expand(metric);
    FAIL("expected MetricNotIdentity");
  } catch (const SpinError& e) {
    CHECK(e.kind() == ErrorKind::MetricNotIdentity);
  }
  CHECK(std::abs(expand(to_orthonormal_basis(metric)).norm() - 1.0) < 1e-12);
}
