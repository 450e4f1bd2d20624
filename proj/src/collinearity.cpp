#include "gchfspin/collinearity.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <tuple>

#include <fmt/format.h>

#include "gchfspin/error.hpp"
#include "gchfspin/spin_analysis.hpp"

namespace gchfspin {
namespace {

constexpr double kUnitTol = 1e-10;
constexpr double kSymmetryTol = 1e-10;
constexpr double kDegeneracyGap = 1e-10;
constexpr int kMaxSweeps = 64;

}  // namespace

SpinVector spin_vector(const OverlapBlocks& blocks) {
  const Complex splus = expect_splus(blocks);
  return {splus.real(), splus.imag(), expect_sz(blocks)};
}

const ComplexMatrix& SpinComponentMatrices::operator[](int mu) const {
  switch (mu) {
    case 0: return x;
    case 1: return y;
    default: return z;
  }
}

SpinComponentMatrices spin_component_matrices(const OverlapBlocks& blocks) {
  // S_x phi = (b, a)/2, S_y phi = (-i b, i a)/2, S_z phi = (a, -b)/2.
  const Complex i{0.0, 1.0};
  return {0.5 * (blocks.ab + blocks.ba),
          0.5 * (-i * blocks.ab + i * blocks.ba),
          0.5 * (blocks.aa - blocks.bb)};
}

Eigen::Matrix3d a_matrix(const OverlapBlocks& blocks) {
  const SpinComponentMatrices m = spin_component_matrices(blocks);
  const double quarter_ne = 0.25 * static_cast<double>(blocks.n_electrons());
  Eigen::Matrix3d b;
  for (int mu = 0; mu < 3; ++mu) {
    for (int nu = 0; nu < 3; ++nu) {
      const Complex tr = (m[mu].array() * m[nu].transpose().array()).sum();
      b(mu, nu) = (mu == nu ? quarter_ne : 0.0) - tr.real();
    }
  }
  return 0.5 * (b + b.transpose());
}

void require_unit_vector(const Eigen::Vector3d& u) {
  const double norm = u.norm();
  if (!(std::abs(norm - 1.0) <= kUnitTol)) {
    throw SpinError(ErrorKind::NotUnitVector,
                    fmt::format("axis has norm {:.12f}", norm));
  }
}

double col_along(const Eigen::Matrix3d& a, const Eigen::Vector3d& u) {
  require_unit_vector(u);
  return u.dot(a * u);
}

double col_along(const OverlapBlocks& blocks, const Eigen::Vector3d& u) {
  return col_along(a_matrix(blocks), u);
}

Eigen::Vector3d sign_normalized(const Eigen::Vector3d& v) {
  Eigen::Index k = 0;
  v.cwiseAbs().maxCoeff(&k);
  return v(k) < 0.0 ? Eigen::Vector3d(-v) : v;
}

SymmetricEigen3 jacobi_eigen3(const Eigen::Matrix3d& input) {
  Eigen::Matrix3d a = 0.5 * (input + input.transpose());
  Eigen::Matrix3d v = Eigen::Matrix3d::Identity();

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    const double off = a(0, 1) * a(0, 1) + a(0, 2) * a(0, 2) + a(1, 2) * a(1, 2);
    if (off == 0.0) break;
    for (int p = 0; p < 2; ++p) {
      for (int q = p + 1; q < 3; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        // Annihilate a(p, q) with the smaller of the two rotation angles.
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        Eigen::Matrix3d rot = Eigen::Matrix3d::Identity();
        rot(p, p) = c;
        rot(q, q) = c;
        rot(p, q) = s;
        rot(q, p) = -s;
        a = rot.transpose() * a * rot;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        v = v * rot;
      }
    }
  }

  std::array<int, 3> order{0, 1, 2};
  std::sort(order.begin(), order.end(),
            [&](int l, int r) { return a(l, l) < a(r, r); });
  SymmetricEigen3 out;
  for (int k = 0; k < 3; ++k) {
    out.values(k) = a(order[k], order[k]);
    out.vectors.col(k) = sign_normalized(v.col(order[k]).normalized());
  }
  return out;
}

CollinearityResult min_collinearity(const Eigen::Matrix3d& a) {
  const double asym = (a - a.transpose()).cwiseAbs().maxCoeff();
  if (!(asym <= kSymmetryTol)) {
    throw SpinError(ErrorKind::NotSymmetric,
                    fmt::format("A is not symmetric (residual {:.3e})", asym));
  }
  const SymmetricEigen3 eig = jacobi_eigen3(a);

  CollinearityResult r;
  r.a_matrix = 0.5 * (a + a.transpose());
  r.eigenvalues = eig.values;
  r.eigenvectors = eig.vectors;
  r.col = eig.values(0);
  r.optimal_axis = eig.vectors.col(0);
  r.degenerate = eig.values(1) - eig.values(0) < kDegeneracyGap;
  if (r.degenerate) {
    auto key = [&](int k) {
      const Eigen::Vector3d& u = eig.vectors.col(k);
      return std::make_tuple(std::abs(u.z()), std::abs(u.x()), std::abs(u.y()));
    };
    int best = 0;
    for (int k = 1; k < 3; ++k) {
      if (eig.values(k) - eig.values(0) < kDegeneracyGap && key(k) > key(best)) {
        best = k;
      }
    }
    r.optimal_axis = eig.vectors.col(best);
  }
  return r;
}

}  // namespace gchfspin
