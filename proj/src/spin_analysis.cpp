#include "gchfspin/spin_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace gchfspin {
namespace {

// sum_{ij} x(i, j) y(j, i)
Complex trace_of_product(const ComplexMatrix& x, const ComplexMatrix& y) {
  return (x.array() * y.transpose().array()).sum();
}

double ne_of(const OverlapBlocks& blocks) {
  return static_cast<double>(blocks.n_electrons());
}

}  // namespace

double expect_sz(const OverlapBlocks& blocks) {
  const auto [n_alpha, n_beta] = electron_counts(blocks);
  return 0.5 * (n_alpha - n_beta);
}

double z_noncollinearity(const OverlapBlocks& blocks) {
  const double dev = (blocks.aa - blocks.bb).squaredNorm();
  return 0.25 * (ne_of(blocks) - dev);
}

double expect_sz2(const OverlapBlocks& blocks) {
  const double sz = expect_sz(blocks);
  return sz * sz + z_noncollinearity(blocks);
}

double expect_sminus_splus(const OverlapBlocks& blocks) {
  const Complex tr = blocks.ba.trace();
  const Complex value = blocks.bb.trace() + tr * blocks.ab.trace() -
                        trace_of_product(blocks.ba, blocks.ab);
  return checked_real(value, "<S-S+>");
}

double expect_splus_sminus(const OverlapBlocks& blocks) {
  const Complex tr = blocks.ab.trace();
  const Complex value = blocks.aa.trace() + tr * blocks.ba.trace() -
                        trace_of_product(blocks.ab, blocks.ba);
  return checked_real(value, "<S+S->");
}

Complex expect_splus(const OverlapBlocks& blocks) { return blocks.ab.trace(); }

double expect_s2(const OverlapBlocks& blocks) {
  return expect_sz2(blocks) +
         0.5 * (expect_splus_sminus(blocks) + expect_sminus_splus(blocks));
}

S2Decomposition decompose_s2(const OverlapBlocks& blocks) {
  const auto [n_alpha, n_beta] = electron_counts(blocks);
  const double n_min = std::min(n_alpha, n_beta);
  S2Decomposition d;
  d.s_effective = 0.5 * std::abs(n_alpha - n_beta);
  d.rohf_term = d.s_effective * (d.s_effective + 1.0);
  d.z_noncollinearity = z_noncollinearity(blocks);
  d.spin_contamination = n_min - blocks.ab.squaredNorm();
  d.xy_perpendicularity = std::norm(expect_splus(blocks));
  d.total = d.rohf_term + d.z_noncollinearity + d.spin_contamination +
            d.xy_perpendicularity;
  return d;
}

}  // namespace gchfspin
