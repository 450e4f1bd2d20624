#pragma once

#include "gchfspin/determinant.hpp"

namespace gchfspin {

// Spin expectation values of a single spinor determinant, hbar = 1. All of
// them are evaluated from the overlap blocks; any quantity that must be real
// is checked for an imaginary residue (NonHermitianResult above 1e-10).

/// (N_alpha - N_beta) / 2.
double expect_sz(const OverlapBlocks& blocks);

/// <Sz^2> - <Sz>^2 = (Ne - ||o_aa - o_bb||_F^2) / 4.
double z_noncollinearity(const OverlapBlocks& blocks);

double expect_sz2(const OverlapBlocks& blocks);

/// N_beta + |tr o_ba|^2 - ||o_ba||_F^2, evaluated as the complex bilinear sum.
double expect_sminus_splus(const OverlapBlocks& blocks);

/// N_alpha + |tr o_ab|^2 - ||o_ab||_F^2.
double expect_splus_sminus(const OverlapBlocks& blocks);

/// <S+> = sum_i <phi_{i alpha}|phi_{i beta}> = tr(o_ab). Its real and
/// imaginary parts are <Sx> and <Sy>; <S-> is the conjugate.
Complex expect_splus(const OverlapBlocks& blocks);

/// <Sz^2> + (<S+S-> + <S-S+>) / 2.
double expect_s2(const OverlapBlocks& blocks);

/// The four-term split of <S^2>. Terms are defined with N_max/N_min so the
/// split holds whichever spin is in the majority.
struct S2Decomposition {
  double s_effective = 0.0;       // |N_alpha - N_beta| / 2, not an eigenvalue
  double rohf_term = 0.0;         // s (s + 1)
  double z_noncollinearity = 0.0;
  double spin_contamination = 0.0;  // N_min - ||o_ab||_F^2
  double xy_perpendicularity = 0.0;  // |<S+>|^2
  double total = 0.0;
};

S2Decomposition decompose_s2(const OverlapBlocks& blocks);

}  // namespace gchfspin
