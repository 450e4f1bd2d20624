#include "gchfspin/report.hpp"

#include <cmath>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "gchfspin/error.hpp"
#include "gchfspin/spin_frame.hpp"

namespace gchfspin {
namespace {

using nlohmann::json;

json vec_json(const Eigen::Vector3d& v) { return {v.x(), v.y(), v.z()}; }

json mat_json(const Eigen::Matrix3d& m) {
  json rows = json::array();
  for (int i = 0; i < 3; ++i) rows.push_back({m(i, 0), m(i, 1), m(i, 2)});
  return rows;
}

json decomposition_json(const S2Decomposition& d) {
  return {{"s_effective", d.s_effective},
          {"rohf_term", d.rohf_term},
          {"z_noncollinearity", d.z_noncollinearity},
          {"spin_contamination", d.spin_contamination},
          {"xy_perpendicularity", d.xy_perpendicularity},
          {"total", d.total}};
}

void require_identity(double lhs, double rhs, const char* what) {
  if (!(std::abs(lhs - rhs) <= kReportIdentityTol)) {
    throw SpinError(ErrorKind::InvariantViolation,
                    fmt::format("{}: {:.12e} vs {:.12e}", what, lhs, rhs));
  }
}

void write_row(std::ostream& out, const char* label, double value) {
  fmt::print(out, "  {:<36} {:>12.6f}\n", label, value);
}

void write_decomposition(std::ostream& out, const S2Decomposition& d) {
  write_row(out, "s (|N_alpha - N_beta| / 2)", d.s_effective);
  write_row(out, "s(s+1) (ROHF-like term)", d.rohf_term);
  write_row(out, "z-noncollinearity", d.z_noncollinearity);
  write_row(out, "spin contamination", d.spin_contamination);
  write_row(out, "x,y-perpendicularity", d.xy_perpendicularity);
  write_row(out, "<S^2> (sum of terms)", d.total);
}

}  // namespace

AnalysisReport analyze(const SpinorDeterminant& det,
                       const AnalysisOptions& options) {
  const OverlapBlocks blocks = build_overlap_blocks(det);
  AnalysisReport r;
  r.counts = electron_counts(blocks);
  r.sz = expect_sz(blocks);
  r.sz2 = expect_sz2(blocks);
  r.sminus_splus = expect_sminus_splus(blocks);
  r.splus_sminus = expect_splus_sminus(blocks);
  r.splus = expect_splus(blocks);
  r.s2 = expect_s2(blocks);
  r.decomposition = decompose_s2(blocks);
  r.spin = spin_vector(blocks);
  r.collinearity = collinearity(blocks);

  require_identity(r.decomposition.total, r.s2, "four-term sum vs <S^2>");
  require_identity(r.collinearity.a_matrix.trace() + r.spin.as_vector().squaredNorm(),
                   r.s2, "trace(A) + |<S>|^2 vs <S^2>");

  if (options.axis) {
    r.requested_axis = AxisVariance{*options.axis,
                                    col_along(r.collinearity.a_matrix, *options.axis)};
  }
  if (options.align_optimal) {
    const SpinorDeterminant aligned =
        align_to_axis(det, r.collinearity.optimal_axis);
    r.aligned_decomposition = decompose_s2(build_overlap_blocks(aligned));
    require_identity(r.aligned_decomposition->z_noncollinearity, r.collinearity.col,
                     "aligned z-noncollinearity vs col");
  }
  return r;
}

json to_json(const CollinearityResult& c) {
  json vectors = json::array();
  for (int k = 0; k < 3; ++k) vectors.push_back(vec_json(c.eigenvectors.col(k)));
  return {{"a_matrix", mat_json(c.a_matrix)},
          {"eigenvalues", vec_json(c.eigenvalues)},
          {"eigenvectors", vectors},
          {"col", c.col},
          {"optimal_axis", vec_json(c.optimal_axis)},
          {"degenerate", c.degenerate}};
}

json to_json(const AnalysisReport& r) {
  json doc;
  doc["tool_version"] = r.tool_version;
  doc["source"] = {{"path", r.source_path}, {"sha256", r.source_sha256}};
  doc["n_alpha"] = r.counts.n_alpha;
  doc["n_beta"] = r.counts.n_beta;
  doc["expectations"] = {{"sz", r.sz},
                         {"sz2", r.sz2},
                         {"sminus_splus", r.sminus_splus},
                         {"splus_sminus", r.splus_sminus},
                         {"splus", {r.splus.real(), r.splus.imag()}},
                         {"s2", r.s2}};
  doc["decomposition"] = decomposition_json(r.decomposition);
  doc["spin_vector"] = {r.spin.sx, r.spin.sy, r.spin.sz};
  doc["collinearity"] = to_json(r.collinearity);
  if (r.requested_axis) {
    doc["axis"] = {{"u", vec_json(r.requested_axis->axis)},
                   {"col", r.requested_axis->col}};
  }
  if (r.aligned_decomposition) {
    doc["aligned_decomposition"] = decomposition_json(*r.aligned_decomposition);
  }
  return doc;
}

void write_text(std::ostream& out, const CollinearityResult& c) {
  fmt::print(out, "Collinearity matrix A\n");
  for (int i = 0; i < 3; ++i) {
    fmt::print(out, "  {:+.6f}  {:+.6f}  {:+.6f}\n", c.a_matrix(i, 0),
               c.a_matrix(i, 1), c.a_matrix(i, 2));
  }
  fmt::print(out, "  eigenvalues {:.6f} {:.6f} {:.6f}\n", c.eigenvalues(0),
             c.eigenvalues(1), c.eigenvalues(2));
  write_row(out, "col (lowest eigenvalue)", c.col);
  fmt::print(out, "  {:<36} ({:+.6f}, {:+.6f}, {:+.6f}){}\n", "optimal axis u0",
             c.optimal_axis.x(), c.optimal_axis.y(), c.optimal_axis.z(),
             c.degenerate ? "  [degenerate]" : "");
}

void write_text(std::ostream& out, const AnalysisReport& r) {
  fmt::print(out, "gchf-spin {}  {}  sha256 {}\n", r.tool_version, r.source_path,
             r.source_sha256);
  fmt::print(out, "Electron counts\n");
  write_row(out, "N_alpha", r.counts.n_alpha);
  write_row(out, "N_beta", r.counts.n_beta);
  fmt::print(out, "Spin expectation values\n");
  write_row(out, "<Sz>", r.sz);
  write_row(out, "<Sz^2>", r.sz2);
  write_row(out, "<S-S+>", r.sminus_splus);
  write_row(out, "<S+S->", r.splus_sminus);
  write_row(out, "Re <S+>", r.splus.real());
  write_row(out, "Im <S+>", r.splus.imag());
  write_row(out, "<S^2>", r.s2);
  fmt::print(out, "Decomposition of <S^2>\n");
  write_decomposition(out, r.decomposition);
  fmt::print(out, "Spin vector\n");
  fmt::print(out, "  {:<36} ({:+.6f}, {:+.6f}, {:+.6f})\n", "<S>", r.spin.sx,
             r.spin.sy, r.spin.sz);
  write_text(out, r.collinearity);
  if (r.requested_axis) {
    const auto& a = *r.requested_axis;
    fmt::print(out, "  col(u) for u = ({:+.6f}, {:+.6f}, {:+.6f}) {:>9.6f}\n",
               a.axis.x(), a.axis.y(), a.axis.z(), a.col);
  }
  if (r.aligned_decomposition) {
    fmt::print(out, "Decomposition after aligning z to u0\n");
    write_decomposition(out, *r.aligned_decomposition);
  }
}

}  // namespace gchfspin
