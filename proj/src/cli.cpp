#include "gchfspin/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "gchfspin/collinearity.hpp"
#include "gchfspin/error.hpp"
#include "gchfspin/io.hpp"
#include "gchfspin/oracle.hpp"
#include "gchfspin/reference_fixtures.hpp"
#include "gchfspin/report.hpp"
#include "gchfspin/spin_analysis.hpp"
#include "gchfspin/spin_frame.hpp"

namespace gchfspin {
namespace {

constexpr double kOracleCheckTol = 1e-8;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int cmd_analyze(const std::string& path, bool orthonormalize,
                const std::vector<double>& axis, bool align_optimal, bool json,
                std::ostream& out) {
  const std::string bytes = read_file(path);
  const SpinorDeterminant det = parse_determinant(bytes, {orthonormalize});
  AnalysisOptions options;
  if (!axis.empty()) options.axis = Eigen::Vector3d(axis[0], axis[1], axis[2]);
  options.align_optimal = align_optimal;
  AnalysisReport report = analyze(det, options);
  report.source_path = path;
  report.source_sha256 = sha256_hex(bytes);
  if (json) {
    out << to_json(report).dump(2) << '\n';
  } else {
    write_text(out, report);
  }
  return kExitOk;
}

int cmd_axis(const std::string& path, bool orthonormalize, bool json,
             std::ostream& out) {
  const SpinorDeterminant det = load_determinant(path, {orthonormalize});
  const CollinearityResult result = collinearity(build_overlap_blocks(det));
  if (json) {
    out << to_json(result).dump(2) << '\n';
  } else {
    write_text(out, result);
  }
  return kExitOk;
}

int cmd_oracle_check(const std::string& path, bool orthonormalize,
                     std::ostream& out) {
  const SpinorDeterminant det = load_determinant(path, {orthonormalize});
  const OverlapBlocks blocks = build_overlap_blocks(det);
  const OracleMoments oracle = oracle_moments(det);

  const SpinVector spin = spin_vector(blocks);
  const Eigen::Vector3d s = spin.as_vector();
  const Eigen::Matrix3d a = a_matrix(blocks);
  const Complex splus = expect_splus(blocks);

  struct Row {
    std::string name;
    double formula;
    Complex reference;
  };
  std::vector<Row> rows{
      {"<Sz>", expect_sz(blocks), oracle.sz},
      {"<Sz^2>", expect_sz2(blocks), oracle.sz2},
      {"<S-S+>", expect_sminus_splus(blocks), oracle.sminus_splus},
      {"<S+S->", expect_splus_sminus(blocks), oracle.splus_sminus},
      {"Re <S+>", splus.real(), oracle.splus.real()},
      {"Im <S+>", splus.imag(), oracle.splus.imag()},
      {"<S^2>", expect_s2(blocks), oracle.s2},
  };
  const char* axes = "xyz";
  for (int mu = 0; mu < 3; ++mu) {
    for (int nu = 0; nu < 3; ++nu) {
      rows.push_back({fmt::format("Re <S{}S{}>", axes[mu], axes[nu]),
                      a(mu, nu) + s(mu) * s(nu), oracle.ss[mu][nu].real()});
    }
  }

  double max_dev = 0.0;
  fmt::print(out, "{:<14} {:>22} {:>22} {:>10}\n", "quantity", "formula",
             "oracle", "|diff|");
  for (const Row& row : rows) {
    // Complex reference: the imaginary part of a real observable is a deviation too.
    const double dev = std::abs(Complex(row.formula) - row.reference);
    max_dev = std::max(max_dev, dev);
    fmt::print(out, "{:<14} {:>22.15f} {:>22.15f} {:>10.2e}\n", row.name,
               row.formula, row.reference.real(), dev);
  }
  const bool ok = max_dev <= kOracleCheckTol;
  fmt::print(out, "max deviation {:.3e} ({} {:.0e})\n", max_dev,
             ok ? "<=" : ">", kOracleCheckTol);
  return ok ? kExitOk : kExitValidation;
}

int cmd_gen(const std::string& kind, Eigen::Index m, Eigen::Index ne,
            std::uint64_t seed, std::optional<Eigen::Index> open,
            std::optional<Eigen::Index> n_alpha, const std::string& path,
            std::ostream& out) {
  if (m < 1 || ne < 1 || ne > 2 * m) {
    throw UsageError(fmt::format("need 1 <= --ne <= 2*--m, got m={} ne={}", m, ne));
  }
  std::optional<SpinorDeterminant> det;
  if (kind == "random") {
    det = gen_random_gchf(m, ne, seed);
  } else if (kind == "rhf") {
    if (ne % 2 != 0) throw UsageError("rhf needs an even electron count");
    det = gen_rhf(gaussian_matrix(m, ne / 2, seed));
  } else if (kind == "rohf") {
    const Eigen::Index p = open.value_or(ne % 2);
    if (p < 0 || p > ne || (ne - p) % 2 != 0 || (ne - p) / 2 + p > m) {
      throw UsageError(fmt::format(
          "rohf needs ne - open even and (ne - open)/2 + open <= m "
          "(ne={} open={} m={})",
          ne, p, m));
    }
    const ComplexMatrix orbitals = gaussian_matrix(m, (ne - p) / 2 + p, seed);
    det = gen_rohf(orbitals.leftCols((ne - p) / 2), orbitals.rightCols(p));
  } else if (kind == "dods") {
    const Eigen::Index p = n_alpha.value_or((ne + 1) / 2);
    if (p < 0 || p > ne || p > m || ne - p > m) {
      throw UsageError(fmt::format(
          "dods needs n-alpha <= m and ne - n-alpha <= m (ne={} n-alpha={} m={})",
          ne, p, m));
    }
    const ComplexMatrix orbitals = gaussian_matrix(m, ne, seed);
    det = gen_dods(orbitals.leftCols(p), orbitals.rightCols(ne - p));
  }
  save_determinant(*det, path);
  fmt::print(out, "wrote {} determinant (M={}, Ne={}) to {}\n", kind, m, ne, path);
  return kExitOk;
}

int cmd_paper_fixture(std::ostream& out) {
  bool all = true;
  for (const FixtureCheck& check : run_reference_fixtures()) {
    all = all && check.passed;
    fmt::print(out, "[{}] {}: {}\n", check.passed ? "PASS" : "FAIL", check.name,
               check.detail);
  }
  return all ? kExitOk : kExitValidation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spin analysis of general complex (two-component) determinants",
               "gchf-spin"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  std::string file;
  bool orthonormalize = false;
  bool json = false;
  bool text = false;
  std::vector<double> axis;
  bool align_optimal = false;

  auto* analyze_cmd = app.add_subcommand("analyze", "Full spin analysis report");
  analyze_cmd->add_option("file", file, "Determinant document")->required();
  analyze_cmd->add_flag("--orthonormalize", orthonormalize,
                        "Loewdin-orthonormalize the spinors first");
  analyze_cmd->add_option("--axis", axis, "Also report col(u) for this unit axis")
      ->expected(3);
  analyze_cmd->add_flag("--align-optimal", align_optimal,
                        "Rotate to the optimal axis and re-decompose <S^2>");
  auto* json_flag = analyze_cmd->add_flag("--json", json, "Machine-readable output");
  analyze_cmd->add_flag("--text", text, "Text output (default)")->excludes(json_flag);

  auto* axis_cmd = app.add_subcommand("axis", "Collinearity matrix and optimal axis");
  axis_cmd->add_option("file", file, "Determinant document")->required();
  axis_cmd->add_flag("--orthonormalize", orthonormalize);
  axis_cmd->add_flag("--json", json);

  auto* oracle_cmd = app.add_subcommand(
      "oracle-check", "Compare closed formulas against the Fock-space oracle");
  oracle_cmd->add_option("file", file, "Determinant document")->required();
  oracle_cmd->add_flag("--orthonormalize", orthonormalize);

  std::string kind;
  Eigen::Index m = 0;
  Eigen::Index ne = 0;
  std::uint64_t seed = 0;
  std::optional<Eigen::Index> open;
  std::optional<Eigen::Index> n_alpha;
  std::string out_path;
  auto* gen_cmd = app.add_subcommand("gen", "Write a generated determinant");
  gen_cmd->add_option("--kind", kind, "Determinant class")
      ->required()
      ->check(CLI::IsMember({"rhf", "rohf", "dods", "random"}));
  gen_cmd->add_option("--m", m, "Spatial basis size")->required();
  gen_cmd->add_option("--ne", ne, "Electron count")->required();
  gen_cmd->add_option("--seed", seed, "PRNG seed")->required();
  gen_cmd->add_option("--open", open, "rohf: singly occupied orbitals (default ne mod 2)");
  gen_cmd->add_option("--n-alpha", n_alpha, "dods: alpha electrons (default ceil(ne/2))");
  gen_cmd->add_option("--out", out_path, "Output path")->required();

  auto* fixture_cmd = app.add_subcommand(
      "paper-fixture", "Run the built-in H2O+ reference regression checks");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze_cmd) {
      return cmd_analyze(file, orthonormalize, axis, align_optimal, json, out);
    }
    if (*axis_cmd) return cmd_axis(file, orthonormalize, json, out);
    if (*oracle_cmd) return cmd_oracle_check(file, orthonormalize, out);
    if (*gen_cmd) return cmd_gen(kind, m, ne, seed, open, n_alpha, out_path, out);
    if (*fixture_cmd) return cmd_paper_fixture(out);
  } catch (const UsageError& e) {
    fmt::print(err, "usage error: {}\n", e.what());
    return kExitUsage;
  } catch (const SpinError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitValidation;
  }
  return kExitUsage;
}

}  // namespace gchfspin
