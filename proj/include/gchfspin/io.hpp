#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "gchfspin/determinant.hpp"

namespace gchfspin {

// Determinant document (JSON, UTF-8):
//   {
//     "basis_dim": M,
//     "n_electrons": Ne,
//     "coeff_alpha": [[[re, im], ... Ne entries], ... M rows],
//     "coeff_beta":  same shape,
//     "ao_overlap":  optional M x M of [re, im]
//   }

struct LoadOptions {
  /// Loewdin-orthonormalize instead of rejecting a residual above 1e-8.
  bool orthonormalize = false;
};

/// Throws ParseError (malformed document), ShapeError (inconsistent
/// dimensions), InvalidMetric, NotOrthonormal or LinearlyDependent.
SpinorDeterminant parse_determinant(std::string_view text,
                                    const LoadOptions& options = {});
SpinorDeterminant load_determinant(const std::filesystem::path& path,
                                   const LoadOptions& options = {});

nlohmann::json determinant_to_json(const SpinorDeterminant& det);
/// Writes with full round-trip precision.
void save_determinant(const SpinorDeterminant& det,
                      const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);
/// Lowercase hex SHA-256 of `bytes`.
std::string sha256_hex(std::string_view bytes);

}  // namespace gchfspin
