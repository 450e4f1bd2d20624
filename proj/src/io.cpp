#include "gchfspin/io.hpp"

#include <array>
#include <fstream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>

#include <fmt/format.h>
#include <openssl/evp.h>

#include "gchfspin/error.hpp"

namespace gchfspin {
namespace {

using nlohmann::json;

[[noreturn]] void parse_error(const std::string& message) {
  throw SpinError(ErrorKind::ParseError, message);
}

[[noreturn]] void shape_error(const std::string& message) {
  throw SpinError(ErrorKind::ShapeError, message);
}

Eigen::Index read_dimension(const json& doc, const char* key) {
  if (!doc.contains(key)) parse_error(fmt::format("missing field '{}'", key));
  const json& v = doc.at(key);
  if (!v.is_number_integer()) {
    parse_error(fmt::format("'{}' must be an integer", key));
  }
  const auto value = v.get<std::int64_t>();
  if (value < 1) shape_error(fmt::format("'{}' must be positive, got {}", key, value));
  return static_cast<Eigen::Index>(value);
}

Complex read_complex(const json& v, const char* key) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    parse_error(fmt::format("'{}' entries must be [re, im] number pairs", key));
  }
  return {v[0].get<double>(), v[1].get<double>()};
}

ComplexMatrix read_matrix(const json& doc, const char* key, Eigen::Index rows,
                          Eigen::Index cols) {
  if (!doc.contains(key)) parse_error(fmt::format("missing field '{}'", key));
  const json& m = doc.at(key);
  if (!m.is_array()) parse_error(fmt::format("'{}' must be an array of rows", key));
  for (const json& row : m) {
    if (!row.is_array()) parse_error(fmt::format("'{}' rows must be arrays", key));
  }
  if (static_cast<Eigen::Index>(m.size()) != rows) {
    shape_error(fmt::format("'{}' has {} rows, expected {}", key, m.size(), rows));
  }
  ComplexMatrix out(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const json& row = m[static_cast<std::size_t>(i)];
    if (static_cast<Eigen::Index>(row.size()) != cols) {
      shape_error(fmt::format("'{}' row {} has {} entries, expected {}", key, i,
                              row.size(), cols));
    }
    for (Eigen::Index j = 0; j < cols; ++j) {
      out(i, j) = read_complex(row[static_cast<std::size_t>(j)], key);
    }
  }
  return out;
}

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back({m(i, j).real(), m(i, j).imag()});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

SpinorDeterminant parse_determinant(std::string_view text,
                                    const LoadOptions& options) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_error(e.what());
  }
  if (!doc.is_object()) parse_error("document must be a JSON object");

  const Eigen::Index m = read_dimension(doc, "basis_dim");
  const Eigen::Index ne = read_dimension(doc, "n_electrons");
  if (ne > 2 * m) {
    shape_error(fmt::format("n_electrons {} exceeds 2*basis_dim = {}", ne, 2 * m));
  }
  ComplexMatrix alpha = read_matrix(doc, "coeff_alpha", m, ne);
  ComplexMatrix beta = read_matrix(doc, "coeff_beta", m, ne);
  std::optional<ComplexMatrix> metric;
  if (doc.contains("ao_overlap") && !doc.at("ao_overlap").is_null()) {
    metric = read_matrix(doc, "ao_overlap", m, m);
  }

  SpinorDeterminant det = [&] {
    try {
      return SpinorDeterminant(std::move(alpha), std::move(beta), std::move(metric));
    } catch (const SpinError& e) {
      if (e.kind() == ErrorKind::DimensionMismatch) shape_error(e.what());
      throw;
    }
  }();

  if (options.orthonormalize) return orthonormalize(det);
  const double residual = det.orthonormality_residual();
  if (!(residual <= kInputOrthonormalityTol)) {
    throw SpinError(ErrorKind::NotOrthonormal,
                    fmt::format("spinor Gram residual {:.3e} exceeds {:.0e}; "
                                "rerun with --orthonormalize",
                                residual, kInputOrthonormalityTol));
  }
  return det;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw SpinError(ErrorKind::ParseError,
                    fmt::format("cannot open '{}'", path.string()));
  }
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

SpinorDeterminant load_determinant(const std::filesystem::path& path,
                                   const LoadOptions& options) {
  return parse_determinant(read_file(path), options);
}

json determinant_to_json(const SpinorDeterminant& det) {
  json doc;
  doc["basis_dim"] = det.basis_dim();
  doc["n_electrons"] = det.n_electrons();
  doc["coeff_alpha"] = matrix_to_json(det.alpha());
  doc["coeff_beta"] = matrix_to_json(det.beta());
  if (det.ao_overlap()) doc["ao_overlap"] = matrix_to_json(*det.ao_overlap());
  return doc;
}

void save_determinant(const SpinorDeterminant& det,
                      const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw SpinError(ErrorKind::ParseError,
                    fmt::format("cannot write '{}'", path.string()));
  }
  out << determinant_to_json(det).dump(2) << '\n';
}

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(),
                                                              EVP_MD_CTX_free);
  EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr);
  EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size());
  EVP_DigestFinal_ex(ctx.get(), digest.data(), &length);
  std::string hex;
  for (unsigned int i = 0; i < length; ++i) hex += fmt::format("{:02x}", digest[i]);
  return hex;
}

}  // namespace gchfspin
