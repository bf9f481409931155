#pragma once

// Flat-file formats: complex matrices as JSON {dim, re, im} with row-major
// arrays, and CSV numeric cells in shortest round-trip decimal form.

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <system_error>

#include <json.hpp>

#include "qgeom/hilbert.hpp"

namespace qgeom {

/// Shortest decimal string that round-trips to the same double.
inline std::string format_shortest(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  if (res.ec != std::errc()) throw std::runtime_error("format_shortest: conversion failed");
  return std::string(buf, res.ptr);
}

inline nlohmann::json matrix_to_json(const ComplexMatrix<double>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix_to_json: matrix must be square");
  nlohmann::json j;
  j["dim"] = m.rows();
  nlohmann::json re = nlohmann::json::array();
  nlohmann::json im = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      re.push_back(m(r, c).real());
      im.push_back(m(r, c).imag());
    }
  }
  j["re"] = std::move(re);
  j["im"] = std::move(im);
  return j;
}

/// Real matrices (tensor components) use the same layout with a zero
/// imaginary part.
inline nlohmann::json matrix_to_json(const RealMatrix<double>& m) {
  return matrix_to_json(ComplexMatrix<double>(m.cast<std::complex<double>>()));
}

inline ComplexMatrix<double> matrix_from_json(const nlohmann::json& j) {
  if (!j.contains("dim") || !j.contains("re") || !j.contains("im"))
    throw std::invalid_argument("matrix_from_json: expected fields dim, re, im");
  const Eigen::Index n = j.at("dim").get<Eigen::Index>();
  if (n < 1) throw std::invalid_argument("matrix_from_json: dim must be positive");
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (static_cast<Eigen::Index>(re.size()) != n * n ||
      static_cast<Eigen::Index>(im.size()) != n * n)
    throw std::invalid_argument("matrix_from_json: re/im must hold dim*dim entries");
  ComplexMatrix<double> m(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) {
      const auto k = static_cast<std::size_t>(r * n + c);
      m(r, c) = std::complex<double>(re.at(k).get<double>(), im.at(k).get<double>());
    }
  return m;
}

struct HermitianLoadResult {
  HermitianMatrix<double> matrix;
  double residual;  // max|M - M^dagger| of the raw input
};

/// Parses a {dim, re, im} matrix and enforces Hermiticity; throws with the
/// symmetrisation residual in the message when the input is not Hermitian.
inline HermitianLoadResult hermitian_from_json(const nlohmann::json& j,
                                               double tol = kHermitianTol) {
  const ComplexMatrix<double> raw = matrix_from_json(j);
  const double residual = max_abs<double>((raw - raw.adjoint()).eval());
  if (!(residual <= tol)) {
    std::ostringstream msg;
    msg << "matrix is not Hermitian: symmetrisation residual " << residual
        << " exceeds tolerance " << tol;
    throw std::invalid_argument(msg.str());
  }
  return HermitianLoadResult{HermitianMatrix<double>(raw, tol), residual};
}

inline nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

/// Writes text atomically: to a sibling temp file first, then rename.
inline void write_file_atomic(const std::string& path, const std::string& contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open file for writing: " + tmp);
    out << contents;
    if (!out) throw std::runtime_error("write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("cannot rename temporary file onto: " + path);
  }
}

}  // namespace qgeom
