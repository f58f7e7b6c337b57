#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "rotn/rotation.hpp"

namespace rotn {

/// Raised when a file or command-line value cannot be read as the
/// expected format (as opposed to being well-formed but invalid).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One matrix entry rendered to 12 significant digits in plain decimal
/// notation. Values that round to zero at the 1e-12 level print as
/// 0.000000000000.
std::string format_entry(double v);

/// Rows on separate lines, entries space-separated.
std::string format_matrix_text(const Matrix& m);
/// Entries space-separated on one line.
std::string format_vector_text(const Vector& v);
/// Nested JSON arrays, one inner array per row, full double precision.
std::string format_matrix_json(const Matrix& m);

Matrix parse_matrix_text(const std::string& text);
Matrix parse_matrix_json(const std::string& text);

/// Reads a matrix file, accepting either the text format or JSON nested
/// arrays (detected from the first non-space character).
Matrix load_matrix_file(const std::string& path);

/// A rotation spec file plus its optional reproducibility seed.
struct SpecFile {
  RotationSpec spec;
  std::optional<uint64_t> seed;
};

/// Loads a JSON spec file:
///   { "dim": n,
///     "planes": [ { "a": [...], "b": [...],
///                   "angle_degrees" | "angle_radians": x }, ... ],
///     "axis": [...],   // optional
///     "seed": s }      // optional
/// Exactly one angle key is allowed per plane. Structural problems
/// (unreadable file, malformed JSON, missing or mistyped fields) raise
/// ParseError; violations of the spec's own invariants raise
/// std::invalid_argument.
SpecFile load_spec_file(const std::string& path);

/// Entire file contents; ParseError when unreadable.
std::string read_file(const std::string& path);

/// Parses "x1,x2,..." into a vector.
Vector parse_vector_arg(const std::string& text);

}  // namespace rotn
