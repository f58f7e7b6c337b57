#include "rotn/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace rotn {

namespace {

using nlohmann::json;

json parse_json(const std::string& text, const std::string& where) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(where + ": " + e.what());
  }
}

Vector vector_from_json(const json& node, const std::string& where) {
  if (!node.is_array() || node.empty()) {
    throw ParseError(where + " must be a non-empty array of numbers");
  }
  std::vector<double> entries;
  entries.reserve(node.size());
  for (const auto& v : node) {
    if (!v.is_number()) {
      throw ParseError(where + " must contain numbers only");
    }
    entries.push_back(v.get<double>());
  }
  return Vector(std::move(entries));
}

double parse_double(const std::string& token, const std::string& where) {
  size_t consumed = 0;
  double value = 0.0;
  try {
    value = std::stod(token, &consumed);
  } catch (const std::exception&) {
    throw ParseError(where + ": cannot parse '" + token + "' as a number");
  }
  if (consumed != token.size()) {
    throw ParseError(where + ": trailing junk in '" + token + "'");
  }
  return value;
}

}  // namespace

std::string format_entry(double v) {
  if (std::fabs(v) < 1e-12) return "0.000000000000";
  int decimals = 11 - static_cast<int>(std::floor(std::log10(std::fabs(v))));
  if (decimals < 0) decimals = 0;
  char buf[512];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

std::string format_matrix_text(const Matrix& m) {
  std::string out;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ' ';
      out += format_entry(m(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string format_vector_text(const Vector& v) {
  std::string out;
  for (int i = 0; i < v.dim(); ++i) {
    if (i > 0) out += ' ';
    out += format_entry(v[i]);
  }
  out += '\n';
  return out;
}

std::string format_matrix_json(const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows.dump() + "\n";
}

Matrix parse_matrix_text(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream lines(text);
  std::string line;
  int lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    std::istringstream tokens(line);
    std::vector<double> row;
    std::string token;
    while (tokens >> token) {
      row.push_back(parse_double(token, "line " + std::to_string(lineno)));
    }
    if (row.empty()) continue;  // blank line
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError("line " + std::to_string(lineno) + " has " +
                       std::to_string(row.size()) + " entries, expected " +
                       std::to_string(rows.front().size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    throw ParseError("matrix text contains no rows");
  }
  return Matrix::from_rows(rows);
}

Matrix parse_matrix_json(const std::string& text) {
  const json node = parse_json(text, "matrix JSON");
  if (!node.is_array() || node.empty()) {
    throw ParseError("matrix JSON must be a non-empty array of rows");
  }
  std::vector<std::vector<double>> rows;
  rows.reserve(node.size());
  for (size_t i = 0; i < node.size(); ++i) {
    const auto& r = node[i];
    if (!r.is_array() || r.empty()) {
      throw ParseError("matrix JSON row " + std::to_string(i) +
                       " must be a non-empty array");
    }
    std::vector<double> row;
    row.reserve(r.size());
    for (const auto& v : r) {
      if (!v.is_number()) {
        throw ParseError("matrix JSON row " + std::to_string(i) +
                         " must contain numbers only");
      }
      row.push_back(v.get<double>());
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError("matrix JSON row " + std::to_string(i) + " has " +
                       std::to_string(row.size()) + " entries, expected " +
                       std::to_string(rows.front().size()));
    }
    rows.push_back(std::move(row));
  }
  return Matrix::from_rows(rows);
}

Matrix load_matrix_file(const std::string& path) {
  const std::string text = read_file(path);
  const size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) {
    throw ParseError(path + ": file is empty");
  }
  return text[first] == '[' ? parse_matrix_json(text) : parse_matrix_text(text);
}

SpecFile load_spec_file(const std::string& path) {
  const json node = parse_json(read_file(path), path);
  if (!node.is_object()) {
    throw ParseError(path + ": spec must be a JSON object");
  }
  if (!node.contains("dim") || !node["dim"].is_number_integer()) {
    throw ParseError(path + ": missing integer field 'dim'");
  }
  if (!node.contains("planes") || !node["planes"].is_array()) {
    throw ParseError(path + ": missing array field 'planes'");
  }

  SpecFile out{RotationSpec{node["dim"].get<int>(), {}, std::nullopt},
               std::nullopt};
  const auto& planes = node["planes"];
  out.spec.planes.reserve(planes.size());
  for (size_t k = 0; k < planes.size(); ++k) {
    const std::string where = path + ": plane " + std::to_string(k);
    const auto& pl = planes[k];
    if (!pl.is_object()) {
      throw ParseError(where + " must be an object");
    }
    if (!pl.contains("a") || !pl.contains("b")) {
      throw ParseError(where + " needs vector fields 'a' and 'b'");
    }
    const bool has_deg = pl.contains("angle_degrees");
    const bool has_rad = pl.contains("angle_radians");
    if (!has_deg && !has_rad) {
      throw ParseError(where +
                       " needs either 'angle_degrees' or 'angle_radians'");
    }
    if (has_deg && has_rad) {
      throw std::invalid_argument(
          where + " gives both 'angle_degrees' and 'angle_radians'; "
                  "pick one");
    }
    const auto& angle_node = pl[has_deg ? "angle_degrees" : "angle_radians"];
    if (!angle_node.is_number()) {
      throw ParseError(where + ": angle must be a number");
    }
    double angle = angle_node.get<double>();
    if (has_deg) angle *= std::numbers::pi / 180.0;
    out.spec.planes.push_back(PlaneSpec{vector_from_json(pl["a"], where + ".a"),
                                        vector_from_json(pl["b"], where + ".b"),
                                        angle});
  }

  if (node.contains("axis")) {
    out.spec.axis = vector_from_json(node["axis"], path + ": axis");
  }
  if (node.contains("seed")) {
    const auto& seed = node["seed"];
    if (!seed.is_number_integer() ||
        (!seed.is_number_unsigned() && seed.get<int64_t>() < 0)) {
      throw ParseError(path + ": seed must be a non-negative integer");
    }
    out.seed = seed.get<uint64_t>();
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot read file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) {
    throw ParseError("cannot read file: " + path);
  }
  return buf.str();
}

Vector parse_vector_arg(const std::string& text) {
  std::vector<double> entries;
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    std::string token = text.substr(start, comma - start);
    const size_t lo = token.find_first_not_of(" \t");
    if (lo == std::string::npos) {
      throw ParseError("vector argument has an empty entry");
    }
    const size_t hi = token.find_last_not_of(" \t");
    token = token.substr(lo, hi - lo + 1);
    entries.push_back(parse_double(token, "vector argument"));
    start = comma + 1;
  }
  return Vector(std::move(entries));
}

}  // namespace rotn
