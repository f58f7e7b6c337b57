#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "rotn/determinant.hpp"
#include "rotn/io.hpp"
#include "rotn/isoclinic.hpp"
#include "rotn/rotation.hpp"
#include "rotn/selftest.hpp"

namespace {

// Exit codes: 0 success/verified, 1 verification failed, 2 parse error,
// 3 semantic error in otherwise well-formed input.
constexpr int kExitVerifyFailed = 1;
constexpr int kExitParseError = 2;
constexpr int kExitSemanticError = 3;

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

int cmd_build(const std::string& spec_path, const std::string& output,
              bool strict) {
  const rotn::SpecFile sf = rotn::load_spec_file(spec_path);
  const rotn::Matrix r = rotn::rotation_nd(sf.spec, strict);
  std::cout << (output == "json" ? rotn::format_matrix_json(r)
                                 : rotn::format_matrix_text(r));
  return 0;
}

int cmd_apply(const std::string& spec_path, const std::string& vector_arg) {
  const rotn::SpecFile sf = rotn::load_spec_file(spec_path);
  const rotn::Vector x = rotn::parse_vector_arg(vector_arg);
  const rotn::Vector via_form = rotn::apply_vector_form(sf.spec, x);
  const rotn::Vector via_matrix =
      rotn::matvec(rotn::rotation_nd(sf.spec), x);
  // The two computation routes must agree; disagreement means the result
  // cannot be trusted and is reported instead of printed.
  const double diff = rotn::max_abs_diff(via_form, via_matrix);
  if (diff > rotn::EQ_TOL * std::max(1.0, rotn::norm(x))) {
    std::cerr << "error: vector-form and matrix-form results disagree (max "
                 "entry difference "
              << format_number(diff) << ")\n";
    return kExitVerifyFailed;
  }
  std::cout << rotn::format_vector_text(via_form);
  return 0;
}

int cmd_verify(const std::string& path) {
  const std::string text = rotn::read_file(path);
  const size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) {
    throw rotn::ParseError(path + ": file is empty");
  }
  rotn::Matrix r = [&] {
    if (text[first] == '{') {
      // A spec file: build the matrix, then judge it like any other.
      return rotn::rotation_nd(rotn::load_spec_file(path).spec);
    }
    return text[first] == '[' ? rotn::parse_matrix_json(text)
                              : rotn::parse_matrix_text(text);
  }();
  const rotn::RotationReport report = rotn::verify_rotation(r);
  std::cout << "ortho_residual = " << format_number(report.ortho_residual)
            << "\n"
            << "det_value = " << format_number(report.det_value) << "\n"
            << "is_rotation = " << (report.is_rotation ? "true" : "false")
            << "\n";
  return report.is_rotation ? 0 : kExitVerifyFailed;
}

int cmd_invariant(const std::string& spec_path, int samples,
                  const std::optional<uint64_t>& seed_flag) {
  const rotn::SpecFile sf = rotn::load_spec_file(spec_path);
  const uint64_t seed = seed_flag ? *seed_flag : sf.seed.value_or(0);
  const rotn::InvariantPlaneReport report =
      rotn::classify_invariant_planes(sf.spec, samples, seed);

  if (report.kind == rotn::InvariantKind::all_J_planes) {
    std::cout << "kind = all_J_planes\n";
    if (report.degenerate) {
      std::cout << "note = rotation is +/-I; every 2D subspace is invariant\n";
    }
    std::cout << "J =\n" << rotn::format_matrix_text(*report.j);
  } else {
    std::cout << "kind = none_extra\n";
  }
  std::cout << "witness_count = " << report.witnesses.size() << "\n";
  for (size_t i = 0; i < report.witnesses.size(); ++i) {
    std::cout << "witness " << i << " u = "
              << rotn::format_vector_text(report.witnesses[i].u);
    std::cout << "witness " << i << " v = "
              << rotn::format_vector_text(report.witnesses[i].v);
  }
  if (report.kind == rotn::InvariantKind::none_extra) {
    std::cout << "falsification_trials = " << report.trials << "\n"
              << "extra_invariant_found = " << report.extra_invariant << "\n";
    if (report.extra_invariant > 0) return kExitVerifyFailed;
  }
  return 0;
}

int cmd_det(const std::string& matrix_path, const std::string& method) {
  const rotn::Matrix a = rotn::load_matrix_file(matrix_path);
  if (method == "perm" || method == "both") {
    std::cout << "det_permutation = " << format_number(rotn::det_permutation(a))
              << "\n";
  }
  if (method == "lu" || method == "both") {
    std::cout << "det_lu = " << format_number(rotn::det_lu(a)) << "\n";
  }
  return 0;
}

int cmd_det_product(const std::string& a_path, const std::string& b_path,
                    double tol) {
  const rotn::Matrix a = rotn::load_matrix_file(a_path);
  const rotn::Matrix b = rotn::load_matrix_file(b_path);
  const rotn::DetProductReport report = rotn::check_product_property(a, b);
  const bool ok = report.residual < tol;
  std::cout << "det_of_product = " << format_number(report.lhs) << "\n"
            << "product_of_dets = " << format_number(report.rhs) << "\n"
            << "residual = " << format_number(report.residual) << "\n"
            << "verdict = " << (ok ? "ok" : "mismatch") << "\n";
  return ok ? 0 : kExitVerifyFailed;
}

int cmd_selftest(uint64_t seed, bool inject_failure) {
  return rotn::run_selftest(seed, inject_failure, std::cout)
             ? 0
             : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "rotn: rotation matrices in R^n built directly from plane/angle "
      "specifications"};
  app.require_subcommand(1);

  std::string spec_path;
  std::string matrix_path;
  std::string second_path;
  std::string output = "text";
  std::string method = "both";
  std::string vector_arg;
  bool strict = false;
  int samples = 1000;
  uint64_t seed = 0;
  double tol = 1e-9;
  bool inject_failure = false;

  CLI::App* build = app.add_subcommand(
      "build", "Construct the rotation matrix for a spec file");
  build->add_option("spec", spec_path, "JSON rotation spec file")->required();
  build->add_option("--output", output, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  build->add_flag("--strict", strict,
                  "Reject plane vectors that are not already orthonormal "
                  "instead of repairing them");

  CLI::App* apply = app.add_subcommand(
      "apply", "Apply the rotation of a spec file to a vector");
  apply->add_option("spec", spec_path, "JSON rotation spec file")->required();
  apply
      ->add_option("--vector", vector_arg,
                   "Comma-separated input vector, e.g. \"1,0,0\"")
      ->required();

  CLI::App* verify = app.add_subcommand(
      "verify",
      "Check that a matrix (text or JSON file) or a built spec is a rotation");
  verify->add_option("input", matrix_path, "Matrix file or JSON spec file")
      ->required();

  CLI::App* invariant = app.add_subcommand(
      "invariant", "Classify the invariant planes of a spec's rotation");
  invariant->add_option("spec", spec_path, "JSON rotation spec file")
      ->required();
  invariant->add_option("--samples", samples, "Witness/falsification samples")
      ->capture_default_str();
  invariant->add_option("--seed", seed, "Sampling seed (overrides the spec)");

  CLI::App* det =
      app.add_subcommand("det", "Determinant of a matrix file");
  det->add_option("matrix", matrix_path, "Matrix file")->required();
  det->add_option("--method", method, "perm needs n <= 10")
      ->check(CLI::IsMember({"perm", "lu", "both"}))
      ->capture_default_str();

  CLI::App* det_product = app.add_subcommand(
      "det-product", "Compare det(A*B) against det(A)*det(B)");
  det_product->add_option("a", matrix_path, "Left matrix file")->required();
  det_product->add_option("b", second_path, "Right matrix file")->required();
  det_product->add_option("--tol", tol, "Residual acceptance threshold")
      ->capture_default_str();

  CLI::App* selftest = app.add_subcommand(
      "selftest", "Run the cross-module invariant suite");
  selftest->add_option("--seed", seed, "Suite seed")->capture_default_str();
  selftest->add_flag("--inject-failure", inject_failure,
                     "Corrupt one computation on purpose (negative control)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParseError;
  }

  try {
    if (build->parsed()) return cmd_build(spec_path, output, strict);
    if (apply->parsed()) return cmd_apply(spec_path, vector_arg);
    if (verify->parsed()) return cmd_verify(matrix_path);
    if (invariant->parsed()) {
      std::optional<uint64_t> seed_flag;
      if (invariant->count("--seed")) seed_flag = seed;
      return cmd_invariant(spec_path, samples, seed_flag);
    }
    if (det->parsed()) return cmd_det(matrix_path, method);
    if (det_product->parsed())
      return cmd_det_product(matrix_path, second_path, tol);
    if (selftest->parsed()) return cmd_selftest(seed, inject_failure);
  } catch (const rotn::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSemanticError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
  return 0;
}
