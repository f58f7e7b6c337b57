#include <cmath>
#include <string>

#include <doctest.h>

#include "rotn/io.hpp"
#include "rotn/linalg.hpp"
#include "rotn/rotation.hpp"
#include "test_util.hpp"

using testutil::cli_path;
using testutil::q;
using testutil::run_cmd;
using testutil::write_temp_file;

namespace {

const std::string kSpec2d90 = R"({
  "dim": 2,
  "planes": [{"a": [1, 0], "b": [0, 1], "angle_degrees": 90}]
})";

std::string spec_path_2d90() {
  static const std::string path = write_temp_file("cli_2d90.json", kSpec2d90);
  return path;
}

}  // namespace

TEST_CASE("build prints the 2D quarter turn exactly") {
  const auto res = run_cmd(cli_path() + " build " + q(spec_path_2d90()));
  CHECK(res.exit_code == 0);
  CHECK(res.output ==
        "0.000000000000 -1.00000000000\n"
        "1.00000000000 0.000000000000\n");
}

TEST_CASE("build --output json round trips exactly") {
  const auto res = run_cmd(cli_path() + " build --output json " +
                           q(spec_path_2d90()));
  CHECK(res.exit_code == 0);
  const rotn::Matrix r = rotn::parse_matrix_json(res.output);
  CHECK(rotn::max_abs_diff(r, rotn::rotation_2d(std::acos(-1.0) / 2)) == 0.0);
}

TEST_CASE("build output verifies as a rotation") {
  const auto built = run_cmd(cli_path() + " build " + q(spec_path_2d90()));
  REQUIRE(built.exit_code == 0);
  const std::string matrix_path =
      write_temp_file("cli_roundtrip.txt", built.output);
  const auto res = run_cmd(cli_path() + " verify " + q(matrix_path));
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("is_rotation = true") != std::string::npos);
}

TEST_CASE("verify accepts a spec file directly") {
  const auto res = run_cmd(cli_path() + " verify " + q(spec_path_2d90()));
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("is_rotation = true") != std::string::npos);
}

TEST_CASE("verify rejects a reflection with exit code 1") {
  const std::string path =
      write_temp_file("cli_reflection.txt", "1 0\n0 -1\n");
  const auto res = run_cmd(cli_path() + " verify " + q(path));
  CHECK(res.exit_code == 1);
  CHECK(res.output.find("det_value = -1") != std::string::npos);
  CHECK(res.output.find("is_rotation = false") != std::string::npos);
}

TEST_CASE("verify reports the identity cleanly") {
  const std::string path = write_temp_file("cli_identity.txt", "1 0\n0 1\n");
  const auto res = run_cmd(cli_path() + " verify " + q(path));
  CHECK(res.exit_code == 0);
  CHECK(res.output ==
        "ortho_residual = 0\n"
        "det_value = 1\n"
        "is_rotation = true\n");
}

TEST_CASE("verify maps input problems to the right exit codes") {
  const std::string non_square =
      write_temp_file("cli_nonsquare.txt", "1 0 0\n0 1 0\n");
  CHECK(run_cmd(cli_path() + " verify " + q(non_square)).exit_code == 3);

  const std::string empty = write_temp_file("cli_empty.txt", "  \n");
  CHECK(run_cmd(cli_path() + " verify " + q(empty)).exit_code == 2);

  CHECK(run_cmd(cli_path() + " verify /no/such/file").exit_code == 2);
}

TEST_CASE("malformed and over-specified specs are told apart") {
  const std::string truncated =
      write_temp_file("cli_truncated.json", "{\"dim\": 2, ");
  const auto bad = run_cmd(cli_path() + " build " + q(truncated));
  CHECK(bad.exit_code == 2);
  CHECK(bad.output.find("error:") != std::string::npos);

  const std::string both_units = write_temp_file("cli_both_units.json", R"({
    "dim": 2,
    "planes": [{"a": [1, 0], "b": [0, 1], "angle_radians": 1.0, "angle_degrees": 57}]
  })");
  CHECK(run_cmd(cli_path() + " build " + q(both_units)).exit_code == 3);
}

TEST_CASE("--strict rejects a spec that plain build repairs") {
  const std::string path = write_temp_file("cli_repairable.json", R"({
    "dim": 2,
    "planes": [{"a": [2, 0], "b": [1, 1], "angle_radians": 0.7}]
  })");
  CHECK(run_cmd(cli_path() + " build " + q(path)).exit_code == 0);
  const auto strict = run_cmd(cli_path() + " build --strict " + q(path));
  CHECK(strict.exit_code == 3);
  CHECK(strict.output.find("strict") != std::string::npos);
}

TEST_CASE("apply rotates a vector") {
  const auto res = run_cmd(cli_path() + " apply " + q(spec_path_2d90()) +
                           " --vector 1,0");
  CHECK(res.exit_code == 0);
  CHECK(res.output == "0.000000000000 1.00000000000\n");
}

TEST_CASE("apply rejects bad vectors with the right codes") {
  CHECK(run_cmd(cli_path() + " apply " + q(spec_path_2d90()) +
                " --vector 1,0,0")
            .exit_code == 3);
  CHECK(run_cmd(cli_path() + " apply " + q(spec_path_2d90()) +
                " --vector " + q("1,,2"))
            .exit_code == 2);
}

TEST_CASE("invariant classifies an equiangular 4D rotation") {
  const std::string path = write_temp_file("cli_equi.json", R"({
    "dim": 4,
    "planes": [
      {"a": [1, 0, 0, 0], "b": [0, 1, 0, 0], "angle_radians": 1.0471975511965976},
      {"a": [0, 0, 1, 0], "b": [0, 0, 0, 1], "angle_radians": 1.0471975511965976}
    ]
  })");
  const auto res =
      run_cmd(cli_path() + " invariant --samples 3 --seed 9 " + q(path));
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("kind = all_J_planes") != std::string::npos);
  CHECK(res.output.find("J =") != std::string::npos);
  CHECK(res.output.find("witness_count = 3") != std::string::npos);
  CHECK(res.output.find("note =") == std::string::npos);
  CHECK(res.output.find("falsification_trials") == std::string::npos);
}

TEST_CASE("invariant reports none_extra for unequal angles") {
  const std::string path = write_temp_file("cli_unequal.json", R"({
    "dim": 4,
    "planes": [
      {"a": [1, 0, 0, 0], "b": [0, 1, 0, 0], "angle_radians": 1.0471975511965976},
      {"a": [0, 0, 1, 0], "b": [0, 0, 0, 1], "angle_radians": 0.7853981633974483}
    ]
  })");
  const auto res =
      run_cmd(cli_path() + " invariant --samples 50 --seed 3 " + q(path));
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("kind = none_extra") != std::string::npos);
  CHECK(res.output.find("witness_count = 2") != std::string::npos);
  CHECK(res.output.find("falsification_trials = 50") != std::string::npos);
  CHECK(res.output.find("extra_invariant_found = 0") != std::string::npos);

  const auto rerun =
      run_cmd(cli_path() + " invariant --samples 50 --seed 3 " + q(path));
  CHECK(rerun.output == res.output);
}

TEST_CASE("invariant flags the degenerate angles") {
  const std::string path = write_temp_file("cli_degenerate.json", R"({
    "dim": 2,
    "planes": [{"a": [1, 0], "b": [0, 1], "angle_radians": 0.0}]
  })");
  const auto res = run_cmd(cli_path() + " invariant --samples 2 " + q(path));
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("kind = all_J_planes") != std::string::npos);
  CHECK(res.output.find("note = rotation is +/-I") != std::string::npos);
}

TEST_CASE("invariant refuses a rotation with uncovered directions") {
  const std::string path = write_temp_file("cli_partial.json", R"({
    "dim": 3,
    "planes": [{"a": [1, 0, 0], "b": [0, 1, 0], "angle_radians": 0.5}]
  })");
  CHECK(run_cmd(cli_path() + " invariant " + q(path)).exit_code == 3);
}

TEST_CASE("the --seed flag overrides the spec seed") {
  const std::string path = write_temp_file("cli_seeded.json", R"({
    "dim": 4,
    "seed": 11,
    "planes": [
      {"a": [1, 0, 0, 0], "b": [0, 1, 0, 0], "angle_radians": 0.9},
      {"a": [0, 0, 1, 0], "b": [0, 0, 0, 1], "angle_radians": 0.9}
    ]
  })");
  const std::string base = cli_path() + " invariant --samples 4 ";
  const auto from_spec = run_cmd(base + q(path));
  const auto same = run_cmd(base + "--seed 11 " + q(path));
  const auto other = run_cmd(base + "--seed 12 " + q(path));
  CHECK(from_spec.exit_code == 0);
  CHECK(from_spec.output == same.output);
  CHECK(from_spec.output != other.output);
}

TEST_CASE("det prints both methods for the identity") {
  const std::string path =
      write_temp_file("cli_det_id.txt", "1 0 0\n0 1 0\n0 0 1\n");
  const auto res = run_cmd(cli_path() + " det " + q(path));
  CHECK(res.exit_code == 0);
  CHECK(res.output == "det_permutation = 1\ndet_lu = 1\n");

  const auto lu_only =
      run_cmd(cli_path() + " det --method lu " + q(path));
  CHECK(lu_only.output == "det_lu = 1\n");
}

TEST_CASE("det --method perm refuses an 11x11 matrix") {
  std::string text;
  for (int i = 0; i < 11; ++i) {
    for (int j = 0; j < 11; ++j) {
      text += (i == j) ? "1" : "0";
      text += (j == 10) ? '\n' : ' ';
    }
  }
  const std::string path = write_temp_file("cli_det_11.txt", text);
  const auto res = run_cmd(cli_path() + " det --method perm " + q(path));
  CHECK(res.exit_code == 3);
  CHECK(res.output.find("det_lu") != std::string::npos);
  CHECK(run_cmd(cli_path() + " det --method lu " + q(path)).exit_code == 0);
}

TEST_CASE("det-product confirms the multiplicative property") {
  const std::string a = write_temp_file("cli_dp_a.txt", "1 2\n3 4\n");
  const std::string b = write_temp_file("cli_dp_b.txt", "5 6\n7 8\n");
  const auto res = run_cmd(cli_path() + " det-product " + q(a) + " " + q(b));
  CHECK(res.exit_code == 0);
  CHECK(res.output ==
        "det_of_product = 4\n"
        "product_of_dets = 4\n"
        "residual = 0\n"
        "verdict = ok\n");

  const std::string c = write_temp_file("cli_dp_c.txt", "1 0 0\n0 1 0\n0 0 1\n");
  CHECK(run_cmd(cli_path() + " det-product " + q(a) + " " + q(c)).exit_code ==
        3);
}

TEST_CASE("selftest passes, reruns identically, and fails on purpose") {
  const auto first = run_cmd(cli_path() + " selftest --seed 4");
  CHECK(first.exit_code == 0);
  CHECK(first.output.find("8/8 checks passed") != std::string::npos);
  const auto second = run_cmd(cli_path() + " selftest --seed 4");
  CHECK(second.output == first.output);

  const auto injected =
      run_cmd(cli_path() + " selftest --seed 4 --inject-failure");
  CHECK(injected.exit_code == 1);
  CHECK(injected.output.find("FAIL") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2 and --help with 0") {
  CHECK(run_cmd(cli_path() + " frobnicate").exit_code == 2);
  CHECK(run_cmd(cli_path()).exit_code == 2);
  CHECK(run_cmd(cli_path() + " build").exit_code == 2);
  CHECK(run_cmd(cli_path() + " build --output yaml x.json").exit_code == 2);
  const auto help = run_cmd(cli_path() + " --help");
  CHECK(help.exit_code == 0);
  CHECK(help.output.find("build") != std::string::npos);
}
