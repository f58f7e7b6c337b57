#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <doctest.h>

#include "rotn/io.hpp"
#include "rotn/random.hpp"
#include "test_util.hpp"

using namespace rotn;
using testutil::matrices_close;
using testutil::write_temp_file;

TEST_CASE("format_entry gives 12 significant digits, plain decimal") {
  CHECK(format_entry(0.0) == "0.000000000000");
  CHECK(format_entry(5e-13) == "0.000000000000");   // rounds away
  CHECK(format_entry(-5e-13) == "0.000000000000");  // no negative zero
  CHECK(format_entry(1.0) == "1.00000000000");
  CHECK(format_entry(-0.5) == "-0.500000000000");
  CHECK(format_entry(123.456) == "123.456000000");
  CHECK(format_entry(0.001) == "0.00100000000000");
  CHECK(format_entry(1e15) == "1000000000000000");
  CHECK(format_entry(std::numbers::pi) == "3.14159265359");
}

TEST_CASE("matrix text round trip") {
  Rng rng(71);
  const Matrix m = rng.matrix(4, 3);
  const Matrix back = parse_matrix_text(format_matrix_text(m));
  CHECK(matrices_close(back, m, 1e-11));
}

TEST_CASE("matrix JSON round trip is exact") {
  Rng rng(72);
  const Matrix m = rng.matrix(3, 5);
  const Matrix back = parse_matrix_json(format_matrix_json(m));
  CHECK(max_abs_diff(back, m) == 0.0);
}

TEST_CASE("matrix text parsing accepts blank lines and flags junk") {
  const Matrix m = parse_matrix_text("1 2\n\n3 4\n");
  CHECK(m(1, 0) == 3.0);
  CHECK_THROWS_AS(parse_matrix_text("1 2\n3\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix_text("1 2\n3 x\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix_text("1 2\n3 4.5y\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix_text(""), ParseError);
  CHECK_THROWS_AS(parse_matrix_text("\n  \n"), ParseError);
}

TEST_CASE("matrix JSON parsing validates the shape") {
  const Matrix m = parse_matrix_json("[[1, 2], [3, 4]]");
  CHECK(m(0, 1) == 2.0);
  CHECK_THROWS_AS(parse_matrix_json("{}"), ParseError);
  CHECK_THROWS_AS(parse_matrix_json("[[1, 2], [3]]"), ParseError);
  CHECK_THROWS_AS(parse_matrix_json("[[1, \"2\"]]"), ParseError);
  CHECK_THROWS_AS(parse_matrix_json("[]"), ParseError);
  CHECK_THROWS_AS(parse_matrix_json("[[1, 2"), ParseError);
}

TEST_CASE("load_matrix_file sniffs the format") {
  const std::string text_path = write_temp_file("m.txt", "1 0\n0 1\n");
  const std::string json_path = write_temp_file("m.json", "  [[1,0],[0,1]]");
  CHECK(matrices_close(load_matrix_file(text_path), identity(2), 0.0));
  CHECK(matrices_close(load_matrix_file(json_path), identity(2), 0.0));
  CHECK_THROWS_AS(load_matrix_file(testutil::temp_dir() + "/absent.txt"),
                  ParseError);
  const std::string empty_path = write_temp_file("empty.txt", "  \n ");
  CHECK_THROWS_AS(load_matrix_file(empty_path), ParseError);
}

TEST_CASE("spec files parse angles in degrees or radians") {
  const std::string deg = write_temp_file("deg.json", R"({
    "dim": 2,
    "planes": [ { "a": [1, 0], "b": [0, 1], "angle_degrees": 45 } ]
  })");
  const std::string rad = write_temp_file("rad.json", R"({
    "dim": 2,
    "planes": [ { "a": [1, 0], "b": [0, 1],
                  "angle_radians": 0.7853981633974483 } ]
  })");
  const SpecFile a = load_spec_file(deg);
  const SpecFile b = load_spec_file(rad);
  CHECK(std::fabs(a.spec.planes[0].angle - b.spec.planes[0].angle) <= 1e-16);
  CHECK(a.spec.dim == 2);
  CHECK_FALSE(a.seed.has_value());
}

TEST_CASE("spec files carry axis and seed") {
  const std::string path = write_temp_file("axis.json", R"({
    "dim": 3,
    "planes": [ { "a": [1, 0, 0], "b": [0, 1, 0], "angle_radians": 1.0 } ],
    "axis": [0, 0, 1],
    "seed": 42
  })");
  const SpecFile sf = load_spec_file(path);
  REQUIRE(sf.spec.axis.has_value());
  CHECK((*sf.spec.axis)[2] == 1.0);
  REQUIRE(sf.seed.has_value());
  CHECK(*sf.seed == 42);
}

TEST_CASE("spec file structural problems raise ParseError") {
  auto bad = [](const std::string& name, const std::string& body) {
    return write_temp_file(name, body);
  };
  CHECK_THROWS_AS(load_spec_file(bad("b1.json", "{ not json")), ParseError);
  CHECK_THROWS_AS(load_spec_file(bad("b2.json", "[1, 2]")), ParseError);
  CHECK_THROWS_AS(load_spec_file(bad("b3.json", R"({"planes": []})")),
                  ParseError);  // no dim
  CHECK_THROWS_AS(load_spec_file(bad("b4.json", R"({"dim": 2.5, "planes": []})")),
                  ParseError);  // non-integer dim
  CHECK_THROWS_AS(load_spec_file(bad("b5.json", R"({"dim": 2})")),
                  ParseError);  // no planes
  CHECK_THROWS_AS(
      load_spec_file(bad(
          "b6.json", R"({"dim": 2, "planes": [ { "a": [1,0], "b": [0,1] } ]})")),
      ParseError);  // no angle key
  CHECK_THROWS_AS(
      load_spec_file(bad(
          "b7.json",
          R"({"dim": 2, "planes": [ { "b": [0,1], "angle_degrees": 10 } ]})")),
      ParseError);  // missing a
  CHECK_THROWS_AS(
      load_spec_file(bad(
          "b8.json",
          R"({"dim": 2, "planes": [ { "a": "x", "b": [0,1], "angle_degrees": 1 } ]})")),
      ParseError);  // mistyped vector
  CHECK_THROWS_AS(
      load_spec_file(bad("b9.json", R"({"dim": 2, "planes": [], "seed": -1})")),
      ParseError);  // negative seed
  CHECK_THROWS_AS(
      load_spec_file(bad("b10.json", R"({"dim": 2, "planes": [], "seed": 1.5})")),
      ParseError);  // fractional seed
  CHECK_THROWS_AS(load_spec_file(testutil::temp_dir() + "/nope.json"),
                  ParseError);  // unreadable
}

TEST_CASE("giving both angle units is a semantic error, not a parse error") {
  const std::string path = write_temp_file("both.json", R"({
    "dim": 2,
    "planes": [ { "a": [1, 0], "b": [0, 1],
                  "angle_degrees": 90, "angle_radians": 1.57 } ]
  })");
  CHECK_THROWS_AS(load_spec_file(path), std::invalid_argument);
}

TEST_CASE("parse_vector_arg") {
  const Vector v = parse_vector_arg("1, -2.5,3e-1");
  REQUIRE(v.dim() == 3);
  CHECK(v[0] == 1.0);
  CHECK(v[1] == -2.5);
  CHECK(v[2] == 0.3);
  CHECK_THROWS_AS(parse_vector_arg(""), ParseError);
  CHECK_THROWS_AS(parse_vector_arg("1,,2"), ParseError);
  CHECK_THROWS_AS(parse_vector_arg("1,x"), ParseError);
  CHECK_THROWS_AS(parse_vector_arg("1,2,"), ParseError);
}
