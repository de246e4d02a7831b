#include <doctest.h>

#include <fstream>
#include <sstream>

#include "strcg/constructions.hpp"
#include "strcg/errors.hpp"
#include "strcg/repfile.hpp"
#include "strcg/verify.hpp"

#include "test_util.hpp"

using namespace strcg;
using testutil::fixture_path;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("permutation kind round trip") {
  std::string text =
      "kind: permutation\n"
      "degree: 6\n"
      "gen: (1,2)\n"
      "gen: (2,3)\n"
      "gen: (3,4)\n"
      "gen: (4,5)\n"
      "gen: (5,6)\n";
  RepFile file = parse_rep_file(text);
  CHECK(file.kind == RepFile::Kind::permutation);
  CHECK(rep_of(file) == simplex_rep(6));
  CHECK(emit_rep_file(file) == text);
}

TEST_CASE("matrix kind with form round trip") {
  std::string text = slurp(fixture_path("O4minus3.rep"));
  RepFile file = parse_rep_file(text);
  CHECK(file.kind == RepFile::Kind::matrix);
  REQUIRE(file.form.has_value());
  CHECK(file.form->gram() == o4minus3_form().gram());
  CHECK(rep_of(file) == builtin_example("O4minus3"));
  CHECK(emit_rep_file(file) == text);
}

TEST_CASE("extension field entries parse as coefficient lists") {
  std::string text =
      "kind: matrix\n"
      "field: 2^2 modulus: 1,1,1\n"
      "dim: 2\n"
      "gen: [[[0,1],[0,0]],[[0,0],[1,1]]]\n";
  RepFile file = parse_rep_file(text);
  const Matrix& g = file.rep->matrix_gens()[0];
  CHECK(g.at(0, 0) == 2);  // x
  CHECK(g.at(1, 1) == 3);  // x + 1
  CHECK(emit_rep_file(file) == text);
}

TEST_CASE("field line accepts a default modulus") {
  RepFile file = parse_rep_file(
      "kind: matrix\nfield: 2^3\ndim: 1\ngen: [[1]]\n");
  CHECK(file.rep->field()->modulus() == std::vector<int>{1, 1, 0, 1});
  // canonical emit names the modulus explicitly
  CHECK(emit_rep_file(file).find("modulus: 1,1,0,1") != std::string::npos);
}

TEST_CASE("cpr kind delegates to the graph parser") {
  std::string text = slurp(fixture_path("A11-rank6-1.cpr"));
  RepFile file = parse_rep_file(text);
  CHECK(file.kind == RepFile::Kind::cpr);
  CHECK(rep_of(file) == builtin_example("A11-rank6-1"));
  CHECK(emit_rep_file(file) == text);
}

TEST_CASE("all fixtures parse, emit, and reparse identically") {
  for (const char* name : {"O4minus3.rep", "A11-rank6-1.cpr", "A11-rank6-2.cpr",
                           "A11-rank6-3.cpr", "simplex6.rep"}) {
    std::string text = slurp(fixture_path(name));
    RepFile file = parse_rep_file(text);
    CHECK(emit_rep_file(file) == text);
    RepFile again = parse_rep_file(emit_rep_file(file));
    CHECK(emit_rep_file(again) == text);
  }
}

TEST_CASE("fixture representations match the registry builders") {
  CHECK(rep_of(load_rep_file(fixture_path("O4minus3.rep"))) == builtin_example("O4minus3"));
  CHECK(rep_of(load_rep_file(fixture_path("simplex6.rep"))) == builtin_example("simplex:6"));
  for (int i = 1; i <= 3; ++i) {
    std::string name = "A11-rank6-" + std::to_string(i);
    CHECK(rep_of(load_rep_file(fixture_path(name + ".cpr"))) == builtin_example(name));
  }
}

TEST_CASE("parse errors carry line numbers") {
  try {
    parse_rep_file("kind: permutation\ndegree: 3\ngen: (1,5)\n");
    FAIL("expected parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_rep_file("kind: widget\n"), ParseError);
  CHECK_THROWS_AS(parse_rep_file(""), ParseError);
  CHECK_THROWS_AS(parse_rep_file("kind: matrix\nfield: 4\ndim: 1\ngen: [[1]]\n"),
                  ParseError);  // 4 is not prime
  CHECK_THROWS_AS(
      parse_rep_file("kind: matrix\nfield: 3\ndim: 2\ngen: [[1,0],[0]]\n"), ParseError);
  CHECK_THROWS_AS(
      parse_rep_file("kind: matrix\nfield: 3\ndim: 2\nform: [[1,0],[2,1]]\ngen: "
                     "[[1,0],[0,1]]\n"),
      ParseError);  // asymmetric form
}

TEST_CASE("to_rep_file wraps either engine") {
  RepFile p = to_rep_file(simplex_rep(4));
  CHECK(p.kind == RepFile::Kind::permutation);
  RepFile m = to_rep_file(builtin_example("O4minus3"));
  CHECK(m.kind == RepFile::Kind::matrix);
  CHECK_FALSE(m.form.has_value());
  CHECK(rep_of(parse_rep_file(emit_rep_file(m))) == builtin_example("O4minus3"));
}
