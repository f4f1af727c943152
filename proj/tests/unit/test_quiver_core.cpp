#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "quivertk/dsl.hpp"
#include "quivertk/errors.hpp"
#include "quivertk/field.hpp"
#include "quivertk/matrix.hpp"
#include "support/generators.hpp"

using namespace quivertk;

namespace {
  std::string read_data(std::string const& name) {
    std::ifstream in(std::string(QUIVERTK_TEST_DATA) + "/" + name);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }
}

TEST_CASE("parse the standard presentation with a special loop") {
  auto p = parse_presentation(read_data("special_loop.quiver"));
  auto const& q = p.quiver();
  CHECK(q.num_vertices() == 4);
  CHECK(q.num_arrows() == 4);
  CHECK(q.arrow(q.arrow_id("f")).special);
  CHECK(q.special_loops() == std::vector<ArrowId>{q.arrow_id("f")});
  REQUIRE(p.relations().size() == 3);
  auto const& z = std::get<ZeroPath>(p.relations()[1]);
  CHECK(to_string(q, z.path) == "c*b*f*a");
  CHECK(z.path.arrows().front() == q.arrow_id("a"));
  CHECK(std::holds_alternative<IdempotentLoop>(p.relations()[2]));
}

TEST_CASE("serialize then parse is the identity") {
  auto p = parse_presentation(read_data("special_loop.quiver"));
  CHECK(parse_presentation(serialize_presentation(p)) == p);

  std::mt19937_64                 rng(11);
  testing_support::GeneratorOptions o;
  o.linear_chance = 0.3;
  for (int i = 0; i < 300; ++i) {
    auto r = testing_support::random_presentation(rng, o);
    auto text = serialize_presentation(r);
    CHECK_MESSAGE(parse_presentation(text) == r, text);
  }
}

TEST_CASE("special loop without idem line gets one") {
  auto p = parse_presentation("vertex 1\nloop e: 1 special\n");
  REQUIRE(p.relations().size() == 1);
  CHECK(std::holds_alternative<IdempotentLoop>(p.relations()[0]));
}

TEST_CASE("parse errors carry line numbers") {
  auto bad = [](std::string const& text, std::size_t line) {
    try {
      parse_presentation(text);
      FAIL("no error for: " << text);
    } catch (ParseError const& e) {
      CHECK(e.line() == line);
    }
  };
  bad("vertex 1 2\narrow a: 1 -> 3\n", 2);
  bad("vertex 1\narrow a: 1 -> 1\narrow a: 1 -> 1\n", 3);
  bad("vertex 1 2\narrow a: 1 -> 2\nrelations\nzero a*a\n", 4);
  bad("vertex 1\nfrobnicate\n", 2);
}

TEST_CASE("relations must be composable paths of length >= 2") {
  CHECK_THROWS_AS(parse_presentation("vertex 1 2\narrow a: 1 -> 2\nrelations\nzero a\n"), Error);
  CHECK_THROWS_AS(parse_presentation("vertex 1 2\narrow a: 1 -> 2\narrow b: 1 -> 2\nrelations\nzero b*a\n"),
                  Error);
}

TEST_CASE("rationals and prime fields") {
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_rational("+4") == Rational(4));
  auto f = Field::prime(5);
  CHECK(f.normalize(Rational(-1)) == 4);
  CHECK(f.normalize(Rational(1, 2)) == 3);
  CHECK(f.inv(Rational(2)) == 3);
  CHECK(Field::from_name("F7") == Field::prime(7));
  CHECK_THROWS(Field::from_name("F6"));
}

TEST_CASE("rank plus nullity") {
  std::mt19937_64 rng(5);
  for (auto f : {Field::rationals(), Field::prime(2), Field::prime(3)}) {
    for (int i = 0; i < 100; ++i) {
      auto rows = testing_support::uniform(rng, 0, 4), cols = testing_support::uniform(rng, 0, 4);
      auto m = testing_support::random_matrix(f, rows, cols, rng);
      auto k = linalg::nullspace(f, m);
      CHECK(linalg::rank(f, m) + k.cols() == cols);
      CHECK(linalg::multiply(f, m, k).is_zero());
      CHECK(linalg::column_space(f, m).cols() == linalg::rank(f, m));
    }
  }
}

TEST_CASE("inverse") {
  auto f = Field::rationals();
  auto m = Matrix::from_rows({{2, 1}, {1, 1}});
  CHECK(linalg::multiply(f, m, linalg::inverse(f, m)) == Matrix::identity(2));
  CHECK_THROWS(linalg::inverse(f, Matrix::from_rows({{1, 1}, {1, 1}})));
}
