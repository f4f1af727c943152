#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "quivertk/classify.hpp"
#include "quivertk/dsl.hpp"
#include "quivertk/errors.hpp"
#include "quivertk/representation.hpp"
#include "quivertk/split.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace quivertk;

namespace {
  Presentation special_loop() {
    std::ifstream     in(std::string(QUIVERTK_TEST_DATA) + "/special_loop.quiver");
    std::stringstream s;
    s << in.rdbuf();
    return parse_presentation(s.str());
  }

  // Monomials of length >= 2, or combinations of parallel paths of one length.
  bool admissible_shape(Presentation const& p) {
    for (auto const& r : p.relations()) {
      if (auto const* z = std::get_if<ZeroPath>(&r)) {
        if (z->path.length() < 2) {
          return false;
        }
      } else if (auto const* lc = std::get_if<LinearCombination>(&r)) {
        for (auto const& t : lc->terms) {
          auto const& first = lc->terms.front().path;
          if (t.path.length() != first.length() || t.path.length() < 2 || t.path.source() != first.source()
              || t.path.target() != first.target()) {
            return false;
          }
        }
      } else {
        return false;
      }
    }
    return !p.quiver().has_special_loops();
  }
}

TEST_CASE("splitting the standard presentation") {
  auto p = special_loop();
  auto s = split_presentation(p);
  auto const& q = s.presentation->quiver();
  CHECK(q.vertices() == std::vector<std::string>{"1", "2+", "2-", "3", "4"});
  std::vector<std::string> arrows;
  for (auto const& a : q.arrows()) {
    arrows.push_back(a.name + ":" + q.vertex_name(a.tail) + "->" + q.vertex_name(a.head));
  }
  CHECK(arrows == std::vector<std::string>{"a+:1->2+", "a-:1->2-", "+b:2+->3", "-b:2-->3", "c:3->4"});
  REQUIRE(s.presentation->relations().size() == 2);
  CHECK(relation_expression(q, s.presentation->relations()[0]) == "+b*a+ + -b*a-");
  CHECK(relation_expression(q, s.presentation->relations()[1]) == "c*+b*a+");
  CHECK(s.presentation->provenance() == Provenance::split_admissible);

  auto text = serialize_presentation(*s.presentation);
  CHECK(text.find("rel +b*a+ + -b*a-") != std::string::npos);
  CHECK(parse_presentation(text) == *s.presentation);

  CHECK(s.map.vertex_map[p.quiver().vertex_id("2")].size() == 2);
  CHECK(s.map.arrow_map[p.quiver().arrow_id("f")].empty());
  CHECK(s.map.arrow_map[p.quiver().arrow_id("c")].size() == 1);
}

TEST_CASE("no special loops: splitting is the identity") {
  auto p = parse_presentation("vertex 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\nrelations\nzero b*a\n");
  CHECK(*split_presentation(p).presentation == p);
}

TEST_CASE("a lone special loop splits into two points") {
  auto s = split_presentation(parse_presentation("vertex 1\nloop f: 1 special\n"));
  CHECK(s.presentation->quiver().num_vertices() == 2);
  CHECK(s.presentation->quiver().num_arrows() == 0);
  CHECK(s.presentation->relations().empty());
}

TEST_CASE("non-clannish input is refused") {
  auto p = parse_presentation("vertex 1 2\narrow a: 1 -> 2\nloop f: 2 special\nrelations\nzero f*a\nidem f\n");
  CHECK_THROWS_AS(split_presentation(p), UnsupportedError);
}

TEST_CASE("transporting a representation of the standard presentation") {
  auto p    = std::make_shared<Presentation const>(special_loop());
  auto text = "rep M over Q\ndim 1=1 2=2 3=1 4=1\n"
              "mat a 2 1\n1\n0\nmat f 2 2\n1 0\n0 0\nmat b 1 2\n0 1\nmat c 1 1\n1\n";
  auto m = parse_representation(text, p);
  REQUIRE(check_rep(m).valid);
  auto s = split_presentation(*p);
  auto n = split_rep(m, s);
  CHECK(n.dimension() == DimensionVector{1, 1, 1, 1, 1});
  CHECK(check_rep(n).valid);
  auto const& q = s.presentation->quiver();
  CHECK(n.matrix(q.arrow_id("a+")) == Matrix::from_rows({{1}}));
  CHECK(n.matrix(q.arrow_id("a-")) == Matrix::from_rows({{0}}));
  CHECK(n.matrix(q.arrow_id("-b")) == Matrix::from_rows({{1}}));
}

TEST_CASE("identity and zero idempotents leave one side empty") {
  auto p = std::make_shared<Presentation const>(
      parse_presentation("vertex 1 2\narrow a: 1 -> 2\nloop f: 2 special\n"));
  auto s = split_presentation(*p);
  auto f = Field::rationals();
  auto one = Representation(p, f, {1, 3}, {Matrix::from_rows({{1}, {2}, {3}}), Matrix::identity(3)});
  CHECK(split_rep(one, s).dimension() == DimensionVector{1, 3, 0});
  auto zero = Representation(p, f, {1, 3}, {Matrix::from_rows({{1}, {2}, {3}}), Matrix(3, 3)});
  CHECK(split_rep(zero, s).dimension() == DimensionVector{1, 0, 3});
}

TEST_CASE("split invariants over a clannish corpus") {
  auto corpus = testing_support::clannish_corpus(31, 150);
  std::mt19937_64 rng(31);
  for (auto const& pres : corpus) {
    auto p = std::make_shared<Presentation const>(pres);
    auto s = split_presentation(*p);
    auto const& q  = p->quiver();
    auto const& q2 = s.presentation->quiver();
    CHECK(admissible_shape(*s.presentation));
    for (VertexId v = 0; v < q.num_vertices(); ++v) {
      CHECK(s.map.vertex_map[v].size() == (q.is_special_vertex(v) ? 2u : 1u));
    }
    for (ArrowId a = 0; a < q.num_arrows(); ++a) {
      auto const& x = q.arrow(a);
      std::size_t want = x.special ? 0 : (1u << (q.is_special_vertex(x.tail) + q.is_special_vertex(x.head)));
      CHECK(s.map.arrow_map[a].size() == want);
    }
    for (auto f : {Field::rationals(), Field::prime(3)}) {
      auto d = testing_support::random_dimension(q, rng, 3);
      auto m = testing_support::random_valid_rep(p, f, d, rng);
      REQUIRE(check_rep(m).valid);
      auto n = split_rep(m, s);
      CHECK_MESSAGE(check_rep(n).valid, serialize_presentation(*p) << serialize_representation(m));
      for (VertexId v = 0; v < q.num_vertices(); ++v) {
        std::size_t total = 0;
        for (VertexId w : s.map.vertex_map[v]) {
          total += n.dimension()[w];
        }
        CHECK(total == d[v]);
      }
      CHECK(n.dimension().size() == q2.num_vertices());
    }
  }
}

TEST_CASE("envelope of the standard presentation drops the long relation") {
  auto e = skewed_gentle_envelope(special_loop());
  auto const& q = e.quiver();
  REQUIRE(e.relations().size() == 2);
  CHECK(to_string(q, e.relations()[0]) == "zero b*a");
  CHECK(std::holds_alternative<IdempotentLoop>(e.relations()[1]));
  CHECK(e.provenance() == Provenance::envelope);
  CHECK(is_skewed_gentle(e));
}

TEST_CASE("a skewed-gentle presentation is its own envelope") {
  auto p = parse_presentation(
      "vertex 1 2 3\narrow a: 1 -> 2\nloop f: 2 special\narrow b: 2 -> 3\nrelations\nzero b*a\nidem f\n");
  CHECK(skewed_gentle_envelope(p) == p);
}

TEST_CASE("envelope keeps only the length-two relations") {
  auto p = parse_presentation("vertex 1 2 3 4\narrow a: 1 -> 2\narrow b: 2 -> 3\narrow c: 3 -> 4\n"
                              "arrow d: 2 -> 4\nrelations\nzero c*b*a\nzero d*a\n");
  REQUIRE(is_clannish(p));
  auto e = skewed_gentle_envelope(p);
  REQUIRE(e.relations().size() == 1);
  CHECK(to_string(e.quiver(), e.relations()[0]) == "zero d*a");
}

TEST_CASE("envelope output agrees with exhaustive subset search") {
  auto corpus = testing_support::clannish_corpus(8, 120);
  for (auto const& p : corpus) {
    bool exists = testing_support::brute_envelope_exists(p);
    try {
      auto e = skewed_gentle_envelope(p);
      CHECK(is_skewed_gentle(e));
      CHECK(exists);
      for (auto const& r : e.relations()) {
        CHECK(std::find(p.relations().begin(), p.relations().end(), r) != p.relations().end());
      }
    } catch (UnsupportedError const&) {
      FAIL("corpus presentation reported not clannish");
    } catch (Error const&) {
      CHECK_MESSAGE(!exists, serialize_presentation(p));
    }
  }
}
