#include <doctest.h>

#include <random>

#include "quivertk/dsl.hpp"
#include "quivertk/errors.hpp"
#include "quivertk/repvar.hpp"
#include "quivertk/strings_bands.hpp"
#include "support/generators.hpp"

using namespace quivertk;

namespace {
  std::shared_ptr<Presentation const> pres(std::string const& text) {
    return std::make_shared<Presentation const>(parse_presentation(text));
  }

  std::vector<std::string> render(Presentation const& p, std::vector<Word> const& ws) {
    std::vector<std::string> out;
    for (auto const& w : ws) {
      out.push_back(to_string(p.quiver(), w));
    }
    return out;
  }

  auto const KRONECKER = "vertex 1 2\narrow a: 1 -> 2\narrow b: 1 -> 2\n";
  auto const SQUARE    = "vertex 1 2 3 4\narrow a: 1 -> 2\narrow b: 2 -> 4\narrow c: 1 -> 3\narrow d: 3 -> 4\n";
  auto const A3_BA     = "vertex 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\nrelations\nzero b*a\n";
}

TEST_CASE("strings of A2 and A3") {
  auto a2 = pres("vertex 1 2\narrow a: 1 -> 2\n");
  CHECK(render(*a2, enumerate_strings(*a2, 1)) == std::vector<std::string>{"e_1", "e_2", "a"});
  auto a3 = pres(A3_BA);
  CHECK(render(*a3, enumerate_strings(*a3, 2)) == std::vector<std::string>{"e_1", "e_2", "e_3", "a", "b"});
  auto free = pres("vertex 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\n");
  CHECK(enumerate_strings(*free, 2).size() == 6);
}

TEST_CASE("renaming arrows keeps the counts") {
  auto p = pres(SQUARE);
  auto r = pres("vertex 1 2 3 4\narrow z: 1 -> 2\narrow y: 2 -> 4\narrow x: 1 -> 3\narrow w: 3 -> 4\n");
  for (std::size_t n = 0; n <= 6; ++n) {
    CHECK(enumerate_strings(*p, n).size() == enumerate_strings(*r, n).size());
    CHECK(enumerate_bands(*p, n).size() == enumerate_bands(*r, n).size());
  }
}

TEST_CASE("bands") {
  auto k = pres(KRONECKER);
  CHECK(render(*k, enumerate_bands(*k, 2)) == std::vector<std::string>{"a*b^"});
  // a b^ repeated is a proper power.
  CHECK(enumerate_bands(*k, 4).size() == 1);
  CHECK(enumerate_bands(*pres(A3_BA), 6).empty());
  CHECK(enumerate_bands(*pres("vertex 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\n"), 6).empty());
  auto sq = pres(SQUARE);
  CHECK(render(*sq, enumerate_bands(*sq, 6)) == std::vector<std::string>{"a*c^*d^*b"});
}

TEST_CASE("canonical forms are stable under rotation and inversion") {
  auto        p = pres(SQUARE);
  auto const& q = p->quiver();
  for (auto const& w : enumerate_bands(*p, 8)) {
    Word r = w;
    for (std::size_t i = 0; i < w.length(); ++i) {
      auto first = r.letters.front();
      r.start    = first.inverse ? q.arrow(first.arrow).tail : q.arrow(first.arrow).head;
      std::rotate(r.letters.begin(), r.letters.begin() + 1, r.letters.end());
      CHECK(canonical_band(q, r) == w);
      CHECK(canonical_band(q, inverse(r, q)) == w);
    }
  }
  for (auto const& w : enumerate_strings(*p, 4)) {
    CHECK(canonical_string(q, inverse(w, q)) == w);
  }
}

TEST_CASE("string modules") {
  auto a2 = pres("vertex 1 2\narrow a: 1 -> 2\n");
  auto f  = Field::rationals();
  auto s  = string_module(a2, f, parse_word(a2->quiver(), "e_2"));
  CHECK(s.dimension() == DimensionVector{0, 1});
  auto m = string_module(a2, f, parse_word(a2->quiver(), "a"));
  CHECK(m.dimension() == DimensionVector{1, 1});
  CHECK(m.matrix(0) == Matrix::from_rows({{1}}));

  for (auto const* text : {A3_BA, KRONECKER, SQUARE}) {
    auto p = pres(text);
    for (auto const& w : enumerate_strings(*p, 5)) {
      auto mod = string_module(p, f, w);
      CHECK(check_rep(mod).valid);
      CHECK(total_dimension(mod.dimension()) == w.length() + 1);
      CHECK(mod.dimension() == word_dimension_vector(p->quiver(), w, false));
      CHECK(end_dim(mod) >= 1);
    }
  }
  CHECK_THROWS_AS(string_module(pres(A3_BA), f, parse_word(pres(A3_BA)->quiver(), "b*a")), Error);
}

TEST_CASE("band modules are Schur and Hom-orthogonal") {
  auto f = Field::rationals();
  auto k = pres(KRONECKER);
  auto w = parse_word(k->quiver(), "a*b^");
  CHECK(word_dimension_vector(k->quiver(), w, true) == DimensionVector{1, 1});
  auto m = band_module(k, f, w, 5);
  CHECK(m.dimension() == DimensionVector{1, 1});
  CHECK(end_dim(m) == 1);
  CHECK_THROWS_AS(band_module(k, f, w, 0), Error);

  for (auto const* text : {KRONECKER, SQUARE}) {
    auto p = pres(text);
    for (auto const& band : enumerate_bands(*p, 6)) {
      for (int l = 1; l <= 3; ++l) {
        auto ml = band_module(p, f, band, l);
        CHECK(check_rep(ml).valid);
        CHECK(end_dim(ml) == 1);
        CHECK(orbit_dim(ml) + 1 == gl_dimension(ml.dimension()));
        for (int u = 1; u <= 3; ++u) {
          if (u != l) {
            CHECK(hom_dim(ml, band_module(p, f, band, u)) == 0);
          }
        }
      }
    }
  }
}

TEST_CASE("unsupported presentations") {
  auto with_loop = pres("vertex 1\nloop f: 1 special\n");
  CHECK_THROWS_AS(enumerate_strings(*with_loop, 2), UnsupportedError);
  auto lc = pres(std::string(SQUARE) + "relations\nrel b*a + -1 d*c\n");
  CHECK_THROWS(enumerate_bands(*lc, 2));
}

TEST_CASE("random words: strings by walk, modules valid") {
  std::mt19937_64                   rng(19);
  testing_support::GeneratorOptions o;
  o.special_chance = 0;
  o.bounded_degree = true;
  for (int i = 0; i < 60; ++i) {
    auto p  = std::make_shared<Presentation const>(testing_support::random_presentation(rng, o));
    auto ws = enumerate_strings(*p, 4);
    for (auto const& w : ws) {
      CHECK(is_string(*p, w));
      CHECK(check_rep(string_module(p, Field::prime(3), w)).valid);
    }
    for (auto const& b : enumerate_bands(*p, 4)) {
      CHECK(is_band(*p, b));
      CHECK(check_rep(band_module(p, Field::prime(5), b, 2)).valid);
    }
  }
}
