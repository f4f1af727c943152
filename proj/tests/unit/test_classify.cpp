#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "quivertk/classify.hpp"
#include "quivertk/dsl.hpp"
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

  Presentation a3_ba() {
    return parse_presentation("vertex 1 2 3\narrow a: 1 -> 2\narrow b: 2 -> 3\nrelations\nzero b*a\n");
  }

  bool has_kind(Verdict const& v, WitnessKind k) {
    for (auto const& w : v.witnesses) {
      if (w.kind == k) {
        return true;
      }
    }
    return false;
  }
}

TEST_CASE("A3 with ba") {
  auto r = classify(a3_ba());
  CHECK(r.gentle_pair);
  CHECK(r.special_biserial);
  CHECK(r.skewed_gentle);
  CHECK(r.clannish);
  CHECK(r.finite_dimensional);
}

TEST_CASE("one vertex, no arrows") {
  auto r = classify(parse_presentation("vertex 1\n"));
  CHECK(r.gentle_pair);
  CHECK(r.clannish);
}

TEST_CASE("standard presentation with a special loop") {
  auto p = special_loop();
  auto r = classify(p);
  CHECK(r.clannish);
  CHECK(r.finite_dimensional);
  CHECK_FALSE(r.gentle_pair);
  CHECK_FALSE(r.special_biserial);
  CHECK(has_kind(r.special_biserial, WitnessKind::special_loop));
  CHECK_FALSE(r.skewed_gentle);
  CHECK(has_kind(r.skewed_gentle, WitnessKind::relation_length));

  auto split = split_presentation(p);
  auto g     = is_gentle_pair(*split.presentation);
  CHECK_FALSE(g);
  CHECK(has_kind(g, WitnessKind::non_monomial));
}

TEST_CASE("dropping the long relation gives a skewed-gentle presentation") {
  auto p = parse_presentation(
      "vertex 1 2 3 4\narrow a: 1 -> 2\nloop f: 2 special\narrow b: 2 -> 3\narrow c: 3 -> 4\n"
      "relations\nzero b*a\nidem f\n");
  CHECK(is_skewed_gentle(p));
}

TEST_CASE("three arrows out of a vertex") {
  auto p = parse_presentation(
      "vertex 1 2 3 4\narrow a: 1 -> 2\narrow b: 1 -> 3\narrow c: 1 -> 4\n");
  auto v = is_special_biserial(p);
  CHECK_FALSE(v);
  REQUIRE(has_kind(v, WitnessKind::out_degree));
  for (auto const& w : v.witnesses) {
    CHECK(replay_witness(p, w));
  }
}

TEST_CASE("zero relation ending with a special loop violates C1") {
  auto p = parse_presentation(
      "vertex 1 2\narrow a: 1 -> 2\nloop f: 2 special\nrelations\nzero f*a\nidem f\n");
  auto v = is_clannish(p);
  CHECK_FALSE(v);
  REQUIRE(has_kind(v, WitnessKind::special_boundary));
  for (auto const& w : v.witnesses) {
    if (w.kind == WitnessKind::special_boundary) {
      CHECK(w.clause == "C1");
      CHECK(w.relation == std::optional<std::size_t>(0));
    }
  }
}

TEST_CASE("an ordinary loop without relations is infinite") {
  auto p = parse_presentation("vertex 1\nloop l: 1\n");
  auto v = is_finite_dimensional(p);
  CHECK_FALSE(v);
  REQUIRE(v.witnesses.size() == 1);
  CHECK(v.witnesses[0].arrows == std::vector<ArrowId>{0});
  CHECK(replay_witness(p, v.witnesses[0]));
}

TEST_CASE("length-three relations can make an algebra finite") {
  auto p = parse_presentation("vertex 1\nloop x: 1\nrelations\nzero x*x*x\n");
  CHECK(is_finite_dimensional(p));
  CHECK(is_special_biserial(p));
  CHECK_FALSE(is_gentle_pair(p));
}

TEST_CASE("implication chain on 500 random presentations") {
  std::mt19937_64                   rng(2024);
  testing_support::GeneratorOptions o;
  o.bounded_degree = true;
  int gentle = 0, sb = 0, sg = 0, cl = 0;
  for (int i = 0; i < 500; ++i) {
    o.complete_continuations = i % 2 == 0;
    auto p = testing_support::random_presentation(rng, o);
    auto r = classify(p);
    gentle += r.gentle_pair.holds;
    sb += r.special_biserial.holds;
    sg += r.skewed_gentle.holds;
    cl += r.clannish.holds;
    if (r.gentle_pair) {
      CHECK(r.special_biserial);
      CHECK(r.skewed_gentle);
    }
    if (r.special_biserial) {
      CHECK(r.clannish);
    }
    if (r.skewed_gentle) {
      CHECK(r.clannish);
    }
  }
  // Each class must actually be exercised.
  CHECK(gentle > 20);
  CHECK(sb > gentle);
  CHECK(sg > gentle);
  CHECK(cl > sg);
}

TEST_CASE("every witness replays") {
  std::mt19937_64                   rng(77);
  testing_support::GeneratorOptions o;
  o.linear_chance = 0.15;
  std::size_t witnesses = 0;
  for (int i = 0; i < 400; ++i) {
    o.bounded_degree = i % 3 != 0;
    auto p = testing_support::random_presentation(rng, o);
    auto r = classify(p);
    for (auto const* v : {&r.gentle_pair, &r.special_biserial, &r.skewed_gentle, &r.clannish,
                          &r.finite_dimensional}) {
      CHECK(v->holds == v->witnesses.empty());
      for (auto const& w : v->witnesses) {
        if (w.kind == WitnessKind::unsupported) {
          continue;
        }
        ++witnesses;
        CHECK_MESSAGE(replay_witness(p, w), serialize_presentation(p) << w.clause << ": " << w.message);
      }
    }
  }
  CHECK(witnesses > 500);
}

TEST_CASE("finite dimension agrees with a long-path search") {
  std::mt19937_64                   rng(5);
  testing_support::GeneratorOptions o;
  o.special_chance = 0;
  o.loop_chance    = 0.3;
  o.max_arrows     = 4;
  o.max_relation_len = 3;
  for (int i = 0; i < 300; ++i) {
    auto p     = testing_support::random_presentation(rng, o);
    bool brute = testing_support::brute_infinite(p.quiver(), p.zero_paths());
    CHECK_MESSAGE(is_finite_dimensional(p).holds == !brute, serialize_presentation(p));
  }
}

TEST_CASE("degree violations survive dropping a relation") {
  std::mt19937_64                   rng(9);
  testing_support::GeneratorOptions o;
  o.max_arrows = 8;
  for (int i = 0; i < 200; ++i) {
    auto p = testing_support::random_presentation(rng, o);
    auto v = is_clannish(p);
    bool degree = has_kind(v, WitnessKind::out_degree) || has_kind(v, WitnessKind::in_degree);
    if (!degree) {
      continue;
    }
    for (std::size_t k = 0; k < p.relations().size(); ++k) {
      if (std::holds_alternative<IdempotentLoop>(p.relations()[k])) {
        continue;
      }
      auto rels = p.relations();
      rels.erase(rels.begin() + static_cast<long>(k));
      auto w = is_clannish(Presentation(p.quiver(), rels));
      CHECK((has_kind(w, WitnessKind::out_degree) || has_kind(w, WitnessKind::in_degree)));
    }
  }
}
