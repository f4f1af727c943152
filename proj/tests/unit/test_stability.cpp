#include <doctest.h>

#include <random>

#include "quivertk/dsl.hpp"
#include "quivertk/errors.hpp"
#include "quivertk/repvar.hpp"
#include "quivertk/stability.hpp"
#include "quivertk/strings_bands.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace quivertk;

namespace {
  std::shared_ptr<Presentation const> pres(std::string const& text) {
    return std::make_shared<Presentation const>(parse_presentation(text));
  }

  auto const A2 = "vertex 1 2\narrow a: 1 -> 2\n";

  Representation a2(long long x) {
    return Representation(pres(A2), Field::prime(2), {1, 1}, {Matrix::from_rows({{x}})});
  }

  StableDecompositionInput clannish_input(std::vector<DecompositionFactor> fs) {
    StableDecompositionInput in;
    in.factors  = std::move(fs);
    in.clannish = true;
    return in;
  }
}

TEST_CASE("weight pairing") {
  CHECK(weight_pairing({1, -1}, {1, 1}) == 0);
  CHECK(weight_pairing({0, 0}, {3, 5}) == 0);
  CHECK(weight_pairing({1, -1}, {1, 0}) == 1);
  CHECK_THROWS_AS(weight_pairing({1}, {1, 0}), Error);
}

TEST_CASE("subrepresentation dimension vectors of A2") {
  CHECK(subrep_dimension_vectors(a2(1)) == std::set<DimensionVector>{{0, 0}, {0, 1}, {1, 1}});
  CHECK(subrep_dimension_vectors(a2(0)).size() == 4);
  auto zero = Representation::zero(pres(A2), Field::prime(3), {0, 0});
  CHECK(subrep_dimension_vectors(zero) == std::set<DimensionVector>{{0, 0}});
  CHECK_THROWS_AS(subrep_dimension_vectors(Representation::zero(pres(A2), Field::rationals(), {1, 1})),
                  UnsupportedError);
}

TEST_CASE("A2 stability") {
  auto s = check_stability(a2(1), {1, -1});
  CHECK(s.stability == Stability::stable);
  auto u = check_stability(a2(0), {1, -1});
  CHECK(u.stability == Stability::unstable);
  REQUIRE(u.certificate);
  CHECK(u.certificate->dim == DimensionVector{1, 0});
  CHECK(u.certificate_value == 1);
  CHECK(replay_certificate(a2(0), {1, -1}, u));
  CHECK(check_stability(a2(1), {1, 1}).stability == Stability::unstable);
}

TEST_CASE("zero weight: semistable, stable only for simples") {
  CHECK(check_stability(a2(1), {0, 0}).stability == Stability::semistable_not_stable);
  auto simple = Representation::zero(pres(A2), Field::prime(2), {0, 1});
  CHECK(check_stability(simple, {0, 0}).stability == Stability::stable);
}

TEST_CASE("guards") {
  auto big = Representation::zero(pres(A2), Field::prime(2), {5, 5});
  CHECK_THROWS_AS(check_stability(big, {1, -1}), GuardError);
  StabilityGuard g;
  g.max_total_dim = 10;
  g.max_candidates = 100;
  CHECK_THROWS_AS(check_stability(big, {1, -1}, g), GuardError);
}

TEST_CASE("subrepresentations agree with closed subsets over F_2") {
  std::mt19937_64                   rng(21);
  testing_support::GeneratorOptions o;
  o.max_vertices = 3;
  o.max_arrows   = 4;
  auto f = Field::prime(2);
  for (int i = 0; i < 80; ++i) {
    auto p = std::make_shared<Presentation const>(testing_support::random_presentation(rng, o));
    auto d = testing_support::random_dimension(p->quiver(), rng, 2);
    auto m = testing_support::random_valid_rep(p, f, d, rng);
    CHECK(subrep_dimension_vectors(m) == testing_support::brute_subrep_dims_f2(m));
    for (auto const& s : subrepresentations(m)) {
      CHECK(is_subrepresentation(m, s));
    }
  }
}

TEST_CASE("verdicts: replay, scaling, consistency, Schur") {
  std::mt19937_64                   rng(22);
  testing_support::GeneratorOptions o;
  o.max_vertices = 3;
  o.max_arrows   = 4;
  int stable = 0;
  for (int i = 0; i < 200; ++i) {
    auto f = i % 2 ? Field::prime(2) : Field::prime(3);
    auto p = std::make_shared<Presentation const>(testing_support::random_presentation(rng, o));
    auto d = testing_support::random_dimension(p->quiver(), rng, 2);
    auto m = testing_support::random_valid_rep(p, f, d, rng);
    // A weight with theta(d) = 0 when possible.
    Weight theta;
    for (VertexId v = 0; v < d.size(); ++v) {
      theta.values.push_back(static_cast<long long>(testing_support::uniform(rng, 0, 4)) - 2);
    }
    long long total = weight_pairing(theta, d);
    for (VertexId v = 0; v < d.size() && total != 0; ++v) {
      if (d[v] == 1) {
        theta[v] -= total;
        total = 0;
      }
    }
    auto verdict = check_stability(m, theta);
    CHECK(replay_certificate(m, theta, verdict));
    if (verdict.stability != Stability::unstable) {
      CHECK(weight_pairing(theta, d) == 0);
    }
    Weight twice = theta;
    for (auto& x : twice.values) {
      x *= 2;
    }
    CHECK(check_stability(m, twice).stability == verdict.stability);
    if (verdict.stability == Stability::stable && total_dimension(d) > 0) {
      ++stable;
      CHECK(end_dim(m) == 1);
    }
  }
  CHECK(stable > 5);
}

TEST_CASE("grouping stable factors") {
  auto k = pres("vertex 1 2\narrow a: 1 -> 2\narrow b: 1 -> 2\n");
  auto f = Field::prime(5);
  auto w = parse_word(k->quiver(), "a*b^");
  auto m = band_module(k, f, w, 1), n = band_module(k, f, w, 2);
  for (auto const& x : {m, n}) {
    CHECK(check_stability(x, {1, -1}).stability == Stability::stable);
  }
  auto g = group_polystable_factors({m, m, n}, {true, true, true});
  REQUIRE(g.size() == 2);
  CHECK(g[0].multiplicity == 2);
  CHECK(g[0].members == std::vector<std::size_t>{0, 1});
  CHECK(g[1].multiplicity == 1);
  CHECK(group_polystable_factors({m}, {true}).size() == 1);
  CHECK_THROWS_AS(group_polystable_factors({m, n}, {true, false}), ValidationError);
}

TEST_CASE("moduli shapes") {
  auto pp = moduli_shape(clannish_input({{"band:x", 2, 1, true}, {"band:y", 3, 1, true}}));
  CHECK(to_string(pp) == "P^2 x P^3");
  CHECK(pp.dimension() == 5);
  CHECK(to_string(moduli_shape(clannish_input({{"string:s", 4, 0, true}}))) == "point");
  CHECK(to_string(moduli_shape(clannish_input({{"band:x", 1, 1, true}}))) == "P^1");
  auto mixed = moduli_shape(clannish_input({{"band:x", 2, 1, true}, {"string:s", 7, 0, true}}));
  CHECK(to_string(mixed) == "P^2");

  auto not_clannish = clannish_input({{"band:x", 1, 1, true}});
  not_clannish.clannish = false;
  CHECK_THROWS_AS(moduli_shape(not_clannish), UnsupportedError);
  CHECK_THROWS_AS(moduli_shape(clannish_input({{"band:x", 1, 1, false}})), ValidationError);
}

TEST_CASE("decomposition files") {
  auto d = parse_decomposition("presentation k.quiver\nclannish\nfactor band:a*b^ m=2\nfactor string:a m=1\n"
                               "factor orbit m=3 c=0\n");
  CHECK(d.presentation_path == std::optional<std::string>("k.quiver"));
  CHECK(d.clannish_asserted);
  REQUIRE(d.input.factors.size() == 3);
  CHECK(d.input.factors[0].c_value == 1);
  CHECK(d.input.factors[1].c_value == 0);
  CHECK(d.input.factors[2].multiplicity == 3);
  CHECK_THROWS_AS(parse_decomposition("factor mystery m=1\n"), ParseError);
  CHECK_THROWS_AS(parse_decomposition("factor band:x m=two\n"), ParseError);
}
