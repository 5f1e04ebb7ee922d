#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "newton_segre/error.hpp"
#include "newton_segre/lct.hpp"
#include "newton_segre/lp.hpp"
#include "support.hpp"

using namespace nsegre;
using testing_support::random_ideal;

namespace {

LpConstraint row(std::vector<Rational> c, ConstraintSense s, Rational rhs) { return {std::move(c), s, std::move(rhs)}; }

RationalPoint scaled_point(std::span<const Exponent> a, Exponent m) {
  RationalPoint p;
  for (auto v : a) p.push_back(make_rational(v, m));
  return p;
}

}  // namespace

TEST_CASE("symmetric two-point LP") {
  // variables (s, lambda): min s, s >= lambda, s >= 1 - lambda, lambda <= 1
  LpProblem lp;
  lp.objective = {1, 0};
  lp.constraints = {row({1, -1}, ConstraintSense::GreaterEqual, 0), row({1, 1}, ConstraintSense::GreaterEqual, 1)};
  lp.upper_bounds = {std::nullopt, Rational(1)};
  auto out = solve_lp(lp);
  REQUIRE(out.status == LpStatus::Optimal);
  CHECK(out.optimum == make_rational(1, 2));
}

TEST_CASE("diagonal exit LP of the maximal ideal") {
  // variables (s, l1, l2): s >= l1, s >= l2, l1 + l2 = 1
  LpProblem lp;
  lp.objective = {1, 0, 0};
  lp.constraints = {row({1, -1, 0}, ConstraintSense::GreaterEqual, 0),
                    row({1, 0, -1}, ConstraintSense::GreaterEqual, 0),
                    row({0, 1, 1}, ConstraintSense::Equal, 1)};
  auto out = solve_lp(lp);
  REQUIRE(out.status == LpStatus::Optimal);
  CHECK(out.optimum == make_rational(1, 2));
  CHECK(out.witness[1] + out.witness[2] == 1);
}

TEST_CASE("LP infeasible and unbounded") {
  LpProblem lp;
  lp.objective = {1};
  lp.constraints = {row({1}, ConstraintSense::GreaterEqual, 2)};
  lp.upper_bounds = {Rational(1)};
  CHECK(solve_lp(lp).status == LpStatus::Infeasible);

  LpProblem unbounded;
  unbounded.direction = ObjectiveSense::Maximize;
  unbounded.objective = {1, 1};
  unbounded.constraints = {row({1, -1}, ConstraintSense::LessEqual, 3)};
  CHECK(solve_lp(unbounded).status == LpStatus::Unbounded);

  LpProblem ragged;
  ragged.objective = {1, 1};
  ragged.constraints = {row({1}, ConstraintSense::LessEqual, 3)};
  CHECK_THROWS_AS(solve_lp(ragged), Error);
}

TEST_CASE("LP with a degenerate vertex terminates") {
  // A classic cycling example for the largest-coefficient rule.
  LpProblem lp;
  lp.direction = ObjectiveSense::Maximize;
  lp.objective = {make_rational(3, 4), -150, make_rational(1, 50), -6};
  lp.constraints = {row({make_rational(1, 4), -60, make_rational(-1, 25), 9}, ConstraintSense::LessEqual, 0),
                    row({make_rational(1, 2), -90, make_rational(-1, 50), 3}, ConstraintSense::LessEqual, 0),
                    row({0, 0, 1, 0}, ConstraintSense::LessEqual, 1)};
  auto out = solve_lp(lp);
  REQUIRE(out.status == LpStatus::Optimal);
  CHECK(out.optimum == make_rational(1, 20));
}

TEST_CASE("diagonal exit examples") {
  for (Exponent ell = 1; ell <= 6; ++ell)
    CHECK(diagonal_exit(newton_polyhedron(MonomialIdeal::make(1, {{ell}}))) == ell);
  CHECK(diagonal_exit(newton_polyhedron(MonomialIdeal::make(2, {{1, 0}, {0, 1}}))) == make_rational(1, 2));
  CHECK(diagonal_exit(newton_polyhedron(MonomialIdeal::make(2, {{1, 1}}))) == 1);
}

TEST_CASE("lct examples") {
  for (Exponent ell = 1; ell <= 6; ++ell) CHECK(lct(MonomialIdeal::make(1, {{ell}})) == make_rational(1, ell));
  CHECK(lct(MonomialIdeal::make(2, {{1, 1}})) == 1);
  CHECK(lct(MonomialIdeal::make(2, {{2, 0}, {0, 3}})) == make_rational(5, 6));
  for (Exponent l1 = 1; l1 <= 4; ++l1)
    for (Exponent l2 = 1; l2 <= 4; ++l2)
      for (Exponent l3 = 1; l3 <= 3; ++l3)
        CHECK(lct(MonomialIdeal::make(3, {{l1, 0, 0}, {0, l2, 0}, {0, 0, l3}})) ==
              make_rational(1, l1) + make_rational(1, l2) + make_rational(1, l3));
}

TEST_CASE("region stretch factors") {
  CHECK(region_stretch_factors(ExponentVector{2, 3, 5}) == ExponentVector{15, 10, 6});
  CHECK(region_stretch_factors(ExponentVector{7}) == ExponentVector{1});
}

TEST_CASE("lct condition on the worked families") {
  const Exponent ell = 3, m = 5;
  auto pure1 = MonomialIdeal::make(1, {{ell}});
  for (Exponent a = 1; a <= 3 * m * ell; ++a) CHECK(lct_condition(pure1, ExponentVector{a}, m) == (a >= m * ell));

  auto diag = MonomialIdeal::make(2, {{2, 0}, {0, 3}});
  for (Exponent a1 = 1; a1 <= 25; ++a1)
    for (Exponent a2 = 1; a2 <= 25; ++a2)
      CHECK(lct_condition(diag, ExponentVector{a1, a2}, m) ==
            (make_rational(a1, 2) + make_rational(a2, 3) >= m));

  auto pure2 = MonomialIdeal::make(2, {{ell, 0}});
  for (Exponent a1 = 1; a1 <= 3 * m * ell; ++a1)
    for (Exponent a2 = 1; a2 <= 6; ++a2) CHECK(lct_condition(pure2, ExponentVector{a1, a2}, m) == (a1 >= m * ell));
}

TEST_CASE("region membership and the lct characterization agree") {
  std::mt19937_64 rng(31337);
  std::uniform_int_distribution<Exponent> coord(2, 20), scale(1, 50);
  int failures = 0, boundary = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 + trial % 2;
    auto i = random_ideal(rng, n, 4, 6);
    ExponentVector a(n);
    for (auto& v : a) v = coord(rng);
    const Exponent m = scale(rng);
    const bool member = in_newton_region(i, scaled_point(a, m));
    const bool cond = lct_condition(i, a, m);
    const bool on_boundary = cond && lct_in_region(i, a, m);
    boundary += on_boundary;
    if (member != (!cond || on_boundary)) ++failures;
    if (member != lct_in_region(i, a, m)) ++failures;
  }
  CHECK(failures == 0);
  MESSAGE("boundary hits: " << boundary);
}

TEST_CASE("uniform stretch scales the diagonal exit") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 2;
    auto i = random_ideal(rng, n, 4, 6);
    const Rational base = diagonal_exit(newton_polyhedron(i));
    for (Exponent r = 1; r <= 5; ++r) {
      ExponentVector f(n, r);
      CHECK(diagonal_exit(newton_polyhedron(stretch(i, f))) == base * static_cast<long>(r));
    }
  }
}

TEST_CASE("LP, facet and generator forms of the diagonal exit agree; lct range") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 3;
    auto i = random_ideal(rng, n, 5, 8);
    auto p = newton_polyhedron(i);
    const Rational s = diagonal_exit(p);
    CHECK(s == diagonal_exit_by_facets(p));
    CHECK(s == diagonal_exit_of_generators(i));
    const Rational t = lct(i);
    CHECK(sgn(t) > 0);
    CHECK(t <= static_cast<long>(n));
  }
}
