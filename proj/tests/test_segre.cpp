#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "newton_segre/error.hpp"
#include "newton_segre/segre.hpp"
#include "oracles/quadrature.hpp"
#include "support.hpp"

using namespace nsegre;
using testing_support::random_ideal;
using testing_support::random_rational;

namespace {

// Coefficients of H^1..H^D in d H / (1 + d H).
std::vector<Rational> divisor_series(Exponent d, int degree) {
  std::vector<Rational> out;
  Rational term = static_cast<long>(d);
  for (int k = 1; k <= degree; ++k) {
    out.push_back(term);
    term *= -static_cast<long>(d);
  }
  return out;
}

// Determinant by cofactor expansion; used only on 3x3 and smaller.
double det(std::vector<std::vector<double>> a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  double total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<double>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<double> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(a[r][k]);
      minor.push_back(row);
    }
    total += ((c % 2) ? -1 : 1) * a[0][c] * det(minor);
  }
  return total;
}

GeneralizedSimplex make_piece(std::size_t n, const std::vector<std::vector<long>>& vertices,
                              const std::vector<std::size_t>& rays) {
  GeneralizedSimplex piece;
  piece.finite_vertices.push_back(RationalPoint(n, Rational(0)));
  std::vector<std::vector<double>> columns;
  for (const auto& v : vertices) {
    piece.finite_vertices.emplace_back(v.begin(), v.end());
    columns.emplace_back(v.begin(), v.end());
  }
  for (auto axis : rays) {
    std::vector<double> e(n, 0.0);
    e[axis] = 1.0;
    columns.push_back(e);
  }
  piece.ray_axes = rays;
  piece.jacobian = Rational(std::fabs(det(columns)));
  return piece;
}

struct Shape {
  const char* name;
  std::size_t n;
  std::size_t rays;
};

}  // namespace

TEST_CASE("truncated series arithmetic") {
  const std::vector<Rational> c{1, 2};
  auto s = TruncatedSeries::affine(2, 3, 1, c);
  auto inv = s.inverse();
  auto product = s * inv;
  CHECK(product == TruncatedSeries::constant(2, 3, 1));
  CHECK(inv.coefficient({1, 0}) == -1);
  CHECK(inv.coefficient({0, 1}) == -2);
  CHECK(inv.coefficient({1, 1}) == 4);
  CHECK(inv.coefficient({0, 3}) == -8);
  CHECK(inv.coefficient({0, 4}) == 0);  // truncated
  auto h = inv.collapse();
  REQUIRE(h.size() == 4);
  CHECK(h[1] == -3);
  CHECK(h[2] == 9);
  CHECK_THROWS_AS(TruncatedSeries(2, 3).inverse(), Error);
  auto t = TruncatedSeries::monomial(2, 3, {1, 1}, 5);
  t -= TruncatedSeries::monomial(2, 3, {1, 1}, 5);
  CHECK(t.is_zero());
}

TEST_CASE("decomposition of the diagonal ideal") {
  auto pieces = cone_decomposition(newton_polyhedron(MonomialIdeal::make(2, {{2, 0}, {0, 3}})));
  REQUIRE(pieces.size() == 1);
  CHECK(pieces[0].ray_axes.empty());
  CHECK(pieces[0].jacobian == 6);
  CHECK(pieces[0].finite_vertices.size() == 3);
}

TEST_CASE("decomposition of x1*x2") {
  auto pieces = cone_decomposition(newton_polyhedron(MonomialIdeal::make(2, {{1, 1}})));
  REQUIRE(pieces.size() == 2);
  std::vector<std::size_t> rays;
  for (const auto& p : pieces) {
    CHECK(p.jacobian == 1);
    REQUIRE(p.ray_axes.size() == 1);
    rays.push_back(p.ray_axes[0]);
    CHECK(p.finite_vertices.back() == RationalPoint{1, 1});
  }
  std::sort(rays.begin(), rays.end());
  CHECK(rays == std::vector<std::size_t>{0, 1});
}

TEST_CASE("decomposition of (x1^2, x1*x2)") {
  auto pieces = cone_decomposition(newton_polyhedron(MonomialIdeal::make(2, {{2, 0}, {1, 1}})));
  REQUIRE(pieces.size() == 2);
  int bounded = 0, with_ray = 0;
  for (const auto& p : pieces) {
    if (p.ray_axes.empty()) {
      ++bounded;
      CHECK(p.jacobian == 2);
    } else {
      ++with_ray;
      CHECK(p.ray_axes == std::vector<std::size_t>{1});
      CHECK(p.jacobian == 1);
    }
  }
  CHECK(bounded == 1);
  CHECK(with_ray == 1);
}

TEST_CASE("closed forms of single pieces") {
  // standard simplex in three variables
  auto simplex = make_piece(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {});
  const int d = 6;
  TruncatedSeries expected = TruncatedSeries::monomial(3, d, {1, 1, 1});
  for (std::size_t i = 0; i < 3; ++i) {
    std::vector<Rational> e(3, Rational(0));
    e[i] = 1;
    expected = expected * TruncatedSeries::affine(3, d, 1, e).inverse();
  }
  CHECK(integrate_piece(simplex, 3, d) == expected);

  // segment [0, l]
  for (long ell = 1; ell <= 4; ++ell) {
    auto seg = make_piece(1, {{ell}}, {});
    CHECK(integrate_piece(seg, 1, 5).collapse() ==
          std::vector<Rational>{0, ell, -ell * ell, ell * ell * ell, -ell * ell * ell * ell,
                                ell * ell * ell * ell * ell});
  }

  // {0, (1,1)} + ray e2 -> X1 / (1 + X1 + X2)
  auto ray_piece = make_piece(2, {{1, 1}}, {1});
  const std::vector<Rational> ones{1, 1};
  CHECK(integrate_piece(ray_piece, 2, 5) ==
        TruncatedSeries::monomial(2, 5, {1, 0}) * TruncatedSeries::affine(2, 5, 1, ones).inverse());
}

TEST_CASE("per-piece formula against quadrature") {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<long> coord(0, 4);
  std::uniform_real_distribution<double> param(0.05, 2.0);
  const std::vector<Shape> shapes{{"bounded simplex n=2", 2, 0}, {"bounded simplex n=3", 3, 0},
                                  {"one-ray n=2", 2, 1},         {"one-ray n=3", 3, 1},
                                  {"two-ray n=3", 3, 2},         {"segment n=1", 1, 0}};
  for (const auto& shape : shapes) {
    const std::size_t n = shape.n, p = n - shape.rays;
    std::vector<std::size_t> rays;
    for (std::size_t k = 0; k < shape.rays; ++k) rays.push_back(n - 1 - k);
    std::sort(rays.begin(), rays.end());
    // random non-degenerate vertices with non-negative coordinates
    GeneralizedSimplex piece;
    std::vector<std::vector<double>> finite;
    do {
      std::vector<std::vector<long>> verts(p, std::vector<long>(n));
      for (auto& v : verts)
        for (auto& c : v) c = coord(rng);
      piece = make_piece(n, verts, rays);
      finite.clear();
      for (const auto& v : verts) finite.emplace_back(v.begin(), v.end());
    } while (sgn(piece.jacobian) == 0);

    for (int sample = 0; sample < 5; ++sample) {
      std::vector<double> x(n);
      for (auto& v : x) v = param(rng);
      const double closed = integrate_piece_at(piece, x);
      const double numeric = oracle::integrate_kernel(finite, rays, x, piece.jacobian.get_d());
      INFO(std::string(shape.name) << " sample " << sample << " closed " << closed << " numeric " << numeric);
      CHECK(std::fabs(closed - numeric) <= 1e-8 * std::fabs(numeric));
    }
  }
}

TEST_CASE("pure powers in one and two variables") {
  for (Exponent ell = 1; ell <= 6; ++ell) {
    for (std::size_t n : {1u, 2u}) {
      ExponentVector g(n, 0);
      g[0] = ell;
      const auto r = segre_class(MonomialIdeal::make(n, {g}), 5);
      CHECK(r.pushforward == divisor_series(ell, 5));
    }
  }
  const std::vector<Rational> half{make_rational(1, 2)};
  CHECK(segre_value(MonomialIdeal::make(1, {{2}}), half) == make_rational(1, 2));
}

TEST_CASE("diagonal ideals") {
  for (Exponent l1 = 1; l1 <= 4; ++l1)
    for (Exponent l2 = 1; l2 <= 4; ++l2) {
      const int d = 6;
      const auto r = segre_class(MonomialIdeal::make(2, {{l1, 0}, {0, l2}}), d);
      const std::vector<Rational> e1{static_cast<long>(l1), 0}, e2{0, static_cast<long>(l2)};
      auto expected = TruncatedSeries::monomial(2, d, {1, 1}, static_cast<long>(l1 * l2)) *
                      TruncatedSeries::affine(2, d, 1, e1).inverse() * TruncatedSeries::affine(2, d, 1, e2).inverse();
      CHECK(r.multivariate == expected);
    }
  const std::vector<Rational> x{make_rational(1, 3), make_rational(1, 2)};
  CHECK(segre_value(MonomialIdeal::make(2, {{2, 0}, {0, 3}}), x) == make_rational(6, 25));
}

TEST_CASE("principal ideals follow the divisor law") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<Exponent> e(0, 4);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + trial % 3;
    ExponentVector v(n);
    Exponent d = 0;
    do {
      d = 0;
      for (auto& c : v) d += (c = e(rng));
    } while (d == 0);
    const int ambient = 4;
    CHECK(segre_class(MonomialIdeal::make(n, {v}), ambient).pushforward == divisor_series(d, ambient));
  }
  const auto x1x2 = segre_class(MonomialIdeal::make(2, {{1, 1}}), 3);
  CHECK(x1x2.pushforward == divisor_series(2, 3));
  const std::vector<Rational> ones{1, 1};
  CHECK(segre_value(MonomialIdeal::make(2, {{1, 1}}), ones) == make_rational(2, 3));
}

TEST_CASE("orthant integral is one") {
  // For (x^v), P is v + orthant; iterated antiderivatives of the kernel over
  // it give 1/(1 + v.X). The region and P must split the orthant's mass 1.
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<Exponent> e(0, 3);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + trial % 3;
    ExponentVector v(n);
    Exponent d = 0;
    do {
      d = 0;
      for (auto& c : v) d += (c = e(rng));
    } while (d == 0);
    std::vector<Rational> x(n);
    for (auto& c : x) c = random_rational(rng, 9, 5) + make_rational(1, 7);
    // integrate a_n, then a_{n-1}, ...: int_{v_k}^inf k! X_k / (c + a_k X_k)^{k+1}
    // = (k-1)! / (c + v_k X_k)^k
    Rational shift = 1;
    for (std::size_t i = 0; i < n; ++i) shift += static_cast<long>(v[i]) * x[i];
    const Rational over_p = 1 / shift;
    CHECK(segre_value(MonomialIdeal::make(n, {v}), x) + over_p == 1);
  }
}

TEST_CASE("embedding independence") {
  for (Exponent ell = 1; ell <= 6; ++ell) {
    const auto one = segre_class(MonomialIdeal::make(1, {{ell}}), 4);
    const auto two = segre_class(MonomialIdeal::make(2, {{ell, 0}}), 4);
    const auto three = segre_class(MonomialIdeal::make(3, {{ell, 0, 0}}), 4);
    CHECK(one.pushforward == two.pushforward);
    CHECK(one.pushforward == three.pushforward);
  }
}

TEST_CASE("lowest degree equals the height") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 3;
    auto i = random_ideal(rng, n, 4, 5);
    const auto r = segre_class(i, 4);
    std::size_t lowest = 0;
    for (std::size_t k = 0; k < r.pushforward.size(); ++k)
      if (sgn(r.pushforward[k]) != 0) {
        lowest = k + 1;
        break;
      }
    CHECK(lowest == i.height());
  }
}

TEST_CASE("triangulation order does not change the class") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 15; ++trial) {
    auto i = random_ideal(rng, 3, 5, 4);
    const auto base = segre_class(i, 3);
    for (std::uint64_t seed : {1ULL, 2ULL, 99ULL}) {
      DecompositionOptions opts;
      opts.shuffle_seed = seed;
      CHECK(segre_class(i, 3, opts).multivariate == base.multivariate);
    }
  }
}

TEST_CASE("pieces tile the Newton region") {
  std::mt19937_64 rng(101);
  std::vector<MonomialIdeal> ideals{MonomialIdeal::make(2, {{2, 0}, {1, 1}}),
                                    MonomialIdeal::make(2, {{4, 0}, {1, 2}, {0, 5}}),
                                    MonomialIdeal::make(3, {{2, 0, 0}, {0, 3, 1}, {1, 1, 1}}),
                                    MonomialIdeal::make(3, {{1, 1, 0}})};
  std::uniform_int_distribution<long> num(0, 96);
  int violations = 0, checked = 0;
  for (const auto& ideal : ideals) {
    const auto poly = newton_polyhedron(ideal);
    const auto pieces = cone_decomposition(poly);
    const std::size_t n = ideal.dimension();
    for (int k = 0; k < 25000; ++k) {
      RationalPoint p(n);
      for (auto& c : p) c = make_rational(num(rng), 16);
      int closed = 0, open = 0;
      for (const auto& piece : pieces) {
        const auto local = piece.local_coordinates(p);
        Rational beta_sum;
        bool inside = true, interior = true;
        for (std::size_t j = 0; j < local.size(); ++j) {
          if (sgn(local[j]) < 0) inside = false;
          if (sgn(local[j]) <= 0) interior = false;
          if (j + 1 < piece.finite_vertices.size()) beta_sum += local[j];
        }
        if (beta_sum > 1) inside = false;
        if (beta_sum >= 1) interior = false;
        closed += inside;
        open += inside && interior;
      }
      const bool member = poly.in_newton_region(p);
      ++checked;
      if (member ? (closed == 0 || open > 1 || (closed > 1 && open > 0)) : closed != 0) ++violations;
    }
  }
  CHECK(checked == 100000);
  CHECK(violations == 0);
}

TEST_CASE("segre errors") {
  auto i = MonomialIdeal::make(3, {{1, 1, 1}});
  CHECK_THROWS_AS(segre_class(i, 1), Error);
  try {
    segre_class(i, 1);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AmbientTooSmall);
  }
  const auto r = segre_class(i, 2);
  const std::vector<Rational> bad{1, 0, 1};
  try {
    evaluate(r, bad);
    FAIL("expected NonPositiveParameter");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonPositiveParameter);
  }
  // value vanishes as X -> 0
  const std::vector<Rational> tiny{make_rational(1, 1000000), make_rational(1, 1000000), make_rational(1, 1000000)};
  CHECK(evaluate(r, tiny) < make_rational(1, 100000));
}
