#include "newton_segre/lct.hpp"

#include <algorithm>

#include "newton_segre/error.hpp"
#include "newton_segre/lp.hpp"

namespace nsegre {

namespace {

// minimize s  s.t.  s*1 >= sum_j lambda_j v_j,  sum lambda = 1,  s, lambda >= 0
Rational diagonal_exit_lp(const std::vector<ExponentVector>& points) {
  const std::size_t k = points.size(), n = points.front().size();
  LpProblem lp;
  lp.objective.assign(k + 1, Rational(0));
  lp.objective[0] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    LpConstraint row{std::vector<Rational>(k + 1), ConstraintSense::GreaterEqual, Rational(0)};
    row.coefficients[0] = 1;
    for (std::size_t j = 0; j < k; ++j) row.coefficients[j + 1] = -static_cast<long>(points[j][i]);
    lp.constraints.push_back(std::move(row));
  }
  LpConstraint simplex{std::vector<Rational>(k + 1, Rational(1)), ConstraintSense::Equal, Rational(1)};
  simplex.coefficients[0] = 0;
  lp.constraints.push_back(std::move(simplex));

  LpOutcome out = solve_lp(lp);
  if (out.status != LpStatus::Optimal)
    throw Error(ErrorCode::InvalidArgument, "diagonal exit LP has no optimum");
  return out.optimum;
}

}  // namespace

Rational diagonal_exit(const NewtonPolyhedron& polyhedron) {
  return diagonal_exit_lp(polyhedron.extreme_points());
}

Rational diagonal_exit_by_facets(const NewtonPolyhedron& polyhedron) {
  Rational best;
  for (const auto& f : polyhedron.facets()) {
    if (!f.is_diagram()) continue;
    Rational weight;
    for (const auto& w : f.normal) weight += w;
    best = std::max(best, Rational(f.offset / weight));
  }
  return best;
}

Rational diagonal_exit_of_generators(const MonomialIdeal& ideal) {
  return diagonal_exit_lp(ideal.generators());
}

Rational lct(const MonomialIdeal& ideal) { return 1 / diagonal_exit_of_generators(ideal); }

ExponentVector region_stretch_factors(std::span<const Exponent> a) {
  if (std::any_of(a.begin(), a.end(), [](Exponent v) { return v < 1; }))
    throw Error(ErrorCode::InvalidArgument, "lattice coordinates must be >= 1");
  ExponentVector r(a.size(), 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (j != i && __builtin_mul_overflow(r[i], a[j], &r[i]))
        throw Error(ErrorCode::Overflow, "stretch factor exceeds 64-bit range");
  return r;
}

namespace {

// a1 ... an * lct(I_r) as an exact rational.
Rational scaled_lct(const MonomialIdeal& ideal, std::span<const Exponent> a, Exponent m) {
  if (a.size() != ideal.dimension())
    throw Error(ErrorCode::DimensionMismatch, "lattice point has the wrong length");
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "m must be >= 1");
  ExponentVector r = region_stretch_factors(a);
  Integer product = 1;
  for (auto v : a) product *= static_cast<long>(v);
  return Rational(product) * lct(stretch(ideal, r));
}

}  // namespace

bool lct_condition(const MonomialIdeal& ideal, std::span<const Exponent> a, Exponent m) {
  return scaled_lct(ideal, a, m) >= static_cast<long>(m);
}

bool lct_in_region(const MonomialIdeal& ideal, std::span<const Exponent> a, Exponent m) {
  return scaled_lct(ideal, a, m) <= static_cast<long>(m);
}

}  // namespace nsegre
