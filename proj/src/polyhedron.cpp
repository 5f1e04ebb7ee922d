#include "newton_segre/polyhedron.hpp"

#include <algorithm>
#include <set>

#include "linalg.hpp"
#include "newton_segre/error.hpp"
#include "newton_segre/lp.hpp"

namespace nsegre {

namespace {

void check_length(std::size_t n, const RationalPoint& p) {
  if (p.size() != n)
    throw Error(ErrorCode::DimensionMismatch,
                "point has " + std::to_string(p.size()) + " coordinates, expected " + std::to_string(n));
}

Rational dot(const std::vector<Rational>& w, const ExponentVector& v) {
  Rational s;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * v[i];
  return s;
}

Rational dot(const std::vector<Rational>& w, const RationalPoint& p) {
  Rational s;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * p[i];
  return s;
}

// Is some convex combination of `points` componentwise <= target?
bool dominated_by_hull(const std::vector<const ExponentVector*>& points, const RationalPoint& target) {
  const std::size_t k = points.size(), n = target.size();
  LpProblem lp;
  lp.objective.assign(k, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    LpConstraint row{std::vector<Rational>(k), ConstraintSense::LessEqual, target[i]};
    for (std::size_t j = 0; j < k; ++j) row.coefficients[j] = (*points[j])[i];
    lp.constraints.push_back(std::move(row));
  }
  lp.constraints.push_back({std::vector<Rational>(k, Rational(1)), ConstraintSense::Equal, Rational(1)});
  return solve_lp(lp).status == LpStatus::Optimal;
}

RationalPoint to_point(const ExponentVector& v) {
  RationalPoint p;
  p.reserve(v.size());
  for (auto e : v) p.emplace_back(static_cast<long>(e));
  return p;
}

// Calls visit(subset) for every size-k subset of [0, total) in lex order.
template <typename Visit>
void for_each_subset(std::size_t total, std::size_t k, Visit&& visit) {
  if (k > total) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == total - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<Facet> NewtonPolyhedron::diagram_facets() const {
  std::vector<Facet> out;
  for (const auto& f : facets_)
    if (f.is_diagram()) out.push_back(f);
  return out;
}

bool NewtonPolyhedron::contains(const RationalPoint& p) const {
  check_length(n_, p);
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](const Facet& f) { return dot(f.normal, p) >= f.offset; });
}

bool NewtonPolyhedron::contains_lp(const RationalPoint& p) const {
  check_length(n_, p);
  std::vector<const ExponentVector*> pts;
  for (const auto& v : extreme_points_) pts.push_back(&v);
  return dominated_by_hull(pts, p);
}

bool NewtonPolyhedron::in_newton_region(const RationalPoint& p) const {
  check_length(n_, p);
  if (std::any_of(p.begin(), p.end(), [](const Rational& q) { return sgn(q) < 0; }))
    throw Error(ErrorCode::NegativeCoordinate, "Newton region points must be non-negative");
  return std::any_of(facets_.begin(), facets_.end(),
                     [&](const Facet& f) { return f.is_diagram() && dot(f.normal, p) <= f.offset; });
}

std::optional<Rational> NewtonPolyhedron::axis_extent(std::size_t axis) const {
  std::optional<Rational> best;
  for (const auto& f : facets_) {
    if (!f.is_diagram()) continue;
    if (sgn(f.normal[axis]) == 0) return std::nullopt;
    Rational t = f.offset / f.normal[axis];
    if (!best || t > *best) best = t;
  }
  return best;
}

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.dimension();
  const auto& gens = ideal.generators();

  NewtonPolyhedron poly;
  poly.n_ = n;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<const ExponentVector*> others;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != i) others.push_back(&gens[j]);
    if (others.empty() || !dominated_by_hull(others, to_point(gens[i])))
      poly.extreme_points_.push_back(gens[i]);
  }

  // Elements 0..k-1 are extreme points, k..k+n-1 the axis rays.
  const auto& pts = poly.extreme_points_;
  const std::size_t k = pts.size();
  std::set<std::pair<std::vector<Rational>, Rational>> seen;
  for_each_subset(k + n, n, [&](const std::vector<std::size_t>& subset) {
    if (subset[0] >= k) return;  // a facet must contain a point
    const ExponentVector& base = pts[subset[0]];
    linalg::Matrix eqs;
    for (std::size_t s = 1; s < subset.size(); ++s) {
      std::vector<Rational> row(n);
      if (subset[s] < k) {
        for (std::size_t i = 0; i < n; ++i) row[i] = pts[subset[s]][i] - base[i];
      } else {
        row[subset[s] - k] = 1;
      }
      eqs.push_back(std::move(row));
    }
    auto normal = linalg::null_vector(std::move(eqs), n);
    if (!normal) return;
    bool any_pos = false, any_neg = false;
    for (const auto& q : *normal) {
      any_pos |= sgn(q) > 0;
      any_neg |= sgn(q) < 0;
    }
    if (any_pos && any_neg) return;  // rays would leave the half-space
    std::vector<Rational> w = linalg::primitive(*normal);
    if (any_neg)
      for (auto& q : w) q = -q;
    Rational c = dot(w, base);
    for (const auto& v : pts)
      if (dot(w, v) < c) return;
    seen.emplace(std::move(w), std::move(c));
  });

  for (auto& [w, c] : seen) poly.facets_.push_back(Facet{w, c});
  // Diagram facets first, then by normal.
  std::stable_sort(poly.facets_.begin(), poly.facets_.end(), [](const Facet& a, const Facet& b) {
    return a.is_diagram() > b.is_diagram();
  });
  return poly;
}

bool in_newton_region(const MonomialIdeal& ideal, const RationalPoint& p) {
  return newton_polyhedron(ideal).in_newton_region(p);
}

}  // namespace nsegre
