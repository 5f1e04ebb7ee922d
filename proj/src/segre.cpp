#include "newton_segre/segre.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "linalg.hpp"
#include "newton_segre/error.hpp"

namespace nsegre {

std::size_t GeneralizedSimplex::dimension() const {
  return finite_vertices.empty() ? 0 : finite_vertices.front().size();
}

std::vector<Rational> GeneralizedSimplex::local_coordinates(const RationalPoint& p) const {
  const std::size_t n = dimension();
  if (p.size() != n) throw Error(ErrorCode::DimensionMismatch, "point has the wrong length");
  const std::size_t cols = finite_vertices.size() - 1 + ray_axes.size();
  // Augmented system M y = p - v_0.
  linalg::Matrix a(n, std::vector<Rational>(cols + 1));
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t c = 0;
    for (std::size_t k = 1; k < finite_vertices.size(); ++k)
      a[i][c++] = finite_vertices[k][i] - finite_vertices[0][i];
    for (auto axis : ray_axes) a[i][c++] = axis == i ? 1 : 0;
    a[i][cols] = p[i] - finite_vertices[0][i];
  }
  linalg::row_reduce(a);
  std::vector<Rational> y(cols);
  for (std::size_t r = 0; r < cols; ++r) y[r] = a[r][cols];
  return y;
}

namespace {

using Vec = std::vector<Rational>;

// A facet generator in homogenized coordinates: (v, 1) for a vertex, (e_k, 0)
// for a recession ray.
struct Generator {
  Vec coords;  // length n + 1
  bool is_ray = false;
  std::size_t axis = 0;
};

int orientation(const std::vector<const Vec*>& face, const Vec& g, const Vec& normal) {
  linalg::Matrix m;
  for (const Vec* f : face) m.push_back(*f);
  m.push_back(g);
  m.push_back(normal);
  return sgn(linalg::determinant(std::move(m)));
}

// Placing triangulation of the cone spanned by `gens`, which all lie in the
// rank-n subspace orthogonal to `normal`. Returns cells as index tuples.
std::vector<std::vector<std::size_t>> place(const std::vector<Generator>& gens, const Vec& normal,
                                            std::size_t rank_target) {
  // Initial cell: the first generators (in order) that raise the rank.
  std::vector<std::size_t> initial;
  linalg::Matrix span;
  std::vector<bool> used(gens.size(), false);
  for (std::size_t i = 0; i < gens.size() && initial.size() < rank_target; ++i) {
    span.push_back(gens[i].coords);
    if (linalg::rank(span) == initial.size() + 1) {
      initial.push_back(i);
      used[i] = true;
    } else {
      span.pop_back();
    }
  }
  if (initial.size() != rank_target)
    throw Error(ErrorCode::DegenerateFacet, "facet generators do not span the facet");

  std::vector<std::vector<std::size_t>> cells{initial};
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (used[g]) continue;
    // Boundary faces: (n-1)-subsets of a cell that no other cell shares.
    std::map<std::vector<std::size_t>, std::pair<int, std::size_t>> faces;  // face -> (count, opposite)
    for (const auto& cell : cells) {
      for (std::size_t drop = 0; drop < cell.size(); ++drop) {
        std::vector<std::size_t> face;
        for (std::size_t j = 0; j < cell.size(); ++j)
          if (j != drop) face.push_back(cell[j]);
        std::sort(face.begin(), face.end());
        auto& entry = faces[face];
        ++entry.first;
        entry.second = cell[drop];
      }
    }
    std::vector<std::vector<std::size_t>> added;
    for (const auto& [face, entry] : faces) {
      if (entry.first != 1) continue;
      std::vector<const Vec*> face_vecs;
      for (auto idx : face) face_vecs.push_back(&gens[idx].coords);
      const int side_g = orientation(face_vecs, gens[g].coords, normal);
      const int side_o = orientation(face_vecs, gens[entry.second].coords, normal);
      if (side_g != 0 && side_g == -side_o) {
        auto cell = face;
        cell.push_back(g);
        added.push_back(std::move(cell));
      }
    }
    cells.insert(cells.end(), added.begin(), added.end());
  }
  return cells;
}

Rational abs_det_of_columns(const std::vector<Vec>& columns, std::size_t n) {
  linalg::Matrix m(n, Vec(n));
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t r = 0; r < n; ++r) m[r][c] = columns[c][r];
  Rational d = linalg::determinant(std::move(m));
  return sgn(d) < 0 ? Rational(-d) : d;
}

void require_positive(std::span<const Rational> x) {
  for (const auto& v : x)
    if (sgn(v) <= 0) throw Error(ErrorCode::NonPositiveParameter, "X parameters must be positive");
}

void require_positive(std::span<const double> x) {
  for (double v : x)
    if (!(v > 0.0)) throw Error(ErrorCode::NonPositiveParameter, "X parameters must be positive");
}

}  // namespace

std::vector<GeneralizedSimplex> cone_decomposition(const NewtonPolyhedron& polyhedron,
                                                   const DecompositionOptions& options) {
  const std::size_t n = polyhedron.dimension();
  std::vector<GeneralizedSimplex> pieces;
  std::mt19937_64 rng(options.shuffle_seed.value_or(0));

  for (const auto& facet : polyhedron.diagram_facets()) {
    std::vector<Generator> gens;
    for (const auto& v : polyhedron.extreme_points()) {
      Rational level;
      for (std::size_t i = 0; i < n; ++i) level += facet.normal[i] * v[i];
      if (level != facet.offset) continue;
      Generator g;
      for (auto e : v) g.coords.emplace_back(static_cast<long>(e));
      g.coords.emplace_back(1);
      gens.push_back(std::move(g));
    }
    // Extreme points are already in lexicographic (descending) order.
    if (options.shuffle_seed) std::shuffle(gens.begin(), gens.end(), rng);
    for (std::size_t k = 0; k < n; ++k) {
      if (sgn(facet.normal[k]) != 0) continue;
      Generator g;
      g.coords.assign(n + 1, Rational(0));
      g.coords[k] = 1;
      g.is_ray = true;
      g.axis = k;
      gens.push_back(std::move(g));
    }

    Vec normal = facet.normal;
    normal.push_back(-facet.offset);
    for (const auto& cell : place(gens, normal, n)) {
      GeneralizedSimplex piece;
      piece.finite_vertices.push_back(RationalPoint(n, Rational(0)));
      std::vector<Vec> columns;
      for (auto idx : cell) {
        const Generator& g = gens[idx];
        if (g.is_ray) {
          piece.ray_axes.push_back(g.axis);
        } else {
          piece.finite_vertices.emplace_back(g.coords.begin(), g.coords.end() - 1);
        }
      }
      std::sort(piece.ray_axes.begin(), piece.ray_axes.end());
      for (std::size_t k = 1; k < piece.finite_vertices.size(); ++k) columns.push_back(piece.finite_vertices[k]);
      for (auto axis : piece.ray_axes) {
        Vec e(n);
        e[axis] = 1;
        columns.push_back(std::move(e));
      }
      piece.jacobian = abs_det_of_columns(columns, n);
      if (sgn(piece.jacobian) == 0)
        throw Error(ErrorCode::DegenerateFacet, "facet triangulation produced a flat piece");
      pieces.push_back(std::move(piece));
    }
  }
  return pieces;
}

TruncatedSeries integrate_piece(const GeneralizedSimplex& piece, std::size_t n, int degree) {
  // Ray factors 1/X_k cancel against the numerator X_1..X_n, leaving the
  // monomial over the non-ray axes.
  TruncatedSeries::Monomial lead(n, 1);
  for (auto axis : piece.ray_axes) {
    if (lead[axis] != 1) throw Error(ErrorCode::DegenerateFacet, "repeated ray axis in piece");
    lead[axis] = 0;
  }
  TruncatedSeries result = TruncatedSeries::monomial(n, degree, lead, piece.jacobian);
  if (result.is_zero()) return result;
  for (const auto& v : piece.finite_vertices) {
    if (std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; })) continue;
    result = result * TruncatedSeries::affine(n, degree, Rational(1), v).inverse();
  }
  return result;
}

Rational integrate_piece_at(const GeneralizedSimplex& piece, std::span<const Rational> x) {
  require_positive(x);
  Rational value = piece.jacobian;
  std::vector<bool> is_ray(x.size(), false);
  for (auto axis : piece.ray_axes) is_ray[axis] = true;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!is_ray[i]) value *= x[i];
  for (const auto& v : piece.finite_vertices) {
    Rational linear = 1;
    for (std::size_t i = 0; i < x.size(); ++i) linear += v[i] * x[i];
    value /= linear;
  }
  return value;
}

double integrate_piece_at(const GeneralizedSimplex& piece, std::span<const double> x) {
  require_positive(x);
  double value = piece.jacobian.get_d();
  std::vector<bool> is_ray(x.size(), false);
  for (auto axis : piece.ray_axes) is_ray[axis] = true;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!is_ray[i]) value *= x[i];
  for (const auto& v : piece.finite_vertices) {
    double linear = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i) linear += v[i].get_d() * x[i];
    value /= linear;
  }
  return value;
}

SegreClassResult segre_class(const MonomialIdeal& ideal, int ambient_dim, const DecompositionOptions& options) {
  const std::size_t n = ideal.dimension();
  if (ambient_dim < 0 || static_cast<std::size_t>(ambient_dim) + 1 < n)
    throw Error(ErrorCode::AmbientTooSmall,
                "ambient dimension " + std::to_string(ambient_dim) + " is below n - 1 = " + std::to_string(n - 1));

  SegreClassResult result{TruncatedSeries(n, ambient_dim), {}, ambient_dim, {}};
  result.pieces = cone_decomposition(newton_polyhedron(ideal), options);
  for (const auto& piece : result.pieces) result.multivariate += integrate_piece(piece, n, ambient_dim);
  auto collapsed = result.multivariate.collapse();
  result.pushforward.assign(collapsed.begin() + 1, collapsed.end());
  return result;
}

Rational evaluate(const SegreClassResult& result, std::span<const Rational> x) {
  if (x.size() != result.multivariate.variables())
    throw Error(ErrorCode::DimensionMismatch, "wrong number of X parameters");
  require_positive(x);
  Rational total;
  for (const auto& piece : result.pieces) total += integrate_piece_at(piece, x);
  return total;
}

double evaluate(const SegreClassResult& result, std::span<const double> x) {
  if (x.size() != result.multivariate.variables())
    throw Error(ErrorCode::DimensionMismatch, "wrong number of X parameters");
  require_positive(x);
  double total = 0.0;
  for (const auto& piece : result.pieces) total += integrate_piece_at(piece, x);
  return total;
}

double evaluate_series(const TruncatedSeries& series, std::span<const double> x) {
  require_positive(x);
  return series.evaluate(x);
}

Rational segre_value(const MonomialIdeal& ideal, std::span<const Rational> x) {
  if (x.size() != ideal.dimension()) throw Error(ErrorCode::DimensionMismatch, "wrong number of X parameters");
  require_positive(x);
  Rational total;
  for (const auto& piece : cone_decomposition(newton_polyhedron(ideal))) total += integrate_piece_at(piece, x);
  return total;
}

}  // namespace nsegre
