#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "newton_segre/monomial.hpp"
#include "newton_segre/polyhedron.hpp"
#include "newton_segre/rational.hpp"
#include "newton_segre/series.hpp"

namespace nsegre {

// conv(v_0, ..., v_p) + cone(e_k : k in ray_axes), with p + |ray_axes| = n.
// `jacobian` is |det M|, M = [v_1 - v_0, ..., v_p - v_0, e_{k_1}, ...].
struct GeneralizedSimplex {
  std::vector<RationalPoint> finite_vertices;
  std::vector<std::size_t> ray_axes;
  Rational jacobian;

  std::size_t dimension() const;

  // Exact point location: the coordinates (beta_1..beta_p, t_1..t_q) of
  // p - v_0 in the basis M. p lies in the piece iff beta, t >= 0 and
  // sum(beta) <= 1.
  std::vector<Rational> local_coordinates(const RationalPoint& p) const;
};

struct DecompositionOptions {
  // When set, each facet's vertex list is shuffled with this seed before the
  // placing triangulation. Used to check that results do not depend on the
  // triangulation.
  std::optional<std::uint64_t> shuffle_seed;
};

// Cones the origin over a triangulation of every diagram facet. The pieces
// have pairwise disjoint interiors and cover the Newton region. Throws
// DegenerateFacet if a piece comes out with zero jacobian.
std::vector<GeneralizedSimplex> cone_decomposition(const NewtonPolyhedron& polyhedron,
                                                   const DecompositionOptions& options = {});

// Integral of n! X1..Xn / (1 + a.X)^{n+1} over the piece, as a series
// truncated at total degree `degree`:
//   jacobian * prod_{i not a ray} X_i * prod_k (1 + v_k.X)^{-1}.
TruncatedSeries integrate_piece(const GeneralizedSimplex& piece, std::size_t n, int degree);

// The same integral as an exact rational function value at X > 0.
Rational integrate_piece_at(const GeneralizedSimplex& piece, std::span<const Rational> x);
double integrate_piece_at(const GeneralizedSimplex& piece, std::span<const double> x);

struct SegreClassResult {
  TruncatedSeries multivariate;
  std::vector<Rational> pushforward;  // coefficients of H^1 .. H^ambient_dim
  int ambient_dim = 0;
  std::vector<GeneralizedSimplex> pieces;
};

// Throws AmbientTooSmall when ambient_dim < n - 1.
SegreClassResult segre_class(const MonomialIdeal& ideal, int ambient_dim,
                             const DecompositionOptions& options = {});

// Exact value of the (untruncated) rational function at X. Throws
// NonPositiveParameter unless every X_i > 0.
Rational evaluate(const SegreClassResult& result, std::span<const Rational> x);
double evaluate(const SegreClassResult& result, std::span<const double> x);

// Value of the truncated series; approximate by construction.
double evaluate_series(const TruncatedSeries& series, std::span<const double> x);

// Exact rational-function value of the Segre class straight from the ideal.
Rational segre_value(const MonomialIdeal& ideal, std::span<const Rational> x);

}  // namespace nsegre
