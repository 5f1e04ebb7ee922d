#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "newton_segre/monomial.hpp"
#include "newton_segre/rational.hpp"

namespace nsegre {

// Inequality <normal, a> >= offset. Normals are stored as primitive
// non-negative integer vectors, so two facets are equal iff their hyperplanes
// coincide.
struct Facet {
  std::vector<Rational> normal;
  Rational offset;

  // Facets with positive offset face the origin and make up the Newton
  // diagram; offset-0 facets are coordinate hyperplanes a_i >= 0.
  bool is_diagram() const { return sgn(offset) > 0; }

  friend bool operator==(const Facet&, const Facet&) = default;
};

// conv(exponents of I) + non-negative orthant, in H- and V-form.
class NewtonPolyhedron {
 public:
  std::size_t dimension() const noexcept { return n_; }
  const std::vector<ExponentVector>& extreme_points() const noexcept { return extreme_points_; }
  const std::vector<Facet>& facets() const noexcept { return facets_; }
  std::vector<Facet> diagram_facets() const;

  // Facet form: <w,p> >= c for every facet. Throws DimensionMismatch.
  bool contains(const RationalPoint& p) const;

  // LP form: p in conv(extreme points) + orthant.
  bool contains_lp(const RationalPoint& p) const;

  // Closed Newton region: p >= 0 (else NegativeCoordinate) and some diagram
  // facet has <w,p> <= c. Boundary points belong to both the region and the
  // polyhedron.
  bool in_newton_region(const RationalPoint& p) const;

  // sup{ t : t*e_axis in Newton region }; nullopt when unbounded.
  std::optional<Rational> axis_extent(std::size_t axis) const;

 private:
  friend NewtonPolyhedron newton_polyhedron(const MonomialIdeal&);

  std::size_t n_ = 0;
  std::vector<ExponentVector> extreme_points_;
  std::vector<Facet> facets_;
};

// Extreme points are selected by an LP dominance test; facets are enumerated
// exhaustively over n-subsets of extreme points and axis rays.
NewtonPolyhedron newton_polyhedron(const MonomialIdeal& ideal);

bool in_newton_region(const MonomialIdeal& ideal, const RationalPoint& p);

}  // namespace nsegre
