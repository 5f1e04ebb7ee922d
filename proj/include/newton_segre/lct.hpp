#pragma once

#include <span>

#include "newton_segre/monomial.hpp"
#include "newton_segre/polyhedron.hpp"
#include "newton_segre/rational.hpp"

namespace nsegre {

// sigma(P) = min{ s >= 0 : s*(1,...,1) in P }, by exact LP over the extreme
// points. lct = 1/sigma, sigma the diagonal exit of the Newton polyhedron.
Rational diagonal_exit(const NewtonPolyhedron& polyhedron);

// Same value from the H-form: max over diagram facets of c / <w, 1>.
Rational diagonal_exit_by_facets(const NewtonPolyhedron& polyhedron);

// The LP over the minimal generators directly. conv(generators) + orthant is
// the polyhedron, so non-extreme generators do not change the optimum; this
// skips facet enumeration and is the hot path for per-point lct queries.
Rational diagonal_exit_of_generators(const MonomialIdeal& ideal);

Rational lct(const MonomialIdeal& ideal);

// Stretch factors (prod_{j != 1} a_j, ..., prod_{j != n} a_j).
ExponentVector region_stretch_factors(std::span<const Exponent> a);

// lct(I_{a2..an, ..., a1..a_{n-1}}) >= m / (a1 ... an), exactly. This is the
// lattice-sum index set condition.
bool lct_condition(const MonomialIdeal& ideal, std::span<const Exponent> a, Exponent m);

// a1 ... an * lct(I_{...}) <= m: the lct characterization of a/m lying in the
// closed Newton region. Equality (diagram boundary) satisfies both this and
// lct_condition.
bool lct_in_region(const MonomialIdeal& ideal, std::span<const Exponent> a, Exponent m);

}  // namespace nsegre
