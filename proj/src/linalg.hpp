#pragma once

// Small dense exact linear algebra shared by the geometry modules.

#include <cstddef>
#include <optional>
#include <vector>

#include "newton_segre/rational.hpp"

namespace nsegre::linalg {

using Matrix = std::vector<std::vector<Rational>>;  // row-major

// Reduced row echelon form in place; returns the pivot column of each
// nonzero row.
std::vector<std::size_t> row_reduce(Matrix& a);

std::size_t rank(Matrix a);

// Basis vector of a one-dimensional null space, or nullopt if the null space
// has any other dimension. `a` has `cols` columns (it may have zero rows).
std::optional<std::vector<Rational>> null_vector(Matrix a, std::size_t cols);

Rational determinant(Matrix a);

// Inverse of a nonsingular square matrix, nullopt if singular.
std::optional<Matrix> inverse(const Matrix& a);

// Positive multiple with coprime integer entries (sign is preserved).
std::vector<Rational> primitive(const std::vector<Rational>& v);

}  // namespace nsegre::linalg
