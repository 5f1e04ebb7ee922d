#pragma once
// Closed Newton region membership in two variables from the lower convex
// envelope of the generators, found by brute force over generator pairs.
#include <algorithm>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace oracle {

// g(x) = min { y : (x', y) in conv(gens), x' <= x }; nullopt when x is left of
// every generator.
inline std::optional<mpq_class> lower_envelope(const std::vector<std::vector<long>>& gens, const mpq_class& x) {
  std::optional<mpq_class> best;
  auto offer = [&](const mpq_class& y) {
    if (!best || y < *best) best = y;
  };
  for (const auto& u : gens)
    if (mpq_class(u[0]) <= x) offer(u[1]);
  for (const auto& u : gens)
    for (const auto& v : gens) {
      if (!(u[0] < v[0]) || !(mpq_class(u[0]) <= x && x <= mpq_class(v[0]))) continue;
      const mpq_class lambda = (mpq_class(v[0]) - x) / (v[0] - u[0]);
      offer(lambda * u[1] + (1 - lambda) * v[1]);
    }
  return best;
}

inline bool in_polyhedron_2d(const std::vector<std::vector<long>>& gens, const mpq_class& x, const mpq_class& y) {
  const auto g = lower_envelope(gens, x);
  return g && y >= *g;
}

// The region is the closure of the orthant minus P, and it is star-shaped, so
// p belongs to it iff (1 - eps) p lies outside P for small eps. eps = 1e-6 is
// below every breakpoint spacing for the small inputs used in tests.
inline bool in_region_2d(const std::vector<std::vector<long>>& gens, const mpq_class& x, const mpq_class& y) {
  const mpq_class shrink(999999, 1000000);
  return !in_polyhedron_2d(gens, x * shrink, y * shrink);
}

}  // namespace oracle
