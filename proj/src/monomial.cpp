#include "newton_segre/monomial.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "newton_segre/error.hpp"

namespace nsegre {

bool divides(std::span<const Exponent> a, std::span<const Exponent> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

MonomialIdeal MonomialIdeal::make(std::size_t n, std::vector<ExponentVector> raw) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "an ideal needs at least one variable");
  if (raw.empty()) throw Error(ErrorCode::InvalidArgument, "an ideal needs at least one generator");
  for (const auto& g : raw) {
    if (g.size() != n)
      throw Error(ErrorCode::DimensionMismatch,
                  "generator has " + std::to_string(g.size()) + " exponents, expected " + std::to_string(n));
    if (std::any_of(g.begin(), g.end(), [](Exponent e) { return e < 0; }))
      throw Error(ErrorCode::InvalidArgument, "negative exponent");
    if (std::all_of(g.begin(), g.end(), [](Exponent e) { return e == 0; }))
      throw Error(ErrorCode::ZeroGenerator, "the constant monomial 1 generates the unit ideal");
  }

  std::sort(raw.begin(), raw.end(), std::greater<>());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());

  std::vector<ExponentVector> minimal;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < raw.size() && !dominated; ++j)
      dominated = j != i && divides(raw[j], raw[i]);
    if (!dominated) minimal.push_back(raw[i]);
  }
  return MonomialIdeal(n, std::move(minimal));
}

std::size_t MonomialIdeal::height() const {
  // Exhaustive over variable subsets; n is small.
  std::size_t best = n_;
  const std::size_t limit = std::size_t{1} << n_;
  for (std::size_t mask = 1; mask < limit; ++mask) {
    auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (size >= best) continue;
    bool covers = std::all_of(generators_.begin(), generators_.end(), [&](const ExponentVector& g) {
      for (std::size_t i = 0; i < n_; ++i)
        if ((mask >> i & 1U) && g[i] > 0) return true;
      return false;
    });
    if (covers) best = size;
  }
  return best;
}

MonomialIdeal MonomialIdeal::embed(std::size_t n) const {
  if (n < n_)
    throw Error(ErrorCode::DimensionMismatch, "cannot embed into fewer variables");
  std::vector<ExponentVector> gens = generators_;
  for (auto& g : gens) g.resize(n, 0);
  return make(n, std::move(gens));
}

MonomialIdeal stretch(const MonomialIdeal& ideal, std::span<const Exponent> factors) {
  const std::size_t n = ideal.dimension();
  if (factors.size() != n)
    throw Error(ErrorCode::DimensionMismatch, "stretch needs one factor per variable");
  if (std::any_of(factors.begin(), factors.end(), [](Exponent r) { return r < 1; }))
    throw Error(ErrorCode::InvalidArgument, "stretch factors must be >= 1");

  std::vector<ExponentVector> gens = ideal.generators();
  for (auto& g : gens)
    for (std::size_t i = 0; i < n; ++i)
      if (__builtin_mul_overflow(g[i], factors[i], &g[i]))
        throw Error(ErrorCode::Overflow, "stretched exponent exceeds 64-bit range");
  return MonomialIdeal::make(n, std::move(gens));
}

}  // namespace nsegre
