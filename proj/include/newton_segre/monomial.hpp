#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace nsegre {

using Exponent = std::int64_t;

// Exponents of x1..xn; all entries non-negative.
using ExponentVector = std::vector<Exponent>;

// True when a <= b componentwise.
bool divides(std::span<const Exponent> a, std::span<const Exponent> b);

// A proper monomial ideal given by its minimal generators.
//
// Construction removes dominated generators and rejects the unit ideal, so a
// MonomialIdeal value always satisfies: every generator is nonzero, no
// generator divides another, generators are sorted lexicographically
// (descending, so x1^2 comes before x1*x2).
class MonomialIdeal {
 public:
  // Throws ZeroGenerator, DimensionMismatch, InvalidArgument (empty input,
  // n == 0, negative exponent).
  static MonomialIdeal make(std::size_t n, std::vector<ExponentVector> raw_generators);

  std::size_t dimension() const noexcept { return n_; }
  const std::vector<ExponentVector>& generators() const noexcept { return generators_; }

  // Minimal number of variables meeting every generator's support.
  std::size_t height() const;

  // The same generators viewed in `n` >= dimension() variables.
  MonomialIdeal embed(std::size_t n) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  MonomialIdeal(std::size_t n, std::vector<ExponentVector> gens)
      : n_(n), generators_(std::move(gens)) {}

  std::size_t n_;
  std::vector<ExponentVector> generators_;
};

// Extension of I under x_i -> x_i^{r_i}. Every r_i must be >= 1.
// Throws InvalidArgument / DimensionMismatch on bad factors, Overflow if a
// scaled exponent leaves int64 range.
MonomialIdeal stretch(const MonomialIdeal& ideal, std::span<const Exponent> factors);

}  // namespace nsegre
