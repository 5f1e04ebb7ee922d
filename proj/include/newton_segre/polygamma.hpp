#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "newton_segre/rational.hpp"

namespace nsegre {

// B_2, B_4, ..., B_{2k}, exact. Throws InvalidArgument for k < 1.
std::vector<Rational> bernoulli_even(std::size_t k);

// Psi^{(r)}(x) for r >= 1, x > 0. Shifts x up to 20 with the recurrence and
// sums the asymptotic Bernoulli series to its smallest term. Evaluation runs
// in extended precision and rounds once.
//
// With `tolerance` set, PrecisionUnreachable is thrown if the requested
// absolute accuracy is below what the evaluation can guarantee.
// Throws NonPositiveArgument for x <= 0 and InvalidArgument for r < 1.
double polygamma(int r, double x, std::optional<double> tolerance = {});
long double polygamma_extended(int r, long double x);

// (m/X) Psi^{(1)}(m l + m/X); tends to 1/(1 + l X).
double verify_power_identity(std::int64_t ell, double x, std::int64_t m);

// 1 - (-m X1 / X2^2) sum_{a1 >= m l} Psi^{(2)}((m + a1 X1 + X2)/X2), the a1-sum
// cut at tail_cutoff and completed with the Psi^{(2)}(y) ~ -y^{-2} tail.
// Tends to l X1 / (1 + l X1). Throws CutoffTooSmall if tail_cutoff < m l, or
// if the estimated tail exceeds tolerance/10.
double verify_two_variable_identity(std::int64_t ell, double x1, double x2, std::int64_t m,
                                    std::int64_t tail_cutoff,
                                    std::optional<double> tolerance = {});

// Left side of the diagonal-ideal identity at finite m; tends to
// l1 l2 X1 X2 / ((1 + l1 X1)(1 + l2 X2)). Same cutoff rules as above, with
// tail_cutoff >= m l1.
double verify_diagonal_identity(std::int64_t ell1, std::int64_t ell2, double x1, double x2,
                                std::int64_t m, std::int64_t tail_cutoff,
                                std::optional<double> tolerance = {});

}  // namespace nsegre
