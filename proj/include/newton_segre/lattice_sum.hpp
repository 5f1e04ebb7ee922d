#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "newton_segre/monomial.hpp"
#include "newton_segre/rational.hpp"

namespace nsegre {

enum class ConditionMode { MembershipBased, LctBased };
enum class Arithmetic { Float64, ExactRational };

struct EstimatorConfig {
  Exponent m = 1;
  std::vector<Rational> x;  // X_1..X_n, all > 0
  ConditionMode mode = ConditionMode::MembershipBased;
  std::optional<Exponent> ray_cutoff;  // default 10 m^2
  Arithmetic arithmetic = Arithmetic::Float64;
  unsigned threads = 1;
  // When set, CutoffTooSmall is thrown if the truncation tail bound exceeds it.
  std::optional<double> tolerance;

  Exponent effective_cutoff() const;
};

// m n! X1..Xn / (m + a.X)^{n+1}
Rational kernel_term(std::span<const Exponent> a, Exponent m, std::span<const Rational> x);
double kernel_term(std::span<const Exponent> a, Exponent m, std::span<const double> x);

struct EstimateResult {
  double value = 0.0;
  std::optional<Rational> exact;  // set in ExactRational mode
  // Rigorous bound on the kernel mass dropped by truncating every coordinate
  // at the ray cutoff (0 when the scaled region fits inside the cutoff box).
  double tail_bound = 0.0;
  std::uint64_t points = 0;
  std::uint64_t fibers = 0;
};

// Sum of kernel_term over a in Z_{>0}^n with a/m in the Newton region and
// every a_i <= cutoff. Tends to the Segre class value at X as m grows.
EstimateResult estimate(const MonomialIdeal& ideal, const EstimatorConfig& config);

struct ConvergenceRow {
  Exponent m = 0;
  double estimate = 0.0;
  double exact = 0.0;
  double abs_error = 0.0;
  double seconds = 0.0;
};

// One row per m (m_list must be strictly increasing); `config.m` is ignored.
std::vector<ConvergenceRow> convergence_report(const MonomialIdeal& ideal,
                                               const EstimatorConfig& config,
                                               std::span<const Exponent> m_list);

// RFC 4180, header m,estimate,exact,abs_error,seconds, 17 significant digits.
std::string convergence_csv(std::span<const ConvergenceRow> rows);

struct ModeAgreement {
  std::uint64_t points_checked = 0;
  std::uint64_t interior_mismatches = 0;      // every a_i > 1
  std::uint64_t unit_coordinate_mismatches = 0;  // some a_i == 1
  std::uint64_t fibers_checked = 0;
  std::uint64_t fiber_mismatches = 0;
};

// Compares the membership-based and lct-based index sets: point by point on
// [1, window]^n, and by fiber extent along the last axis for every fiber the
// estimator visits at this cutoff.
ModeAgreement compare_modes(const MonomialIdeal& ideal, Exponent m, Exponent window,
                            Exponent ray_cutoff);

}  // namespace nsegre
