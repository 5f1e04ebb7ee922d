#include "newton_segre/polygamma.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "newton_segre/error.hpp"

namespace nsegre {

std::vector<Rational> bernoulli_even(std::size_t k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "Bernoulli table needs k >= 1");
  // sum_{j=0}^{n} C(n+1, j) B_j = 0 for n >= 1.
  const std::size_t top = 2 * k;
  std::vector<Rational> b(top + 1);
  b[0] = 1;
  for (std::size_t n = 1; n <= top; ++n) {
    Rational acc;
    Integer binom = 1;  // C(n+1, j), built incrementally in j
    for (std::size_t j = 0; j < n; ++j) {
      acc += Rational(binom) * b[j];
      binom = binom * static_cast<unsigned long>(n + 1 - j) / static_cast<unsigned long>(j + 1);
    }
    b[n] = -acc / static_cast<unsigned long>(n + 1);
  }
  std::vector<Rational> even;
  for (std::size_t i = 1; i <= k; ++i) even.push_back(b[2 * i]);
  return even;
}

namespace {

constexpr long double kShiftThreshold = 20.0L;
constexpr std::size_t kBernoulliTerms = 60;

// B_{2k} / (2k)! for k = 1..kBernoulliTerms.
const std::vector<long double>& scaled_bernoulli() {
  static const std::vector<long double> table = [] {
    std::vector<long double> out;
    auto b = bernoulli_even(kBernoulliTerms);
    Integer factorial = 1;
    for (std::size_t k = 1; k <= kBernoulliTerms; ++k) {
      factorial *= static_cast<unsigned long>((2 * k - 1) * (2 * k));
      out.push_back(to_long_double(b[k - 1] / Rational(factorial)));
    }
    return out;
  }();
  return table;
}

struct Evaluation {
  long double value = 0.0L;
  long double error = 0.0L;  // bound on truncation + accumulated rounding
};

Evaluation evaluate(int r, long double x) {
  if (r < 1) throw Error(ErrorCode::InvalidArgument, "polygamma order must be >= 1");
  if (!(x > 0.0L) || !std::isfinite(x))
    throw Error(ErrorCode::NonPositiveArgument, "polygamma argument must be positive and finite");

  long double factorial = 1.0L;
  for (int i = 2; i <= r; ++i) factorial *= i;
  const long double sign = (r % 2 == 1) ? 1.0L : -1.0L;  // (-1)^{r+1}

  long double y = x;
  int shifts = 0;
  while (y < kShiftThreshold) {
    y += 1.0L;
    ++shifts;
  }

  // Asymptotic series at y, summed smallest term first.
  const auto& bern = scaled_bernoulli();
  const long double inv_y = 1.0L / y, inv_y2 = inv_y * inv_y;
  const long double lead = std::pow(inv_y, static_cast<long double>(r));
  long double terms[kBernoulliTerms + 2];
  std::size_t count = 0;
  terms[count++] = lead / r;
  terms[count++] = lead * inv_y / 2.0L;
  long double gamma_ratio = 1.0L;  // Gamma(r + 2k) / Gamma(r + 1)
  long double power = lead;
  long double previous = std::numeric_limits<long double>::infinity();
  long double omitted = 0.0L;
  for (std::size_t k = 1; k <= kBernoulliTerms; ++k) {
    gamma_ratio *= (k == 1) ? static_cast<long double>(r + 1)
                            : static_cast<long double>(r + 2 * k - 2) * static_cast<long double>(r + 2 * k - 1);
    power *= inv_y2;
    const long double term = bern[k - 1] * gamma_ratio * power;
    if (std::fabs(term) >= previous) {  // smallest term reached
      omitted = std::fabs(term);
      break;
    }
    if (std::fabs(term) < std::numeric_limits<long double>::epsilon() * 1e-3L * terms[0]) {
      omitted = std::fabs(term);
      break;
    }
    terms[count++] = term;
    previous = std::fabs(term);
    omitted = previous;
  }
  long double asymptotic = 0.0L;
  for (std::size_t i = count; i-- > 0;) asymptotic += terms[i];

  long double value = asymptotic;
  for (int j = shifts - 1; j >= 0; --j) value += 1.0L / std::pow(x + j, static_cast<long double>(r + 1));
  value *= sign * factorial;

  Evaluation out;
  out.value = value;
  out.error = factorial * omitted +
              4.0L * (shifts + count) * std::numeric_limits<long double>::epsilon() * std::fabs(value);
  return out;
}

}  // namespace

long double polygamma_extended(int r, long double x) { return evaluate(r, x).value; }

double polygamma(int r, double x, std::optional<double> tolerance) {
  Evaluation e = evaluate(r, x);
  const double result = static_cast<double>(e.value);
  if (tolerance) {
    const double half_ulp =
        0.5 * (std::nextafter(std::fabs(result), std::numeric_limits<double>::infinity()) - std::fabs(result));
    const long double floor = e.error + half_ulp;
    if (!(*tolerance >= floor))
      throw Error(ErrorCode::PrecisionUnreachable,
                  "requested tolerance is below the attainable accuracy " + std::to_string(static_cast<double>(floor)));
  }
  return result;
}

double verify_power_identity(std::int64_t ell, double x, std::int64_t m) {
  if (ell < 1 || m < 1) throw Error(ErrorCode::InvalidArgument, "ell and m must be >= 1");
  if (!(x > 0.0)) throw Error(ErrorCode::NonPositiveParameter, "X must be positive");
  const long double ml = static_cast<long double>(m);
  return static_cast<double>(ml / x * polygamma_extended(1, ml * ell + ml / x));
}

namespace {

// Neumaier-compensated accumulator.
struct Accumulator {
  long double sum = 0.0L, carry = 0.0L;
  void add(long double v) {
    long double t = sum + v;
    carry += std::fabs(sum) >= std::fabs(v) ? (sum - t) + v : (v - t) + sum;
    sum = t;
  }
  long double value() const { return sum + carry; }
};

// sum_{a1 = first}^{last} Psi^{(2)}(1 + (m + a1 X1)/X2), plus the tail beyond
// `last` from Psi^{(2)}(y) ~ -y^{-2}. Returns (sum, tail).
std::pair<long double, long double> ray_sum(std::int64_t first, std::int64_t last, long double m, long double x1,
                                            long double x2) {
  Accumulator acc;
  for (std::int64_t a1 = last; a1 >= first; --a1) acc.add(polygamma_extended(2, 1.0L + (m + a1 * x1) / x2));
  const long double tail = -(x2 * x2) / (x1 * x1) * polygamma_extended(1, (last + 1) + (m + x2) / x1);
  return {acc.value(), tail};
}

void check_parameters(double x1, double x2, std::int64_t m) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "m must be >= 1");
  if (!(x1 > 0.0) || !(x2 > 0.0)) throw Error(ErrorCode::NonPositiveParameter, "X parameters must be positive");
}

void check_tail(long double prefactor, long double tail, std::optional<double> tolerance) {
  if (tolerance && std::fabs(prefactor * tail) > *tolerance / 10.0)
    throw Error(ErrorCode::CutoffTooSmall, "estimated tail exceeds tolerance/10; raise the tail cutoff");
}

}  // namespace

double verify_two_variable_identity(std::int64_t ell, double x1, double x2, std::int64_t m, std::int64_t tail_cutoff,
                                    std::optional<double> tolerance) {
  check_parameters(x1, x2, m);
  if (ell < 1) throw Error(ErrorCode::InvalidArgument, "ell must be >= 1");
  if (tail_cutoff < m * ell) throw Error(ErrorCode::CutoffTooSmall, "tail cutoff must be at least m*ell");
  const long double ml = static_cast<long double>(m);
  const long double prefactor = ml * x1 / (static_cast<long double>(x2) * x2);
  auto [sum, tail] = ray_sum(m * ell, tail_cutoff, ml, x1, x2);
  check_tail(prefactor, tail, tolerance);
  return static_cast<double>(1.0L + prefactor * (sum + tail));
}

double verify_diagonal_identity(std::int64_t ell1, std::int64_t ell2, double x1, double x2, std::int64_t m,
                                std::int64_t tail_cutoff, std::optional<double> tolerance) {
  check_parameters(x1, x2, m);
  if (ell1 < 1 || ell2 < 1) throw Error(ErrorCode::InvalidArgument, "exponents must be >= 1");
  if (tail_cutoff < m * ell1) throw Error(ErrorCode::CutoffTooSmall, "tail cutoff must be at least m*ell1");
  const long double ml = static_cast<long double>(m);
  const long double prefactor = ml * x1 / (static_cast<long double>(x2) * x2);

  Accumulator finite;
  for (std::int64_t a1 = m * ell1 - 1; a1 >= 1; --a1) {
    const std::int64_t floor_term = a1 * ell2 / ell1;
    finite.add(polygamma_extended(2, static_cast<long double>(m * ell2 - floor_term) + (ml + a1 * x1) / x2));
  }
  auto [sum, tail] = ray_sum(m * ell1, tail_cutoff, ml, x1, x2);
  check_tail(prefactor, tail, tolerance);
  return static_cast<double>(1.0L + prefactor * (finite.value() + sum + tail));
}

}  // namespace nsegre
