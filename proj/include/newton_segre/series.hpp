#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "newton_segre/rational.hpp"

namespace nsegre {

// Multivariate polynomial in X1..Xn over the rationals, truncated above a
// total degree bound. Zero coefficients are never stored.
class TruncatedSeries {
 public:
  using Monomial = std::vector<int>;
  using Terms = std::map<Monomial, Rational>;

  TruncatedSeries(std::size_t variables, int degree);

  static TruncatedSeries constant(std::size_t variables, int degree, const Rational& value);
  static TruncatedSeries monomial(std::size_t variables, int degree, const Monomial& exponents,
                                  const Rational& coefficient = 1);
  // c + sum_i coefficients[i] * X_i
  static TruncatedSeries affine(std::size_t variables, int degree, const Rational& c,
                                std::span<const Rational> coefficients);

  std::size_t variables() const noexcept { return variables_; }
  int degree() const noexcept { return degree_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Rational coefficient(const Monomial& exponents) const;
  Rational constant_term() const;
  void add_term(const Monomial& exponents, const Rational& coefficient);

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(const Rational& scalar);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

  // 1/s as a geometric series. The constant term must be nonzero
  // (InvalidArgument otherwise).
  TruncatedSeries inverse() const;

  // Substitute X_i -> H for all i: coefficients of H^0..H^degree.
  std::vector<Rational> collapse() const;

  Rational evaluate(std::span<const Rational> x) const;
  double evaluate(std::span<const double> x) const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  void check_compatible(const TruncatedSeries& other) const;

  std::size_t variables_;
  int degree_;
  Terms terms_;
};

int total_degree(const TruncatedSeries::Monomial& exponents);

}  // namespace nsegre
