#include "newton_segre/series.hpp"

#include <cmath>
#include <numeric>

#include "newton_segre/error.hpp"

namespace nsegre {

int total_degree(const TruncatedSeries::Monomial& exponents) {
  return std::accumulate(exponents.begin(), exponents.end(), 0);
}

TruncatedSeries::TruncatedSeries(std::size_t variables, int degree) : variables_(variables), degree_(degree) {
  if (degree < 0) throw Error(ErrorCode::InvalidArgument, "truncation degree must be >= 0");
}

TruncatedSeries TruncatedSeries::constant(std::size_t variables, int degree, const Rational& value) {
  TruncatedSeries s(variables, degree);
  s.add_term(Monomial(variables, 0), value);
  return s;
}

TruncatedSeries TruncatedSeries::monomial(std::size_t variables, int degree, const Monomial& exponents,
                                          const Rational& coefficient) {
  TruncatedSeries s(variables, degree);
  s.add_term(exponents, coefficient);
  return s;
}

TruncatedSeries TruncatedSeries::affine(std::size_t variables, int degree, const Rational& c,
                                        std::span<const Rational> coefficients) {
  if (coefficients.size() != variables)
    throw Error(ErrorCode::DimensionMismatch, "affine form needs one coefficient per variable");
  TruncatedSeries s = constant(variables, degree, c);
  for (std::size_t i = 0; i < variables; ++i) {
    Monomial e(variables, 0);
    e[i] = 1;
    s.add_term(e, coefficients[i]);
  }
  return s;
}

Rational TruncatedSeries::coefficient(const Monomial& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational TruncatedSeries::constant_term() const { return coefficient(Monomial(variables_, 0)); }

void TruncatedSeries::add_term(const Monomial& exponents, const Rational& coefficient) {
  if (exponents.size() != variables_)
    throw Error(ErrorCode::DimensionMismatch, "monomial has the wrong number of variables");
  if (total_degree(exponents) > degree_ || sgn(coefficient) == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponents, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void TruncatedSeries::check_compatible(const TruncatedSeries& other) const {
  if (variables_ != other.variables_ || degree_ != other.degree_)
    throw Error(ErrorCode::DimensionMismatch, "series differ in variables or truncation degree");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& scalar) {
  if (sgn(scalar) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.check_compatible(b);
  TruncatedSeries out(a.variables_, a.degree_);
  TruncatedSeries::Monomial e(a.variables_);
  for (const auto& [ea, ca] : a.terms_) {
    const int da = total_degree(ea);
    for (const auto& [eb, cb] : b.terms_) {
      if (da + total_degree(eb) > a.degree_) continue;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

TruncatedSeries TruncatedSeries::inverse() const {
  const Rational c0 = constant_term();
  if (sgn(c0) == 0) throw Error(ErrorCode::InvalidArgument, "series with zero constant term is not invertible");
  // 1/(c0 + r) = (1/c0) sum_k (-r/c0)^k; r has no constant term, so degree
  // bounds the number of useful powers.
  TruncatedSeries ratio = *this;
  ratio.terms_.erase(Monomial(variables_, 0));
  ratio *= Rational(-1 / c0);
  TruncatedSeries sum = constant(variables_, degree_, Rational(1));
  TruncatedSeries power = sum;
  for (int k = 1; k <= degree_; ++k) {
    power = power * ratio;
    if (power.is_zero()) break;
    sum += power;
  }
  sum *= Rational(1 / c0);
  return sum;
}

std::vector<Rational> TruncatedSeries::collapse() const {
  std::vector<Rational> out(static_cast<std::size_t>(degree_) + 1);
  for (const auto& [e, c] : terms_) out[static_cast<std::size_t>(total_degree(e))] += c;
  return out;
}

Rational TruncatedSeries::evaluate(std::span<const Rational> x) const {
  if (x.size() != variables_) throw Error(ErrorCode::DimensionMismatch, "wrong number of values");
  Rational total;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < variables_; ++i)
      for (int k = 0; k < e[i]; ++k) term *= x[i];
    total += term;
  }
  return total;
}

double TruncatedSeries::evaluate(std::span<const double> x) const {
  if (x.size() != variables_) throw Error(ErrorCode::DimensionMismatch, "wrong number of values");
  double total = 0.0;
  for (const auto& [e, c] : terms_) {
    double term = c.get_d();
    for (std::size_t i = 0; i < variables_; ++i) term *= std::pow(x[i], e[i]);
    total += term;
  }
  return total;
}

}  // namespace nsegre
