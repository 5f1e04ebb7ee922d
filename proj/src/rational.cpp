#include "newton_segre/rational.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "newton_segre/error.hpp"

namespace nsegre {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroGenerator: return "ZeroGenerator";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NegativeCoordinate: return "NegativeCoordinate";
    case ErrorCode::AmbientTooSmall: return "AmbientTooSmall";
    case ErrorCode::NonPositiveParameter: return "NonPositiveParameter";
    case ErrorCode::NonPositiveArgument: return "NonPositiveArgument";
    case ErrorCode::CutoffTooSmall: return "CutoffTooSmall";
    case ErrorCode::PrecisionUnreachable: return "PrecisionUnreachable";
    case ErrorCode::DegenerateFacet: return "DegenerateFacet";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "Unknown";
}

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

[[noreturn]] void bad_rational(std::string_view text) {
  throw ParseError(0, "invalid rational '" + std::string(text) + "'");
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) bad_rational(whole);
  Integer z(std::string(s), 10);
  return negative ? Integer(-z) : z;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) bad_rational(text);

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) bad_rational(text);
    Integer den(std::string(den_text), 10);
    if (den == 0) bad_rational(text);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  // Decimal with optional fraction and exponent.
  std::string_view mantissa = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    Integer ez = parse_integer(text.substr(e + 1), text);
    if (!ez.fits_slong_p() || abs(ez) > 10000) bad_rational(text);
    exponent = ez.get_si();
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa[0] == '-' || mantissa[0] == '+')) {
    negative = mantissa[0] == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  long fraction_digits = 0;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = mantissa.substr(0, dot);
    std::string_view frac_part = mantissa.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) bad_rational(text);
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)))
      bad_rational(text);
    digits = std::string(int_part) + std::string(frac_part);
    fraction_digits = static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(mantissa)) bad_rational(text);
    digits = std::string(mantissa);
  }
  Integer num(digits, 10);
  if (negative) num = -num;
  long scale = exponent - fraction_digits;
  Integer ten_power;
  mpz_ui_pow_ui(ten_power.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(scale)));
  Rational q = scale >= 0 ? Rational(num * ten_power) : Rational(num, ten_power);
  q.canonicalize();
  return q;
}

long double to_long_double(const Rational& q) {
  if (q == 0) return 0.0L;
  // Scale so the integer quotient carries 64 significant bits.
  Integer num = abs(q.get_num());
  const Integer& den = q.get_den();
  long shift = 64 - static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) +
               static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
  Integer scaled;
  if (shift >= 0) {
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(shift));
  } else {
    mpz_fdiv_q_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(-shift));
  }
  mpz_tdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  // scaled < 2^65 here.
  Integer high, low;
  mpz_fdiv_q_2exp(high.get_mpz_t(), scaled.get_mpz_t(), 32);
  mpz_fdiv_r_2exp(low.get_mpz_t(), scaled.get_mpz_t(), 32);
  long double hi = static_cast<long double>(mpz_get_ui(high.get_mpz_t()));
  long double lo = static_cast<long double>(mpz_get_ui(low.get_mpz_t()));
  long double value = std::ldexp(hi, 32) + lo;
  value = std::ldexp(value, static_cast<int>(-shift));
  return sgn(q) < 0 ? -value : value;
}

}  // namespace nsegre
