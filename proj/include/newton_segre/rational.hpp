#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace nsegre {

// Exact rational, always kept canonical (den > 0, gcd(|num|, den) = 1).
using Rational = mpq_class;
using Integer = mpz_class;

using RationalPoint = std::vector<Rational>;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  Rational q(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
  q.canonicalize();
  return q;
}

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

// Accepts "p", "p/q", and decimals such as "0.125" or "-2.5e-3". Decimals are
// converted exactly. Throws Error(ParseError) on anything else.
Rational parse_rational(std::string_view text);

// Nearest long double; mpq_class only offers a double conversion.
long double to_long_double(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }

}  // namespace nsegre
