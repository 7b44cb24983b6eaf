#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace trip {

using Integer = mpz_class;
using Rational = mpq_class;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero") {}
};

// Accepts "3", "-3/7", "0.125".
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Integer floor_div(const Rational& q);
Integer ceil_div(const Rational& q);

inline int sgn(const Rational& q) { return ::sgn(q); }
inline int sgn(const Integer& z) { return ::sgn(z); }

Rational abs_value(const Rational& q);

// Decimal rendering with the given number of fractional digits, truncated toward zero.
std::string to_decimal(const Rational& q, int digits);

}  // namespace trip
