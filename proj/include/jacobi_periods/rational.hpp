#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace jacobi {

using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(std::int64_t num, std::int64_t den = 1);

// "p" or "p/q", the same text mpq_class prints.
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);

// Representative of q mod 1 in [0, 1).
Rational frac(const Rational& q);
Integer floor(const Rational& q);
bool is_integer(const Rational& q);
std::int64_t to_int64(const Rational& q);
std::int64_t to_int64(const Integer& z);
double to_double(const Rational& q);

}  // namespace jacobi
