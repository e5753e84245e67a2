#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace splitring {

// Exact rational arithmetic. GMP keeps values canonical: lowest terms,
// positive denominator, zero stored as 0/1. Everything downstream relies on
// that canonical form when printing and comparing.
using Rational = mpq_class;

// Accepts the grammar  ["-"] digits ["/" digits]  and nothing else.
Rational rational_from_text(std::string_view text);

// Prints "n" or "n/d" with d > 1, minus sign on the numerator.
std::string rational_to_text(const Rational& value);

// exponent >= 0
Rational rational_pow(const Rational& base, int exponent);

}  // namespace splitring
