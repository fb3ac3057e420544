#pragma once

#include <gmpxx.h>

#include <string>

namespace markovcat {

/// Exact rational arithmetic. All categorical computations in the library
/// use mpq_class; floating point is confined to the Monte Carlo estimators.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "num/den" or "num" into a canonical rational.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(const std::string& text);

/// Formats canonically as "num/den", or "num" when the denominator is 1.
std::string format_rational(const Rational& q);

}  // namespace markovcat
