#pragma once

#include <gmpxx.h>

#include <string>

namespace isc {

// Arbitrary-precision integer and rational.  Wiener indices grow like n^5,
// so all index arithmetic is exact; doubles never touch a result.
using ExactInt = mpz_class;
using ExactRational = mpq_class;

inline ExactInt exact_int(long long value) {
    return ExactInt(static_cast<long>(value));
}

// Quotient a / b when b divides a exactly; throws InexactDivision otherwise.
ExactInt exact_div(const ExactInt& a, const ExactInt& b);

// num / den in lowest terms with a positive denominator; throws
// ZeroDenominator when den == 0.
ExactRational make_rational(const ExactInt& num, const ExactInt& den);

// "num/den" in lowest terms, e.g. "4/3".
std::string rational_string(const ExactRational& value);

// Decimal rendering of a rational, correctly rounded (half away from zero)
// to `digits` significant digits, with trailing zeros in the fractional
// part trimmed: 53/20 -> "2.65", 4/3 -> "1.33333333333" at 12 digits.
std::string to_decimal(const ExactRational& value, int digits = 12);

}  // namespace isc
