#include "isc/exact.hpp"

#include <stdexcept>

#include "isc/errors.hpp"

namespace isc {

ExactInt exact_div(const ExactInt& a, const ExactInt& b) {
    if (b == 0) {
        throw ZeroDenominator("exact_div by zero (dividend " + a.get_str() + ")");
    }
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) {
        throw InexactDivision(a.get_str() + " is not divisible by " + b.get_str());
    }
    ExactInt quotient;
    mpz_divexact(quotient.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return quotient;
}

ExactRational make_rational(const ExactInt& num, const ExactInt& den) {
    if (den == 0) {
        throw ZeroDenominator("rational with denominator zero (numerator " +
                              num.get_str() + ")");
    }
    ExactRational value(num, den);
    value.canonicalize();
    return value;
}

std::string rational_string(const ExactRational& value) {
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

namespace {

ExactInt pow10(long exp) {
    ExactInt result;
    mpz_ui_pow_ui(result.get_mpz_t(), 10, static_cast<unsigned long>(exp));
    return result;
}

// num/den >= 10^e, with num, den > 0?
bool at_least_pow10(const ExactInt& num, const ExactInt& den, long e) {
    if (e >= 0) {
        return num >= den * pow10(e);
    }
    return num * pow10(-e) >= den;
}

}  // namespace

std::string to_decimal(const ExactRational& value, int digits) {
    if (digits < 1) {
        throw std::invalid_argument("to_decimal needs at least 1 digit");
    }
    if (value == 0) {
        return "0";
    }
    ExactInt num = abs(value.get_num());
    ExactInt den = value.get_den();

    // Exponent e with 10^e <= num/den < 10^(e+1); the digit-count estimate
    // is within one of the truth, so at most two comparisons correct it.
    long e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 10)) -
             static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10));
    while (!at_least_pow10(num, den, e)) {
        e -= 1;
    }
    while (at_least_pow10(num, den, e + 1)) {
        e += 1;
    }

    // Round half away from zero at `digits` significant digits: the last
    // kept digit has place value 10^(e - digits + 1).
    long shift = digits - 1 - e;
    ExactInt scaled_den = den;
    ExactInt scaled_num = num;
    if (shift >= 0) {
        scaled_num *= pow10(shift);
    } else {
        scaled_den *= pow10(-shift);
    }
    ExactInt rounded = (2 * scaled_num + scaled_den) / (2 * scaled_den);

    // rounded has `digits` digits, or digits+1 after a carry (9.99 -> 10.0);
    // either way placing the point `shift` places from the right is correct.
    std::string body = rounded.get_str();
    std::string text;
    if (shift <= 0) {
        text = body + std::string(static_cast<size_t>(-shift), '0');
    } else if (static_cast<long>(body.size()) > shift) {
        text = body.substr(0, body.size() - static_cast<size_t>(shift)) + "." +
               body.substr(body.size() - static_cast<size_t>(shift));
    } else {
        text = "0." + std::string(static_cast<size_t>(shift) - body.size(), '0') + body;
    }
    if (text.find('.') != std::string::npos) {
        size_t last = text.find_last_not_of('0');
        if (text[last] == '.') {
            last -= 1;
        }
        text.erase(last + 1);
    }
    return (value < 0 ? "-" : "") + text;
}

}  // namespace isc
