#include <doctest.h>

#include <stdexcept>

#include "isc/errors.hpp"
#include "isc/exact.hpp"

using isc::ExactInt;
using isc::ExactRational;

TEST_CASE("exact_div divides exactly or throws") {
    CHECK(isc::exact_div(ExactInt(12), ExactInt(4)) == 3);
    CHECK(isc::exact_div(ExactInt(-6), ExactInt(3)) == -2);
    CHECK(isc::exact_div(ExactInt(7), ExactInt(-7)) == -1);
    CHECK(isc::exact_div(ExactInt(0), ExactInt(5)) == 0);
    CHECK_THROWS_AS(isc::exact_div(ExactInt(5), ExactInt(2)),
                    isc::InexactDivision);
    CHECK_THROWS_AS(isc::exact_div(ExactInt(5), ExactInt(0)),
                    isc::ZeroDenominator);
}

TEST_CASE("make_rational reduces and normalizes the sign") {
    const ExactRational half = isc::make_rational(2, 4);
    CHECK(half.get_num() == 1);
    CHECK(half.get_den() == 2);

    const ExactRational negative = isc::make_rational(1, -2);
    CHECK(negative.get_num() == -1);
    CHECK(negative.get_den() == 2);

    CHECK(isc::rational_string(isc::make_rational(636, 240)) == "53/20");
    CHECK_THROWS_AS(isc::make_rational(1, 0), isc::ZeroDenominator);
}

TEST_CASE("to_decimal renders significant digits with trimming") {
    CHECK(isc::to_decimal(isc::make_rational(4, 3)) == "1.33333333333");
    CHECK(isc::to_decimal(isc::make_rational(5, 3)) == "1.66666666667");
    CHECK(isc::to_decimal(isc::make_rational(53, 20)) == "2.65");
    CHECK(isc::to_decimal(isc::make_rational(8, 1)) == "8");
    CHECK(isc::to_decimal(isc::make_rational(0, 1)) == "0");
    CHECK(isc::to_decimal(isc::make_rational(-4, 3)) == "-1.33333333333");
}

TEST_CASE("to_decimal respects the digit count and rounds half up") {
    CHECK(isc::to_decimal(isc::make_rational(1, 3), 3) == "0.333");
    CHECK(isc::to_decimal(isc::make_rational(2, 3), 3) == "0.667");
    CHECK(isc::to_decimal(isc::make_rational(15, 100), 1) == "0.2");
    CHECK(isc::to_decimal(isc::make_rational(999, 1000), 2) == "1");
    CHECK(isc::to_decimal(isc::make_rational(9999, 100), 3) == "100");
    CHECK(isc::to_decimal(isc::make_rational(12345, 1), 3) == "12300");
    CHECK(isc::to_decimal(isc::make_rational(1, 800), 2) == "0.0013");
    CHECK_THROWS_AS(isc::to_decimal(isc::make_rational(1, 3), 0),
                    std::invalid_argument);
}
