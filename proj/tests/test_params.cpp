#include <doctest.h>

#include "isc/errors.hpp"
#include "isc/params.hpp"

using isc::CaseKind;
using isc::ISCParams;

TEST_CASE("validate_params derives the wedge heights") {
    const ISCParams unit = isc::validate_params(1, 1, 1, 1);
    CHECK(unit.t == 0);
    CHECK(unit.s == 0);
    CHECK(isc::vertex_count(unit) == 4);
    CHECK(isc::edge_count(unit) == 4);

    const ISCParams big = isc::validate_params(4, 6, 6, 10);
    CHECK(big.t == 3);
    CHECK(big.s == 2);
    CHECK(isc::vertex_count(big) == 119);
    CHECK(isc::edge_count(big) == 210);
}

TEST_CASE("validate_params swaps p > q to the mirror tuple") {
    const ISCParams swapped = isc::validate_params(3, 1, 2, 5);
    CHECK(swapped.p == 1);
    CHECK(swapped.q == 3);
    CHECK(swapped.t == 2);  // (n - p) / 2 after the swap
    CHECK(swapped.s == 1);
}

TEST_CASE("validate_params rejects out-of-domain tuples") {
    CHECK_THROWS_AS(isc::validate_params(0, 1, 1, 1), isc::NonPositiveParameter);
    CHECK_THROWS_AS(isc::validate_params(1, 1, 0, 1), isc::NonPositiveParameter);
    CHECK_THROWS_AS(isc::validate_params(1, 1, 1, -3), isc::NonPositiveParameter);
    CHECK_THROWS_AS(isc::validate_params(1, 5, 1, 3), isc::OrderViolation);
    // After normalization p=1, q=5: q > n must be caught even though the
    // violating value arrived in the p slot.
    CHECK_THROWS_AS(isc::validate_params(5, 1, 1, 3), isc::OrderViolation);
    CHECK_THROWS_AS(isc::validate_params(1, 2, 1, 4), isc::ParityViolation);
    CHECK_THROWS_AS(isc::validate_params(2, 2, 1, 3), isc::ParityViolation);
}

TEST_CASE("classify_case follows the fixed precedence") {
    // p <= q - 2m + 2 wins first.
    CHECK(isc::classify_case(isc::validate_params(1, 1, 1, 1)) == CaseKind::case1);
    CHECK(isc::classify_case(isc::validate_params(1, 3, 2, 5)) == CaseKind::case1);
    // Then p <= 2m - q - 2.
    CHECK(isc::classify_case(isc::validate_params(1, 1, 3, 3)) == CaseKind::case2);
    CHECK(isc::classify_case(isc::validate_params(4, 6, 6, 10)) == CaseKind::case2);
    // Everything else.
    CHECK(isc::classify_case(isc::validate_params(2, 2, 2, 4)) == CaseKind::case3);
    CHECK(isc::classify_case(isc::validate_params(3, 5, 4, 7)) == CaseKind::case3);

    // Boundary: p = q - 2m + 2 exactly is still case 1.
    const ISCParams boundary = isc::validate_params(2, 4, 2, 6);
    CHECK(boundary.p == 4 - 2 * 2 + 2);
    CHECK(isc::classify_case(boundary) == CaseKind::case1);
    // Boundary: p = 2m - q - 2 exactly is case 2 (case 1 already failed).
    const ISCParams boundary2 = isc::validate_params(2, 2, 3, 4);
    CHECK(boundary2.p == 2 * 3 - 2 - 2);
    CHECK(isc::classify_case(boundary2) == CaseKind::case2);
}

TEST_CASE("special families substitute into the general tuple") {
    const ISCParams hex = isc::special_family_params(isc::Hexagonal{2});
    CHECK(hex.p == 2);
    CHECK(hex.q == 2);
    CHECK(hex.m == 1);
    CHECK(hex.n == 4);
    // H(p) has 4p^2 vertices.
    for (long long p = 1; p <= 20; ++p) {
        const ISCParams params = isc::special_family_params(isc::Hexagonal{p});
        CHECK(isc::vertex_count(params) == isc::exact_int(4 * p * p));
    }
    CHECK_THROWS_AS(isc::special_family_params(isc::Hexagonal{0}),
                    isc::NonPositiveParameter);

    const ISCParams trap = isc::special_family_params(isc::Trapezium{4, 2});
    CHECK(trap.p == 2);
    CHECK(trap.q == 4);
    CHECK(trap.m == 1);
    CHECK(trap.n == 4);
    CHECK(trap.s == 0);
    CHECK_THROWS_AS(isc::special_family_params(isc::Trapezium{4, 1}),
                    isc::ParityViolation);

    const ISCParams bitrap = isc::special_family_params(isc::Bitrapezium{4, 2, 2});
    CHECK(bitrap.p == 2);
    CHECK(bitrap.q == 2);
    CHECK(bitrap.m == 1);
    CHECK(bitrap.n == 4);
    CHECK(isc::vertex_count(bitrap) == 16);
    CHECK_THROWS_AS(isc::special_family_params(isc::Bitrapezium{4, 2, 6}),
                    isc::OrderViolation);
}
