#pragma once

#include "isc/exact.hpp"
#include "isc/params.hpp"

namespace isc {

// Wiener index by evaluating the per-case polynomial (integer coefficient
// tables generated by tools/gen_closed_form.py) and dividing by the case
// denominator; the division is exact for every valid tuple, and
// InexactDivision signals a table transcription bug.  O(1) big-integer
// work, independent of the graph size.
ExactInt wiener_closed(const ISCParams& params);

// Average distance as the case numerator over c * D * (D - 4) with
// D = 8m + 4n + 4mn + 2n^2 - p^2 - q^2 (= 4N), reduced to lowest terms;
// identical to 2 * wiener_closed / (N (N-1)).
ExactRational mu_closed(const ISCParams& params);

// Wiener index of a special family from its own reduced polynomial (not by
// substituting into the general form; the two routes cross-check in tests).
ExactInt wiener_family(const Family& family);

// Average distance of a special family from its reduced rational form.
ExactRational mu_family(const Family& family);

}  // namespace isc
