#pragma once

#include <variant>

#include "isc/exact.hpp"

namespace isc {

// Validated parameter tuple of an irregular square-cell configuration
// ISC(p,q,m,n): a convex lattice region made of a lower wedge with base
// edge-length p, a slanted band of m rows and length n, and an upper wedge
// with top edge-length q.  t and s are the wedge heights in rows.
struct ISCParams {
    long long p = 0;
    long long q = 0;
    long long m = 0;
    long long n = 0;
    long long t = 0;  // (n - p) / 2
    long long s = 0;  // (n - q) / 2
};

// Which of the three closed-form regimes the parameters fall into.  The
// regimes overlap as raw inequalities; classification tests them in this
// fixed order, so every tuple lands in exactly one case.
enum class CaseKind {
    case1 = 1,  // p <= q - 2m + 2
    case2 = 2,  // p <= 2m - q - 2 (and not case 1)
    case3 = 3,  // neither
};

// Checks positivity, order (max(p,q) <= n) and parity ((n-p), (n-q) even),
// and derives t and s.  Inputs with p > q are normalized by swapping: the
// two graphs are mirror images, so every distance invariant is unchanged.
// Throws NonPositiveParameter, OrderViolation or ParityViolation.
ISCParams validate_params(long long p, long long q, long long m, long long n);

CaseKind classify_case(const ISCParams& params);

// Number of vertices: (2n^2 - p^2 - q^2 + 4mn + 8m + 4n) / 4.
ExactInt vertex_count(const ISCParams& params);

// Number of edges: (2n^2 - p^2 - q^2 + 4mn + 4m + p + q - 2) / 2.
ExactInt edge_count(const ISCParams& params);

// Special families, each a substitution instance of the general tuple.
struct Hexagonal {
    long long p;
};
struct Trapezium {
    long long n;
    long long p;
};
struct Bitrapezium {
    long long n;
    long long p;
    long long q;
};
using Family = std::variant<Hexagonal, Trapezium, Bitrapezium>;

// H(p) = ISC(p,p,1,3p-2), T(n,p) = ISC(p,n,1,n), BT(n,p,q) = ISC(p,q,1,n).
// Validation errors of the substituted tuple propagate.
ISCParams special_family_params(const Family& family);

}  // namespace isc
