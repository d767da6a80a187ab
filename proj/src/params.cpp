#include "isc/params.hpp"

#include <string>
#include <utility>

#include "isc/errors.hpp"

namespace isc {

namespace {

void require_positive(const char* name, long long value) {
    if (value < 1) {
        throw NonPositiveParameter(std::string(name) + " must be >= 1 (got " +
                                   std::to_string(value) + ")");
    }
}

}  // namespace

ISCParams validate_params(long long p, long long q, long long m, long long n) {
    require_positive("p", p);
    require_positive("q", q);
    require_positive("m", m);
    require_positive("n", n);
    if (p > q) {
        std::swap(p, q);
    }
    if (q > n) {
        throw OrderViolation("max(p, q) = " + std::to_string(q) +
                             " exceeds n = " + std::to_string(n));
    }
    if ((n - p) % 2 != 0) {
        throw ParityViolation("n - p = " + std::to_string(n - p) +
                              " must be even");
    }
    if ((n - q) % 2 != 0) {
        throw ParityViolation("n - q = " + std::to_string(n - q) +
                              " must be even");
    }
    ISCParams params;
    params.p = p;
    params.q = q;
    params.m = m;
    params.n = n;
    params.t = (n - p) / 2;
    params.s = (n - q) / 2;
    return params;
}

CaseKind classify_case(const ISCParams& params) {
    if (params.p <= params.q - 2 * params.m + 2) {
        return CaseKind::case1;
    }
    if (params.p <= 2 * params.m - params.q - 2) {
        return CaseKind::case2;
    }
    return CaseKind::case3;
}

ExactInt vertex_count(const ISCParams& params) {
    const ExactInt p = exact_int(params.p);
    const ExactInt q = exact_int(params.q);
    const ExactInt m = exact_int(params.m);
    const ExactInt n = exact_int(params.n);
    return exact_div(2 * n * n - p * p - q * q + 4 * m * n + 8 * m + 4 * n, 4);
}

ExactInt edge_count(const ISCParams& params) {
    const ExactInt p = exact_int(params.p);
    const ExactInt q = exact_int(params.q);
    const ExactInt m = exact_int(params.m);
    const ExactInt n = exact_int(params.n);
    return exact_div(2 * n * n - p * p - q * q + 4 * m * n + 4 * m + p + q - 2, 2);
}

ISCParams special_family_params(const Family& family) {
    struct Visitor {
        ISCParams operator()(const Hexagonal& h) const {
            require_positive("p", h.p);
            return validate_params(h.p, h.p, 1, 3 * h.p - 2);
        }
        ISCParams operator()(const Trapezium& t) const {
            return validate_params(t.p, t.n, 1, t.n);
        }
        ISCParams operator()(const Bitrapezium& bt) const {
            return validate_params(bt.p, bt.q, 1, bt.n);
        }
    };
    return std::visit(Visitor{}, family);
}

}  // namespace isc
