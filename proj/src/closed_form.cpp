#include "isc/closed_form.hpp"

#include <span>

#include "isc/closed_form_tables.hpp"
#include "isc/errors.hpp"

namespace isc {

namespace {

// Evaluate an integer coefficient table at (p, q, m, n) with exact
// arithmetic; exponents never exceed 5.
ExactInt eval_poly(std::span<const PolyTerm> terms, const ISCParams& params) {
    constexpr int kMaxExponent = 5;
    ExactInt powers[4][kMaxExponent + 1];
    const long long values[4] = {params.p, params.q, params.m, params.n};
    for (int v = 0; v < 4; ++v) {
        powers[v][0] = 1;
        for (int e = 1; e <= kMaxExponent; ++e) {
            powers[v][e] = powers[v][e - 1] * exact_int(values[v]);
        }
    }
    ExactInt total = 0;
    ExactInt term;
    for (const PolyTerm& t : terms) {
        term = exact_int(t.coeff);
        term *= powers[0][t.ep];
        term *= powers[1][t.eq];
        term *= powers[2][t.em];
        term *= powers[3][t.en];
        total += term;
    }
    return total;
}

ExactInt case_numerator(const ISCParams& params, CaseKind kind) {
    switch (kind) {
        case CaseKind::case1: return eval_poly(kWienerCase1Num, params);
        case CaseKind::case2: return eval_poly(kWienerCase2Num, params);
        case CaseKind::case3:
        default:              return eval_poly(kWienerCase3Num, params);
    }
}

long long wiener_case_denominator(CaseKind kind) {
    switch (kind) {
        case CaseKind::case1: return kWienerCase1Den;
        case CaseKind::case2: return kWienerCase2Den;
        case CaseKind::case3:
        default:              return kWienerCase3Den;
    }
}

// mu denominator scale c per case, chosen so that the Wiener numerator over
// c * D * (D - 4) equals 2W / (N(N-1)).
long long mu_case_scale(CaseKind kind) {
    switch (kind) {
        case CaseKind::case1: return 30;
        case CaseKind::case2: return 15;
        case CaseKind::case3:
        default:              return 60;
    }
}

}  // namespace

ExactInt wiener_closed(const ISCParams& params) {
    const CaseKind kind = classify_case(params);
    return exact_div(case_numerator(params, kind),
                     exact_int(wiener_case_denominator(kind)));
}

ExactRational mu_closed(const ISCParams& params) {
    const CaseKind kind = classify_case(params);
    const ExactInt p = exact_int(params.p);
    const ExactInt q = exact_int(params.q);
    const ExactInt m = exact_int(params.m);
    const ExactInt n = exact_int(params.n);
    const ExactInt d = 8 * m + 4 * n + 4 * m * n + 2 * n * n - p * p - q * q;
    return make_rational(case_numerator(params, kind),
                         exact_int(mu_case_scale(kind)) * d * (d - 4));
}

ExactInt wiener_family(const Family& family) {
    const ISCParams params = special_family_params(family);
    struct Visitor {
        const ISCParams& params;
        ExactInt operator()(const Hexagonal&) const {
            return exact_div(eval_poly(kWienerHexNum, params),
                             exact_int(kWienerHexDen));
        }
        ExactInt operator()(const Trapezium&) const {
            return exact_div(eval_poly(kWienerTrapNum, params),
                             exact_int(kWienerTrapDen));
        }
        ExactInt operator()(const Bitrapezium&) const {
            return exact_div(eval_poly(kWienerBitrapNum, params),
                             exact_int(kWienerBitrapDen));
        }
    };
    return std::visit(Visitor{params}, family);
}

ExactRational mu_family(const Family& family) {
    const ISCParams params = special_family_params(family);
    const ExactInt p = exact_int(params.p);
    const ExactInt q = exact_int(params.q);
    const ExactInt n = exact_int(params.n);
    struct Visitor {
        const ISCParams& params;
        const ExactInt& p;
        const ExactInt& q;
        const ExactInt& n;
        ExactRational operator()(const Hexagonal&) const {
            return make_rational(eval_poly(kMuHexNum, params),
                                 eval_poly(kMuHexDen, params));
        }
        ExactRational operator()(const Trapezium&) const {
            // Numerator shared with the Wiener form; base + 8 = 4N.
            const ExactInt base = n * n + 8 * n - p * p;
            return make_rational(eval_poly(kWienerTrapNum, params),
                                 30 * (base + 4) * (base + 8));
        }
        ExactRational operator()(const Bitrapezium&) const {
            const ExactInt base = 2 * n * n + 8 * n - p * p - q * q;
            return make_rational(eval_poly(kWienerBitrapNum, params),
                                 30 * (base + 4) * (base + 8));
        }
    };
    return std::visit(Visitor{params, p, q, n}, family);
}

}  // namespace isc
