// Generated by tools/gen_closed_form.py -- do not edit by hand.
//
// Integer coefficient tables for the closed-form Wiener index and
// average-distance evaluation.  Each polynomial is the symbolic sum
// of f * (N - f) over all edge-cut families of the canonical
// embedding; see the generator for the derivation and the BFS
// verification sweep.
#pragma once

namespace isc {

// One monomial: coeff * p^ep * q^eq * m^em * n^en.
struct PolyTerm {
    long long coeff;
    int ep, eq, em, en;
};

inline constexpr long long kWienerCase1Den = 960;
inline constexpr long long kWienerCase2Den = 480;
inline constexpr long long kWienerCase3Den = 1920;
inline constexpr long long kWienerHexDen = 15;
inline constexpr long long kWienerTrapDen = 960;
inline constexpr long long kWienerBitrapDen = 960;

inline constexpr PolyTerm kWienerCase1Num[] = {
    {4, 5, 0, 0, 0},
    {5, 4, 1, 0, 0},
    {-10, 4, 0, 1, 0},
    {-10, 4, 0, 0, 1},
    {-10, 4, 0, 0, 0},
    {-20, 3, 2, 0, 0},
    {80, 3, 0, 1, 1},
    {160, 3, 0, 1, 0},
    {40, 3, 0, 0, 2},
    {80, 3, 0, 0, 1},
    {-20, 3, 0, 0, 0},
    {-10, 2, 3, 0, 0},
    {60, 2, 2, 1, 0},
    {60, 2, 2, 0, 1},
    {60, 2, 2, 0, 0},
    {120, 2, 1, 2, 0},
    {-240, 2, 1, 1, 0},
    {80, 2, 1, 0, 0},
    {-80, 2, 0, 3, 0},
    {-240, 2, 0, 2, 1},
    {-240, 2, 0, 2, 0},
    {-240, 2, 0, 1, 2},
    {-480, 2, 0, 1, 1},
    {-120, 2, 0, 1, 0},
    {-80, 2, 0, 0, 3},
    {-240, 2, 0, 0, 2},
    {-120, 2, 0, 0, 1},
    {40, 2, 0, 0, 0},
    {20, 1, 2, 0, 0},
    {-80, 1, 0, 1, 1},
    {-160, 1, 0, 1, 0},
    {-40, 1, 0, 0, 2},
    {-80, 1, 0, 0, 1},
    {16, 1, 0, 0, 0},
    {5, 0, 5, 0, 0},
    {-10, 0, 4, 1, 0},
    {-10, 0, 4, 0, 1},
    {-10, 0, 4, 0, 0},
    {40, 0, 3, 2, 0},
    {80, 0, 3, 1, 1},
    {80, 0, 3, 1, 0},
    {40, 0, 3, 0, 2},
    {80, 0, 3, 0, 1},
    {-80, 0, 2, 3, 0},
    {-240, 0, 2, 2, 1},
    {-240, 0, 2, 2, 0},
    {-240, 0, 2, 1, 2},
    {-480, 0, 2, 1, 1},
    {-120, 0, 2, 1, 0},
    {-80, 0, 2, 0, 3},
    {-240, 0, 2, 0, 2},
    {-120, 0, 2, 0, 1},
    {40, 0, 2, 0, 0},
    {80, 0, 1, 4, 0},
    {-320, 0, 1, 3, 0},
    {240, 0, 1, 2, 0},
    {-80, 0, 1, 1, 1},
    {-40, 0, 1, 0, 2},
    {-80, 0, 1, 0, 1},
    {-80, 0, 1, 0, 0},
    {-32, 0, 0, 5, 0},
    {160, 0, 0, 4, 0},
    {320, 0, 0, 3, 2},
    {1280, 0, 0, 3, 1},
    {1120, 0, 0, 3, 0},
    {480, 0, 0, 2, 3},
    {1920, 0, 0, 2, 2},
    {1920, 0, 0, 2, 1},
    {-160, 0, 0, 2, 0},
    {280, 0, 0, 1, 4},
    {1280, 0, 0, 1, 3},
    {1680, 0, 0, 1, 2},
    {320, 0, 0, 1, 1},
    {-128, 0, 0, 1, 0},
    {56, 0, 0, 0, 5},
    {280, 0, 0, 0, 4},
    {400, 0, 0, 0, 3},
    {80, 0, 0, 0, 2},
    {-96, 0, 0, 0, 1},
};

inline constexpr PolyTerm kWienerCase2Num[] = {
    {2, 5, 0, 0, 0},
    {-5, 4, 0, 0, 1},
    {-10, 4, 0, 0, 0},
    {-10, 3, 2, 0, 0},
    {40, 3, 0, 1, 1},
    {80, 3, 0, 1, 0},
    {20, 3, 0, 0, 2},
    {40, 3, 0, 0, 1},
    {-10, 3, 0, 0, 0},
    {-10, 2, 3, 0, 0},
    {60, 2, 2, 1, 0},
    {30, 2, 2, 0, 1},
    {10, 2, 1, 0, 0},
    {-120, 2, 0, 2, 1},
    {-240, 2, 0, 2, 0},
    {-120, 2, 0, 1, 2},
    {-240, 2, 0, 1, 1},
    {-40, 2, 0, 0, 3},
    {-120, 2, 0, 0, 2},
    {-60, 2, 0, 0, 1},
    {40, 2, 0, 0, 0},
    {10, 1, 2, 0, 0},
    {-40, 1, 0, 1, 1},
    {-80, 1, 0, 1, 0},
    {-20, 1, 0, 0, 2},
    {-40, 1, 0, 0, 1},
    {8, 1, 0, 0, 0},
    {2, 0, 5, 0, 0},
    {-5, 0, 4, 0, 1},
    {-10, 0, 4, 0, 0},
    {40, 0, 3, 1, 1},
    {80, 0, 3, 1, 0},
    {20, 0, 3, 0, 2},
    {40, 0, 3, 0, 1},
    {-10, 0, 3, 0, 0},
    {-120, 0, 2, 2, 1},
    {-240, 0, 2, 2, 0},
    {-120, 0, 2, 1, 2},
    {-240, 0, 2, 1, 1},
    {-40, 0, 2, 0, 3},
    {-120, 0, 2, 0, 2},
    {-60, 0, 2, 0, 1},
    {40, 0, 2, 0, 0},
    {-40, 0, 1, 1, 1},
    {-80, 0, 1, 1, 0},
    {-20, 0, 1, 0, 2},
    {-40, 0, 1, 0, 1},
    {8, 0, 1, 0, 0},
    {160, 0, 0, 3, 2},
    {640, 0, 0, 3, 1},
    {640, 0, 0, 3, 0},
    {240, 0, 0, 2, 3},
    {960, 0, 0, 2, 2},
    {960, 0, 0, 2, 1},
    {140, 0, 0, 1, 4},
    {640, 0, 0, 1, 3},
    {840, 0, 0, 1, 2},
    {160, 0, 0, 1, 1},
    {-160, 0, 0, 1, 0},
    {28, 0, 0, 0, 5},
    {140, 0, 0, 0, 4},
    {200, 0, 0, 0, 3},
    {40, 0, 0, 0, 2},
    {-48, 0, 0, 0, 1},
};

inline constexpr PolyTerm kWienerCase3Num[] = {
    {9, 5, 0, 0, 0},
    {5, 4, 1, 0, 0},
    {-10, 4, 0, 1, 0},
    {-20, 4, 0, 0, 1},
    {-30, 4, 0, 0, 0},
    {-30, 3, 2, 0, 0},
    {-40, 3, 1, 1, 0},
    {40, 3, 1, 0, 0},
    {40, 3, 0, 2, 0},
    {160, 3, 0, 1, 1},
    {240, 3, 0, 1, 0},
    {80, 3, 0, 0, 2},
    {160, 3, 0, 0, 1},
    {-20, 3, 0, 0, 0},
    {-30, 2, 3, 0, 0},
    {180, 2, 2, 1, 0},
    {120, 2, 2, 0, 1},
    {60, 2, 2, 0, 0},
    {120, 2, 1, 2, 0},
    {-240, 2, 1, 1, 0},
    {100, 2, 1, 0, 0},
    {-80, 2, 0, 3, 0},
    {-480, 2, 0, 2, 1},
    {-720, 2, 0, 2, 0},
    {-480, 2, 0, 1, 2},
    {-960, 2, 0, 1, 1},
    {-120, 2, 0, 1, 0},
    {-160, 2, 0, 0, 3},
    {-480, 2, 0, 0, 2},
    {-240, 2, 0, 0, 1},
    {120, 2, 0, 0, 0},
    {5, 1, 4, 0, 0},
    {-40, 1, 3, 1, 0},
    {40, 1, 3, 0, 0},
    {120, 1, 2, 2, 0},
    {-240, 1, 2, 1, 0},
    {100, 1, 2, 0, 0},
    {-160, 1, 1, 3, 0},
    {480, 1, 1, 2, 0},
    {-240, 1, 1, 1, 0},
    {-80, 1, 1, 0, 0},
    {80, 1, 0, 4, 0},
    {-320, 1, 0, 3, 0},
    {240, 1, 0, 2, 0},
    {-160, 1, 0, 1, 1},
    {-160, 1, 0, 1, 0},
    {-80, 1, 0, 0, 2},
    {-160, 1, 0, 0, 1},
    {-64, 1, 0, 0, 0},
    {9, 0, 5, 0, 0},
    {-10, 0, 4, 1, 0},
    {-20, 0, 4, 0, 1},
    {-30, 0, 4, 0, 0},
    {40, 0, 3, 2, 0},
    {160, 0, 3, 1, 1},
    {240, 0, 3, 1, 0},
    {80, 0, 3, 0, 2},
    {160, 0, 3, 0, 1},
    {-20, 0, 3, 0, 0},
    {-80, 0, 2, 3, 0},
    {-480, 0, 2, 2, 1},
    {-720, 0, 2, 2, 0},
    {-480, 0, 2, 1, 2},
    {-960, 0, 2, 1, 1},
    {-120, 0, 2, 1, 0},
    {-160, 0, 2, 0, 3},
    {-480, 0, 2, 0, 2},
    {-240, 0, 2, 0, 1},
    {120, 0, 2, 0, 0},
    {80, 0, 1, 4, 0},
    {-320, 0, 1, 3, 0},
    {240, 0, 1, 2, 0},
    {-160, 0, 1, 1, 1},
    {-160, 0, 1, 1, 0},
    {-80, 0, 1, 0, 2},
    {-160, 0, 1, 0, 1},
    {-64, 0, 1, 0, 0},
    {-32, 0, 0, 5, 0},
    {160, 0, 0, 4, 0},
    {640, 0, 0, 3, 2},
    {2560, 0, 0, 3, 1},
    {2400, 0, 0, 3, 0},
    {960, 0, 0, 2, 3},
    {3840, 0, 0, 2, 2},
    {3840, 0, 0, 2, 1},
    {-160, 0, 0, 2, 0},
    {560, 0, 0, 1, 4},
    {2560, 0, 0, 1, 3},
    {3360, 0, 0, 1, 2},
    {640, 0, 0, 1, 1},
    {-448, 0, 0, 1, 0},
    {112, 0, 0, 0, 5},
    {560, 0, 0, 0, 4},
    {800, 0, 0, 0, 3},
    {160, 0, 0, 0, 2},
    {-192, 0, 0, 0, 1},
};

inline constexpr PolyTerm kWienerHexNum[] = {
    {158, 5, 0, 0, 0},
    {-35, 3, 0, 0, 0},
    {-3, 1, 0, 0, 0},
};

inline constexpr PolyTerm kWienerTrapNum[] = {
    {4, 5, 0, 0, 0},
    {-5, 4, 0, 0, 1},
    {-20, 4, 0, 0, 0},
    {20, 3, 0, 0, 2},
    {160, 3, 0, 0, 1},
    {140, 3, 0, 0, 0},
    {-30, 2, 0, 0, 3},
    {-360, 2, 0, 0, 2},
    {-880, 2, 0, 0, 1},
    {-400, 2, 0, 0, 0},
    {-20, 1, 0, 0, 2},
    {-160, 1, 0, 0, 1},
    {-144, 1, 0, 0, 0},
    {11, 0, 0, 0, 5},
    {220, 0, 0, 0, 4},
    {1400, 0, 0, 0, 3},
    {3440, 0, 0, 0, 2},
    {3344, 0, 0, 0, 1},
    {960, 0, 0, 0, 0},
};

inline constexpr PolyTerm kWienerBitrapNum[] = {
    {4, 5, 0, 0, 0},
    {5, 4, 1, 0, 0},
    {-10, 4, 0, 0, 1},
    {-20, 4, 0, 0, 0},
    {-20, 3, 2, 0, 0},
    {40, 3, 0, 0, 2},
    {160, 3, 0, 0, 1},
    {140, 3, 0, 0, 0},
    {-10, 2, 3, 0, 0},
    {60, 2, 2, 0, 1},
    {120, 2, 2, 0, 0},
    {-40, 2, 1, 0, 0},
    {-80, 2, 0, 0, 3},
    {-480, 2, 0, 0, 2},
    {-840, 2, 0, 0, 1},
    {-400, 2, 0, 0, 0},
    {20, 1, 2, 0, 0},
    {-40, 1, 0, 0, 2},
    {-160, 1, 0, 0, 1},
    {-144, 1, 0, 0, 0},
    {5, 0, 5, 0, 0},
    {-10, 0, 4, 0, 1},
    {-20, 0, 4, 0, 0},
    {40, 0, 3, 0, 2},
    {160, 0, 3, 0, 1},
    {120, 0, 3, 0, 0},
    {-80, 0, 2, 0, 3},
    {-480, 0, 2, 0, 2},
    {-840, 0, 2, 0, 1},
    {-400, 0, 2, 0, 0},
    {-40, 0, 1, 0, 2},
    {-160, 0, 1, 0, 1},
    {-80, 0, 1, 0, 0},
    {56, 0, 0, 0, 5},
    {560, 0, 0, 0, 4},
    {2160, 0, 0, 0, 3},
    {4000, 0, 0, 0, 2},
    {3424, 0, 0, 0, 1},
    {960, 0, 0, 0, 0},
};

inline constexpr PolyTerm kMuHexNum[] = {
    {158, 4, 0, 0, 0},
    {-35, 2, 0, 0, 0},
    {-3, 0, 0, 0, 0},
};

inline constexpr PolyTerm kMuHexDen[] = {
    {120, 3, 0, 0, 0},
    {-30, 1, 0, 0, 0},
};

}  // namespace isc
