#pragma once

#include <stdexcept>
#include <string>

namespace isc {

// Base class for all errors thrown by this library.  The what() string of
// every subclass starts with the error name, so callers (and the CLI) can
// report the failure kind without RTTI gymnastics.
struct Error : std::runtime_error {
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

// A parameter that must be >= 1 is zero or negative.
struct NonPositiveParameter : Error {
    explicit NonPositiveParameter(const std::string& detail)
        : Error("NonPositiveParameter: " + detail) {}
};

// (n - p) or (n - q) is odd; the wedge heights t and s would not be integers.
struct ParityViolation : Error {
    explicit ParityViolation(const std::string& detail)
        : Error("ParityViolation: " + detail) {}
};

// max(p, q) exceeds n.
struct OrderViolation : Error {
    explicit OrderViolation(const std::string& detail)
        : Error("OrderViolation: " + detail) {}
};

// Removing an edge class did not split the graph into exactly two components.
struct NotTwoComponents : Error {
    explicit NotTwoComponents(const std::string& detail)
        : Error("NotTwoComponents: " + detail) {}
};

// An integer division that must be exact left a remainder.
struct InexactDivision : Error {
    explicit InexactDivision(const std::string& detail)
        : Error("InexactDivision: " + detail) {}
};

// BFS could not reach every vertex (disconnected graph).
struct UnreachableVertex : Error {
    explicit UnreachableVertex(const std::string& detail)
        : Error("UnreachableVertex: " + detail) {}
};

// An operation needs at least two vertices (e.g. average distance).
struct OrderTooSmall : Error {
    explicit OrderTooSmall(const std::string& detail)
        : Error("OrderTooSmall: " + detail) {}
};

// A rational would be constructed with denominator zero.
struct ZeroDenominator : Error {
    explicit ZeroDenominator(const std::string& detail)
        : Error("ZeroDenominator: " + detail) {}
};

}  // namespace isc
